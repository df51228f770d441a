"""
MÓDULO DE CONFIGURAÇÕES
==========================

O módulo settings gerencia configurações e diretórios do projeto: limites de
corpo finito, paralelismo por grau, nível de log e pastas de relatórios.

Autor: Pedro Henrique Lima Silva
Data de criação: 15/10/2025
Última modificação: 18/10/2026
"""

from __future__ import annotations
from pathlib import Path
import os
from dotenv import load_dotenv

# Define a raiz do projeto (2 níveis acima deste arquivo)
ROOT = Path(__file__).resolve().parents[2]
load_dotenv(ROOT / ".env")

# Diretórios principais (os torna absolutos e normalizados)
LOG_DIR    = Path(os.getenv("LOG_DIR", ROOT / "logs")).resolve()
REPORT_DIR = Path(os.getenv("REPORT_DIR", ROOT / "data/reports")).resolve()

# Flags e configs
LOG_LEVEL        = os.getenv("LOG_LEVEL", "INFO").upper()
MAX_WORKERS      = max(1, int(os.getenv("MAX_WORKERS", "1")))
MAX_FIELD_ORDER  = int(os.getenv("MAX_FIELD_ORDER", str(2**16)))
CHECK_INVARIANTS = os.getenv("CHECK_INVARIANTS", "1") in ("1", "true", "True")

# Versão do esquema JSON dos relatórios (golden files)
SCHEMA_VERSION = 1

# Cria pastas se não existirem
for p in (LOG_DIR, REPORT_DIR):
    p.mkdir(parents=True, exist_ok=True)

"""
MÓDULO DE LOGS
=================

Configura os sinks do loguru (stderr + arquivo rotativo em LOG_DIR). Apenas a
CLI chama configure_logging; os módulos de álgebra só emitem mensagens.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
import sys
from loguru import logger
from .settings import LOG_DIR, LOG_LEVEL

_CONFIGURED = False


def configure_logging(level: str | None = None) -> None:
    global _CONFIGURED
    level = (level or LOG_LEVEL).upper()
    logger.remove()
    logger.add(sys.stderr, level=level, format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}")
    if not _CONFIGURED:
        logger.info(f"Logs em arquivo: {LOG_DIR / 'invariants.log'}")
    logger.add(LOG_DIR / "invariants.log", level="DEBUG", rotation="10 MB", retention=5, encoding="utf-8")
    _CONFIGURED = True

"""
MÓDULO DE IMPRESSÃO DIGITAL DE RELATÓRIOS
=========================================

Gera um hash SHA-256 estável do JSON canônico de um relatório, para que golden
files possam ser comparados byte a byte.

Autor: Pedro Henrique Lima Silva
Data de criação: 15/10/2025
Última modificação: 18/10/2026
"""

from __future__ import annotations
import hashlib
import json
from typing import Any


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def report_fingerprint(payload: dict[str, Any]) -> str:
    """SHA-256 do relatório sem o próprio campo 'fingerprint'."""
    body = {k: v for k, v in payload.items() if k != "fingerprint"}
    return hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()


def with_fingerprint(payload: dict[str, Any]) -> dict[str, Any]:
    out = dict(payload)
    out["fingerprint"] = report_fingerprint(out)
    return out

"""
MÓDULO DE EXPORTAÇÃO DE RELATÓRIOS
====================================

Escreve os relatórios da CLI: JSON canônico (chaves ordenadas, indentação 2,
quebra de linha final) e tabelas polars, impressas ou gravadas em CSV.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
import json
from pathlib import Path
from typing import Any, Sequence

import polars as pl
from loguru import logger

from ..utils.fingerprint import with_fingerprint
from ..utils.settings import REPORT_DIR, SCHEMA_VERSION


def dumps_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def finalize(payload: dict[str, Any]) -> dict[str, Any]:
    """Acrescenta schema e fingerprint, se ainda não houver."""
    if "fingerprint" in payload:
        return payload
    return with_fingerprint({"schema": SCHEMA_VERSION, **payload})


def _cell(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def records_frame(rows: Sequence[dict[str, Any]]) -> pl.DataFrame:
    """DataFrame de linhas de relatório; listas viram texto 'a,b,c' para caber em CSV."""
    if not rows:
        return pl.DataFrame()
    return pl.DataFrame([{k: _cell(v) for k, v in row.items()} for row in rows], infer_schema_length=None)


def print_frame(df: pl.DataFrame) -> None:
    with pl.Config(tbl_rows=-1, tbl_cols=-1, fmt_str_lengths=200, tbl_hide_dataframe_shape=True):
        print(df)


def resolve_report_path(out: str | Path, report_dir: Path | None = None) -> Path:
    """Nome de arquivo sem pasta vai para REPORT_DIR; demais caminhos ficam como vieram."""
    path = Path(out)
    if path.parent == Path("."):
        return (report_dir or REPORT_DIR) / path
    return path


def write_report(
    payload: dict[str, Any],
    frame: pl.DataFrame | None,
    out: str | Path,
    report_dir: Path | None = None,
) -> Path:
    path = resolve_report_path(out, report_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix.lower() == ".csv" and frame is not None:
        frame.write_csv(path)
    else:
        path.write_text(dumps_json(payload), encoding="utf-8")
    logger.success(f"Relatório gravado em {path}")
    return path


def emit(
    payload: dict[str, Any],
    frame: pl.DataFrame | None = None,
    fmt: str = "table",
    out: str | None = None,
    lines: Sequence[str] | None = None,
) -> None:
    """Imprime (tabela, linhas de texto ou JSON) e grava em --out quando pedido."""
    payload = finalize(payload)
    if out:
        write_report(payload, frame, out)
    if fmt == "json":
        print(dumps_json(payload), end="")
    elif lines is not None:
        for line in lines:
            print(line)
    elif frame is not None and frame.height:
        print_frame(frame)
    else:
        print(dumps_json(payload), end="")

"""
MÓDULO DE UTILITÁRIOS PARA LIMPEZA E NORMALIZAÇÃO DE PARÂMETROS
=================================================================

o módulo clean.py normaliza os parâmetros textuais da CLI: composições
("2,1,3"), listas de graus e tags de famílias.

Autor: Pedro Henrique Lima Silva
Data de criação: 15/10/2025
Última modificação: 18/10/2026
"""

from __future__ import annotations
import re


def normalize_tag(tag: str) -> str:
    """'Par-B', ' parb ' e 'PAR_B' viram 'parb'."""
    if tag is None:
        return ""
    s = re.sub(r"[\s_\-]+", "", str(tag))
    return s.lower()


def split_tokens(raw: str | None) -> list[str]:
    if raw is None:
        return []
    return [tok.strip() for tok in re.split(r"[;,]", str(raw)) if tok.strip()]


def parse_int_list(raw: str | None, *, allow_zero: bool = False) -> tuple[int, ...]:
    """Converte "2,1,3" (ou "2;1;3") em (2, 1, 3).

    Erros de formato viram ValueError com a parte ofensiva na mensagem.
    """
    out: list[int] = []
    for tok in split_tokens(raw):
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"parte inválida: {tok!r}") from None
        if v < 0 or (v == 0 and not allow_zero):
            raise ValueError(f"parte inválida: {tok!r}")
        out.append(v)
    if not out:
        raise ValueError("lista vazia")
    return tuple(out)

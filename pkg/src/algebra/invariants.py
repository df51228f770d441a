"""
MÓDULO DE SUBESPAÇOS INVARIANTES E SÉRIES DE HILBERT
=======================================================

Calcula, grau a grau, o subespaço invariante de Q por núcleo exato sobre F_q
(galois.FieldArray.row_reduce) e monta a série de Hilbert verdadeira de Q^G ou
Q^{P_α}, comparando com a série conjecturada.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
import polars as pl
from loguru import logger

from ..utils.fingerprint import with_fingerprint
from ..utils.settings import CHECK_INVARIANTS, MAX_WORKERS, SCHEMA_VERSION
from .action import GroupGeneratorSet, all_group_elements, generator_to_json, is_invariant
from .gf import FieldSpec
from .qring import Monomial, QPolynomial, RingSpec, grlex_key, monomial_basis, to_text
from .qseries import InexactDivisionError, TPoly, conjectured_series, parabolic_conjectured_series


@dataclass(frozen=True)
class GFMatrix:
    field: FieldSpec
    data: Any  # galois.FieldArray 2-D

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: np.ndarray | Sequence[Sequence[int]], cols: int | None = None) -> GFMatrix:
        arr = np.asarray(rows, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0 if len(rows) == 0 else len(rows), cols or 0), dtype=np.int64)
        return cls(F, F.gf(arr))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])


def _pivots(R: np.ndarray) -> list[tuple[int, int]]:
    out = []
    for i in range(R.shape[0]):
        nz = np.flatnonzero(R[i])
        if nz.size:
            out.append((i, int(nz[0])))
    return out


def rref(A: GFMatrix) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """RREF (como inteiros) e pares (linha, coluna pivô)."""
    if A.rows == 0 or A.cols == 0:
        return np.zeros((0, A.cols), dtype=np.int64), []
    R = A.data.row_reduce().view(np.ndarray)
    return R, _pivots(R)


def kernel_basis(A: GFMatrix) -> list[list[int]]:
    """Base de {v : Av = 0} no padrão de variáveis livres (um 1 em cada coluna livre)."""
    F = A.field
    R, pivots = rref(A)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(A.cols):
        if f in pivot_cols:
            continue
        v = [0] * A.cols
        v[f] = 1
        for i, c in pivots:
            v[c] = F.neg(int(R[i, f]))
        basis.append(v)
    return basis


# ----------------------------- spans canônicos -----------------------------

def span_rref(polys: Sequence[QPolynomial]) -> list[QPolynomial]:
    """Forma escalonada reduzida do span, pivôs = monômios líderes em grlex decrescente."""
    polys = [f for f in polys if not f.is_zero]
    if not polys:
        return []
    ring = polys[0].ring
    columns: list[Monomial] = sorted({mono for f in polys for mono in f.terms}, key=grlex_key)
    index = {mono: j for j, mono in enumerate(columns)}
    rows = np.zeros((len(polys), len(columns)), dtype=np.int64)
    for i, f in enumerate(polys):
        for mono, c in f.terms.items():
            rows[i, index[mono]] = c
    R, pivots = rref(GFMatrix.from_rows(ring.field, rows))
    return [
        QPolynomial(ring, {columns[j]: int(R[i, j]) for j in np.flatnonzero(R[i])})
        for i, _ in pivots
    ]


def span_rank(polys: Sequence[QPolynomial]) -> int:
    return len(span_rref(polys))


def spans_equal(a: Sequence[QPolynomial], b: Sequence[QPolynomial]) -> bool:
    return span_rref(a) == span_rref(b)


# ----------------------------- base invariante -----------------------------

def _check_compatible(R: RingSpec, gens: GroupGeneratorSet) -> None:
    if R.cap is None:
        raise ValueError("infinite basis")
    if R.field != gens.field or R.n != gens.n:
        raise ValueError(f"ring mismatch: anel n={R.n} GF({R.field.q}) vs grupo n={gens.n} GF({gens.field.q})")


def invariant_basis(R: RingSpec, gens: GroupGeneratorSet, d: int, prefilter: bool = True) -> list[QPolynomial]:
    _check_compatible(R, gens)
    F, q = R.field, R.field.q
    full = monomial_basis(R, d)
    if not full:
        return []
    if prefilter and q > 2:
        candidates = [mono for mono in full if all(a % (q - 1) == 0 for a in mono)]
    else:
        candidates = full
    if not candidates:
        return []

    index = {mono: i for i, mono in enumerate(full)}
    blocks = []
    for g in gens:
        sub = gens.substitution(R, g)
        block = np.zeros((len(full), len(candidates)), dtype=np.int64)
        for c, mono in enumerate(candidates):
            for img, v in sub.image_of_monomial(mono).terms.items():
                block[index[img], c] = v
            block[index[mono], c] = F.sub(int(block[index[mono], c]), 1)
        blocks.append(block)
    stacked = np.vstack(blocks) if blocks else np.zeros((0, len(candidates)), dtype=np.int64)
    kernel = kernel_basis(GFMatrix.from_rows(F, stacked, cols=len(candidates)))

    polys = [
        QPolynomial(R, {candidates[j]: v for j, v in enumerate(vec) if v})
        for vec in kernel
    ]
    basis = span_rref(polys)
    if CHECK_INVARIANTS:
        for f in basis:
            if not is_invariant(f, gens):
                raise RuntimeError(f"elemento da base não invariante no grau {d}: {to_text(f)}")
    return basis


# ----------------------------- relatório -----------------------------

@dataclass(frozen=True, slots=True)
class DegreeRecord:
    degree: int
    basis: tuple[QPolynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(slots=True)
class InvariantReport:
    ring: RingSpec
    gens: GroupGeneratorSet
    records: list[DegreeRecord]
    computed: TPoly
    conjectured: TPoly | None
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    numerator_start: int = 0
    conjecture_error: str | None = None

    @property
    def match(self) -> bool:
        return self.conjectured is not None and not self.mismatches

    @property
    def dimensions(self) -> list[int]:
        return [r.dimension for r in self.records]

    def params(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "q": self.ring.field.q, "p": self.ring.field.p, "e": self.ring.field.e,
            "n": self.ring.n, "m": self.ring.m, "group": self.gens.kind,
        }
        if self.gens.alpha is not None:
            out["alpha"] = list(self.gens.alpha.parts)
            out["numerator_index"] = self.numerator_start
        return out

    def to_json_dict(self, include_basis: bool = True) -> dict[str, Any]:
        F = self.ring.field
        top = self.ring.top_degree
        payload = {
            "schema": SCHEMA_VERSION,
            "params": self.params(),
            "generators": [generator_to_json(F, g) for g in self.gens] if self.gens.kind != "full" else len(self.gens),
            "series": self.dimensions,
            "conjectured": None if self.conjectured is None else [self.conjectured.coeff(d) for d in range(max(top, self.conjectured.degree) + 1)],
            "degrees": [
                {"d": r.degree, "dim": r.dimension, **({"basis": [to_text(f) for f in r.basis]} if include_basis else {})}
                for r in self.records
            ],
            "match": self.match,
            "mismatches": [{"d": d, "computed": c, "conjectured": k} for d, c, k in self.mismatches],
            "conjecture_error": self.conjecture_error,
        }
        return with_fingerprint(payload)

    def to_frame(self) -> pl.DataFrame:
        conj = self.conjectured
        rows = {
            "degree": [r.degree for r in self.records],
            "computed": self.dimensions,
            "conjectured": [None if conj is None else conj.coeff(r.degree) for r in self.records],
        }
        df = pl.DataFrame(rows, schema={"degree": pl.Int64, "computed": pl.Int64, "conjectured": pl.Int64})
        return df.with_columns((pl.col("computed") - pl.col("conjectured")).alias("diff"))


def _conjecture_for(R: RingSpec, gens: GroupGeneratorSet, numerator_start: int) -> TPoly:
    q = R.field.q
    if gens.kind == "parabolic":
        return parabolic_conjectured_series(q, gens.alpha.parts, R.m, numerator_start)
    return conjectured_series(q, R.n, R.m)


def compare_series(computed: TPoly, conjectured: TPoly, top: int) -> list[tuple[int, int, int]]:
    upto = max(top, computed.degree, conjectured.degree)
    return [
        (d, computed.coeff(d), conjectured.coeff(d))
        for d in range(upto + 1)
        if computed.coeff(d) != conjectured.coeff(d)
    ]


def hilbert_series(
    R: RingSpec,
    gens: GroupGeneratorSet,
    *,
    numerator_start: int = 0,
    prefilter: bool = True,
    workers: int | None = None,
) -> InvariantReport:
    _check_compatible(R, gens)
    top = R.top_degree
    workers = workers or MAX_WORKERS
    logger.info(f"Série de Hilbert de Q^G: q={R.field.q}, n={R.n}, m={R.m}, grupo={gens.describe()}, {len(gens)} geradores, graus 0..{top}")

    def one(d: int) -> DegreeRecord:
        basis = invariant_basis(R, gens, d, prefilter=prefilter)
        if basis:
            logger.debug(f"grau {d}: dim {len(basis)}")
        return DegreeRecord(d, tuple(basis))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(one, range(top + 1)))
    else:
        records = [one(d) for d in range(top + 1)]

    computed = TPoly.from_coeffs([r.dimension for r in records])
    conjectured, error = None, None
    try:
        conjectured = _conjecture_for(R, gens, numerator_start)
    except InexactDivisionError as exc:
        error = str(exc)
        logger.warning(f"série conjecturada indisponível (numerador j={numerator_start}): {error}")

    mismatches = [] if conjectured is None else compare_series(computed, conjectured, top)
    report = InvariantReport(R, gens, records, computed, conjectured, mismatches, numerator_start, error)
    if report.match:
        logger.success(f"Série calculada confere com a conjecturada: {computed}")
    elif conjectured is not None:
        logger.warning(f"Divergência nos graus {[d for d, _, _ in mismatches]}")
    return report


def full_group_dimensions(R: RingSpec) -> list[int]:
    """Dimensões por grau usando todos os elementos de GL_n(F_q), sem pré-filtro."""
    gens = all_group_elements(R.field, R.n)
    return [len(invariant_basis(R, gens, d, prefilter=False)) for d in range(R.top_degree + 1)]

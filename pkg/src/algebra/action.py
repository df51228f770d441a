"""
MÓDULO DE AÇÃO DE GRUPOS LINEARES
===================================

Monta conjuntos finitos de geradores para GL_n(F_q) e para os parabólicos P_α
(matrizes triangulares superiores por blocos) e testa invariância de
polinômios sob esses geradores.

Convenção das matrizes: x_j -> Σ_i M[i][j] x_i. A transvecção x_i -> x_i + c x_j
tem c na linha j, coluna i; com j < i ela é triangular superior.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
import itertools
from typing import Any, Literal, Sequence

import numpy as np
from loguru import logger

from ..utils.clean import parse_int_list
from .gf import FieldSpec
from .qring import LinearSubstitution, Matrix, QPolynomial

GroupKind = Literal["GL", "parabolic", "full"]


@dataclass(frozen=True, slots=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(a < 1 for a in self.parts):
            raise ValueError(f"composição inválida: {self.parts}")

    @classmethod
    def parse(cls, raw: str | Sequence[int]) -> Composition:
        if isinstance(raw, str):
            return cls(parse_int_list(raw))
        return cls(tuple(int(a) for a in raw))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """(A_0, A_1, ..., A_l) com A_0 = 0 e A_l = n."""
        return tuple(itertools.accumulate(self.parts, initial=0))

    def block(self, r: int) -> range:
        """Índices (a partir de 1) das variáveis do bloco r (a partir de 1)."""
        A = self.partial_sums
        return range(A[r - 1] + 1, A[r] + 1)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)


@dataclass(frozen=True, slots=True)
class GroupGenerator:
    label: str
    matrix: Matrix


@dataclass(frozen=True)
class GroupGeneratorSet:
    field: FieldSpec
    n: int
    kind: GroupKind
    generators: tuple[GroupGenerator, ...]
    alpha: Composition | None = None

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def labels(self) -> list[str]:
        return [g.label for g in self.generators]

    @cached_property
    def substitutions(self) -> dict:
        # um LinearSubstitution por (anel, gerador), com cache de potências
        return {}

    def substitution(self, ring, gen: GroupGenerator) -> LinearSubstitution:
        key = (ring, gen.matrix)
        sub = self.substitutions.get(key)
        if sub is None:
            sub = LinearSubstitution(ring, gen.matrix)
            self.substitutions[key] = sub
        return sub

    def describe(self) -> str:
        if self.kind == "parabolic":
            return f"P_({self.alpha})"
        if self.kind == "full":
            return f"GL_{self.n}(F_{self.field.q}) [todos os elementos]"
        return f"GL_{self.n}(F_{self.field.q})"


# ----------------------------- matrizes -----------------------------

def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def permutation_matrix(n: int, images: Sequence[int]) -> Matrix:
    """x_j -> x_{images[j-1]} (índices a partir de 1)."""
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(images):
        rows[i - 1][j] = 1
    return tuple(tuple(r) for r in rows)


def transvection(n: int, i: int, j: int, c: int = 1) -> Matrix:
    """x_i -> x_i + c x_j (índices a partir de 1)."""
    if i == j:
        raise ValueError("transvecção exige i != j")
    rows = [list(r) for r in identity_matrix(n)]
    rows[j - 1][i - 1] = c
    return tuple(tuple(r) for r in rows)


def diagonal_matrix(diag: Sequence[int]) -> Matrix:
    n = len(diag)
    return tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))


def matrix_mul(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for t in range(k):
                if A[i][t] and B[t][j]:
                    acc = F.add(acc, F.mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def determinant(F: FieldSpec, M: Matrix) -> int:
    arr = F.gf(np.array(M, dtype=np.int64))
    return int(np.linalg.det(arr))


def is_invertible(F: FieldSpec, M: Matrix) -> bool:
    return determinant(F, M) != 0


def matrix_to_json(F: FieldSpec, M: Matrix) -> list[list[Any]]:
    if F.e == 1:
        return [list(row) for row in M]
    return [[list(F.element(v).coeffs) for v in row] for row in M]


def matrix_from_json(F: FieldSpec, rows: list[list[Any]]) -> Matrix:
    if F.e == 1:
        return tuple(tuple(int(v) for v in row) for row in rows)
    return tuple(tuple(sum(c * F.p**i for i, c in enumerate(v)) for v in row) for row in rows)


def generator_to_json(F: FieldSpec, gen: GroupGenerator) -> dict[str, Any]:
    return {"label": gen.label, "matrix": matrix_to_json(F, gen.matrix)}


def generator_from_json(F: FieldSpec, payload: dict[str, Any]) -> GroupGenerator:
    return GroupGenerator(payload["label"], matrix_from_json(F, payload["matrix"]))


# ----------------------------- geradores -----------------------------

def _diag_at(F: FieldSpec, n: int, pos: int) -> GroupGenerator:
    diag = [1] * n
    diag[pos - 1] = F.primitive
    return GroupGenerator(f"diag(γ@{pos})", diagonal_matrix(diag))


def _swap(n: int, a: int, b: int) -> GroupGenerator:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return GroupGenerator(f"swap({a},{b})", permutation_matrix(n, images))


def _transvection_gen(n: int, i: int, j: int) -> GroupGenerator:
    return GroupGenerator(f"x{i}->x{i}+x{j}", transvection(n, i, j))


def gl_generators(F: FieldSpec, n: int) -> GroupGeneratorSet:
    if n < 1:
        raise ValueError("n deve ser >= 1")
    gens: list[GroupGenerator] = []
    if F.q > 2:
        gens.append(_diag_at(F, n, 1))
    if n >= 2:
        gens.append(_swap(n, 1, 2))
    if n >= 3:
        images = [j % n + 1 for j in range(1, n + 1)]
        gens.append(GroupGenerator(f"cycle(1..{n})", permutation_matrix(n, images)))
    if n >= 2:
        gens.append(_transvection_gen(n, 1, 2))
    logger.debug(f"GL_{n}(F_{F.q}): {len(gens)} geradores")
    return GroupGeneratorSet(F, n, "GL", tuple(gens))


def parabolic_generators(F: FieldSpec, alpha: Composition) -> GroupGeneratorSet:
    n = alpha.n
    gens: list[GroupGenerator] = []
    if F.q > 2:
        for r in range(1, alpha.length + 1):
            gens.append(_diag_at(F, n, alpha.block(r).start))
    for r in range(1, alpha.length + 1):
        block = alpha.block(r)
        for k in block[:-1]:
            gens.append(_swap(n, k, k + 1))
    for i in range(2, n + 1):
        for j in range(1, i):
            gens.append(_transvection_gen(n, i, j))
    logger.debug(f"P_({alpha}) sobre F_{F.q}: {len(gens)} geradores")
    return GroupGeneratorSet(F, n, "parabolic", tuple(gens), alpha)


def all_group_elements(F: FieldSpec, n: int) -> GroupGeneratorSet:
    """Todos os elementos de GL_n(F_q); oráculo de força bruta."""
    gens = []
    for entries in itertools.product(F.elements(), repeat=n * n):
        M = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if is_invertible(F, M):
            gens.append(GroupGenerator(f"g{len(gens)}", M))
    logger.debug(f"GL_{n}(F_{F.q}) enumerado: {len(gens)} elementos")
    return GroupGeneratorSet(F, n, "full", tuple(gens))


def with_extra(gens: GroupGeneratorSet, extra: Sequence[GroupGenerator]) -> GroupGeneratorSet:
    return GroupGeneratorSet(gens.field, gens.n, gens.kind, gens.generators + tuple(extra), gens.alpha)


# ----------------------------- invariância -----------------------------

def is_invariant(f: QPolynomial, gens: GroupGeneratorSet) -> bool:
    if f.ring.field != gens.field or f.ring.n != gens.n:
        raise ValueError(f"ring mismatch: anel n={f.ring.n} GF({f.ring.field.q}) vs grupo n={gens.n} GF({gens.field.q})")
    return all(gens.substitution(f.ring, g)(f) == f for g in gens)

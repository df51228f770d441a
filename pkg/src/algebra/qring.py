"""
MÓDULO DO ANEL DE POLINÔMIOS TRUNCADO
=====================================

Polinômios esparsos em n variáveis sobre F_q, com truncamento opcional pelo
ideal de potências de Frobenius (x_i^{q^m}). Sem teto temos o anel S; com teto
q^m temos Q = S/m^[q^m].

Convenções:
- coeficientes são inteiros na codificação do FieldSpec (nunca zero nos termos);
- a ordem canônica é grlex decrescente com x1 > x2 > ... > xn;
- a matriz M age por x_j -> Σ_i M[i][j] x_i (a coluna j é a imagem de x_j).

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass
import threading
from typing import Iterable, Mapping, Sequence

from .gf import FieldSpec

Monomial = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class RingSpec:
    field: FieldSpec
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n deve ser >= 1")
        if self.m is not None and self.m < 1:
            raise ValueError("m deve ser >= 1")

    @property
    def cap(self) -> int | None:
        return None if self.m is None else self.field.q**self.m

    @property
    def top_degree(self) -> int:
        if self.cap is None:
            raise ValueError("infinite basis")
        return self.n * (self.cap - 1)

    def with_m(self, m: int | None) -> RingSpec:
        return RingSpec(self.field, self.n, m)

    def allows(self, mono: Monomial) -> bool:
        cap = self.cap
        return cap is None or all(a < cap for a in mono)


@dataclass(frozen=True, slots=True)
class QPolynomial:
    ring: RingSpec
    terms: Mapping[Monomial, int]

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    # operadores delegam às funções do módulo
    def __add__(self, other: QPolynomial) -> QPolynomial:
        return poly_add(self, other)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return poly_sub(self, other)

    def __neg__(self) -> QPolynomial:
        return poly_neg(self)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        return poly_mul(self, other)

    def __pow__(self, k: int) -> QPolynomial:
        return poly_pow(self, k)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return to_text(self)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Grau total máximo; -1 para o polinômio nulo."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1


# ----------------------------- construtores -----------------------------

def zero(ring: RingSpec) -> QPolynomial:
    return QPolynomial(ring, {})


def constant(ring: RingSpec, c: int = 1) -> QPolynomial:
    return monomial(ring, (0,) * ring.n, c)


def monomial(ring: RingSpec, exps: Sequence[int], c: int = 1) -> QPolynomial:
    exps = tuple(int(a) for a in exps)
    if len(exps) != ring.n:
        raise ValueError(f"monômio com {len(exps)} expoentes em anel com n={ring.n}")
    if c == 0 or not ring.allows(exps):
        return zero(ring)
    return QPolynomial(ring, {exps: c})


def variable(ring: RingSpec, i: int) -> QPolynomial:
    """x_i com i a partir de 1."""
    exps = [0] * ring.n
    exps[i - 1] = 1
    return monomial(ring, exps)


def from_terms(ring: RingSpec, items: Iterable[tuple[Sequence[int], int]]) -> QPolynomial:
    """Soma termos (expoentes, coeficiente), descartando zeros e monômios fora do teto."""
    F = ring.field
    out: dict[Monomial, int] = {}
    for exps, c in items:
        exps = tuple(exps)
        if len(exps) != ring.n:
            raise ValueError("dimension mismatch")
        if c == 0 or not ring.allows(exps):
            continue
        accumulate_term(out, exps, c, F)
    return QPolynomial(ring, out)


def accumulate_term(out: dict[Monomial, int], mono: Monomial, c: int, F: FieldSpec) -> None:
    prev = out.get(mono)
    s = c if prev is None else F.add(prev, c)
    if s:
        out[mono] = s
    else:
        out.pop(mono, None)


def _check_same_ring(f: QPolynomial, g: QPolynomial) -> None:
    if f.ring != g.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")


# ----------------------------- aritmética -----------------------------

def poly_add(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    _check_same_ring(f, g)
    out = dict(f.terms)
    for mono, c in g.terms.items():
        accumulate_term(out, mono, c, f.ring.field)
    return QPolynomial(f.ring, out)


def poly_neg(f: QPolynomial) -> QPolynomial:
    F = f.ring.field
    return QPolynomial(f.ring, {mono: F.neg(c) for mono, c in f.terms.items()})


def poly_sub(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    return poly_add(f, poly_neg(g))


def poly_scale(f: QPolynomial, c: int) -> QPolynomial:
    if c == 0:
        return zero(f.ring)
    F = f.ring.field
    return QPolynomial(f.ring, {mono: F.mul(v, c) for mono, v in f.terms.items()})


def poly_mul(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    _check_same_ring(f, g)
    F = f.ring.field
    cap = f.ring.cap
    out: dict[Monomial, int] = {}
    for ea, ca in f.terms.items():
        for eb, cb in g.terms.items():
            mono = tuple(a + b for a, b in zip(ea, eb))
            if cap is not None and any(a >= cap for a in mono):
                continue
            accumulate_term(out, mono, F.mul(ca, cb), F)
    return QPolynomial(f.ring, out)


def poly_pow(f: QPolynomial, k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("expoente negativo")
    result = constant(f.ring)
    base = f
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


# ----------------------------- graus e bases -----------------------------

def monomial_basis(ring: RingSpec, d: int) -> list[Monomial]:
    """Monômios de grau d com expoentes em [0, q^m - 1], em ordem grlex decrescente.

    Como o grau é fixo, a ordem coincide com a lex decrescente.
    """
    if ring.cap is None:
        raise ValueError("infinite basis")
    top = ring.cap - 1
    if d < 0 or d > ring.n * top:
        return []
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        hi = min(top, remaining)
        lo = max(0, remaining - top * (slots - 1))
        for a in range(hi, lo - 1, -1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], d, ring.n)
    return out


def graded_component(f: QPolynomial, d: int) -> QPolynomial:
    return QPolynomial(f.ring, {mono: c for mono, c in f.terms.items() if sum(mono) == d})


def project_to_Q(f: QPolynomial, m: int) -> QPolynomial:
    if f.ring.m is not None:
        raise ValueError("project_to_Q espera um polinômio do anel sem teto")
    target = f.ring.with_m(m)
    return QPolynomial(target, {mono: c for mono, c in f.terms.items() if target.allows(mono)})


def lift_to_S(f: QPolynomial) -> QPolynomial:
    """Mesmos termos, vistos no anel sem teto (inverso à direita de project_to_Q)."""
    return QPolynomial(f.ring.with_m(None), dict(f.terms))


def grlex_key(mono: Monomial) -> tuple:
    return (-sum(mono), tuple(-a for a in mono))


def sorted_terms(f: QPolynomial) -> list[tuple[Monomial, int]]:
    return sorted(f.terms.items(), key=lambda item: grlex_key(item[0]))


def leading_term(f: QPolynomial) -> tuple[Monomial, int] | None:
    if f.is_zero:
        return None
    mono = min(f.terms, key=grlex_key)
    return mono, f.terms[mono]


# ----------------------------- substituição linear -----------------------------

class LinearSubstitution:
    """Aplica x_j -> Σ_i M[i][j] x_i guardando as potências já calculadas de cada forma linear."""

    def __init__(self, ring: RingSpec, M: Matrix):
        n = ring.n
        if len(M) != n or any(len(row) != n for row in M):
            raise ValueError(f"dimension mismatch: matriz {len(M)}x{len(M[0]) if M else 0} para n={n}")
        self.ring = ring
        self.M = M
        self._forms = []
        for j in range(n):
            items = []
            for i in range(n):
                if M[i][j]:
                    exps = [0] * n
                    exps[i] = 1
                    items.append((tuple(exps), M[i][j]))
            self._forms.append(from_terms(ring, items))
        self._powers: list[list[QPolynomial]] = [[constant(ring), form] for form in self._forms]
        self._lock = threading.Lock()

    def power(self, j: int, k: int) -> QPolynomial:
        cache = self._powers[j]
        if k < len(cache):
            return cache[k]
        with self._lock:
            while len(cache) <= k:
                cache.append(poly_mul(cache[-1], self._forms[j]))
        return cache[k]

    def image_of_monomial(self, mono: Monomial) -> QPolynomial:
        acc = constant(self.ring)
        for j, a in enumerate(mono):
            if a:
                acc = poly_mul(acc, self.power(j, a))
                if acc.is_zero:
                    break
        return acc

    def __call__(self, f: QPolynomial) -> QPolynomial:
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        F = self.ring.field
        out: dict[Monomial, int] = {}
        for mono, c in f.terms.items():
            for img, v in self.image_of_monomial(mono).terms.items():
                accumulate_term(out, img, F.mul(c, v), F)
        return QPolynomial(self.ring, out)


def substitute_linear(f: QPolynomial, M: Matrix) -> QPolynomial:
    return LinearSubstitution(f.ring, M)(f)


# ----------------------------- texto -----------------------------

def format_coefficient(c: int, F: FieldSpec) -> str:
    if F.e == 1:
        return str(c)
    return "[" + ",".join(str(d) for d in F.element(c).coeffs) + "]"


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, a in enumerate(mono, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def to_text(f: QPolynomial) -> str:
    if f.is_zero:
        return "0"
    F = f.ring.field
    chunks = []
    for mono, c in sorted_terms(f):
        body = format_monomial(mono)
        if not body:
            chunks.append(format_coefficient(c, F))
        elif c == 1:
            chunks.append(body)
        else:
            chunks.append(f"{format_coefficient(c, F)}*{body}")
    return " + ".join(chunks)

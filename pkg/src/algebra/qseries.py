"""
MÓDULO DE SÉRIES EM t E q-BINOMIAIS
=====================================

Polinômios em t com coeficientes inteiros (séries de Hilbert), q-binomiais
gaussianos, multinomiais [n sobre α], as séries conjecturadas para GL_n e para
os parabólicos P_α, e a análise do polinômio f(t) = [3 sobre 2]_{q,t}.

TPoly é um invólucro fino sobre sympy.Poly em ZZ; a divisão exata usa exquo.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass
import itertools
from typing import Any, Iterable, Sequence

from loguru import logger
from sympy import Poly, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from .families import rep_decompose
from .gf import parse_prime_power

t = Symbol("t")


class InexactDivisionError(ValueError):
    def __init__(self, num: TPoly | None = None, den: TPoly | None = None):
        super().__init__("inexact division")
        self.num = num
        self.den = den


@dataclass(frozen=True, slots=True)
class TPoly:
    poly: Poly

    # ----------------------------- construção -----------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> TPoly:
        """Coeficientes densos do grau 0 para cima."""
        return cls(Poly.from_list(list(reversed([int(c) for c in coeffs])) or [0], t, domain=ZZ))

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> TPoly:
        if not coeffs:
            return cls.zero()
        dense = [0] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            dense[d] += c
        return cls.from_coeffs(dense)

    @classmethod
    def zero(cls) -> TPoly:
        return cls(Poly(0, t, domain=ZZ))

    @classmethod
    def one(cls) -> TPoly:
        return cls.monomial(0)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> TPoly:
        if k < 0:
            raise ValueError("grau negativo")
        return cls(Poly(c * t**k, t, domain=ZZ))

    @classmethod
    def one_minus(cls, k: int) -> TPoly:
        """1 - t^k."""
        return cls(Poly(1 - t**k, t, domain=ZZ))

    # ----------------------------- consulta -----------------------------

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else int(self.poly.degree())

    def coeff(self, d: int) -> int:
        if d < 0 or d > self.degree:
            return 0
        return int(self.poly.nth(d))

    def coeffs(self) -> list[int]:
        if self.is_zero:
            return []
        return [int(c) for c in reversed(self.poly.all_coeffs())]

    def support(self) -> list[int]:
        return [d for d, c in enumerate(self.coeffs()) if c]

    # ----------------------------- aritmética -----------------------------

    def __add__(self, other: TPoly) -> TPoly:
        return TPoly(self.poly + other.poly)

    def __sub__(self, other: TPoly) -> TPoly:
        return TPoly(self.poly - other.poly)

    def __mul__(self, other: TPoly) -> TPoly:
        return TPoly(self.poly * other.poly)

    def __pow__(self, k: int) -> TPoly:
        return TPoly(self.poly**k)

    def shift(self, k: int) -> TPoly:
        return self * TPoly.monomial(k)

    def __str__(self) -> str:
        return to_text(self)


def to_text(f: TPoly) -> str:
    if f.is_zero:
        return "0"
    chunks = []
    for d, c in enumerate(f.coeffs()):
        if not c:
            continue
        mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
        if d == 0:
            chunks.append(str(c))
        elif c == 1:
            chunks.append(mono)
        else:
            chunks.append(f"{c}*{mono}")
    return " + ".join(chunks)


def tpoly_sum(items: Iterable[TPoly]) -> TPoly:
    acc = TPoly.zero()
    for item in items:
        acc = acc + item
    return acc


def tpoly_product(items: Iterable[TPoly]) -> TPoly:
    acc = TPoly.one()
    for item in items:
        acc = acc * item
    return acc


def tpoly_exact_div(num: TPoly, den: TPoly) -> TPoly:
    if den.is_zero:
        raise ZeroDivisionError("division by zero")
    try:
        return TPoly(num.poly.exquo(den.poly))
    except ExactQuotientFailed:
        raise InexactDivisionError(num, den) from None


# ----------------------------- q-binomiais -----------------------------

def _check_nonnegative(f: TPoly, what: str) -> TPoly:
    if any(c < 0 for c in f.coeffs()):
        raise ValueError(f"{what} com coeficiente negativo: {f}")
    return f


def qbinom(m: int, k: int, q: int) -> TPoly:
    if not 0 <= k <= m:
        raise ValueError(f"qbinom exige 0 <= k <= m (m={m}, k={k})")
    num = tpoly_product(TPoly.one_minus(q**m - q**i) for i in range(k))
    den = tpoly_product(TPoly.one_minus(q**k - q**i) for i in range(k))
    return _check_nonnegative(tpoly_exact_div(num, den), f"[{m} sobre {k}]_{q}")


def conjectured_series(q: int, n: int, m: int) -> TPoly:
    parse_prime_power(q)
    if n < 1 or m < 1:
        raise ValueError("n e m devem ser >= 1")
    return tpoly_sum(
        qbinom(m, k, q).shift((n - k) * (q**m - q**k)) for k in range(min(n, m) + 1)
    )


def k1_term(q: int, n: int, m: int) -> TPoly:
    return qbinom(m, 1, q).shift((n - 1) * (q**m - q))


@dataclass(frozen=True, slots=True)
class BetaVector:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < 0 for b in self.parts):
            raise ValueError(f"β com parte negativa: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """(B_1, ..., B_l)."""
        return tuple(itertools.accumulate(self.parts))

    def fits_in(self, alpha: Sequence[int]) -> bool:
        return len(alpha) == len(self.parts) and all(b <= a for b, a in zip(self.parts, alpha))

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.parts) + ")"


def gaussian_multinomial(m: int, beta: BetaVector | Sequence[int], q: int, numerator_start: int = 0) -> TPoly:
    """[m sobre (β_1, ..., β_l, m - |β|)]_{q,t}.

    O numerador percorre j = numerator_start .. m-1. Com numerator_start=0 o
    caso de uma parte coincide com qbinom; com 1 a divisão em geral não é exata.
    """
    beta = beta if isinstance(beta, BetaVector) else BetaVector(tuple(beta))
    if beta.size > m:
        raise ValueError(f"|β| = {beta.size} > m = {m}")
    parts = beta.parts + (m - beta.size,)
    A = tuple(itertools.accumulate(parts, initial=0))
    num = tpoly_product(TPoly.one_minus(q**m - q**j) for j in range(numerator_start, m))
    den = tpoly_product(
        TPoly.one_minus(q**A[i + 1] - q**(A[i] + j))
        for i, part in enumerate(parts)
        for j in range(part)
    )
    return _check_nonnegative(tpoly_exact_div(num, den), f"[{m} sobre {beta}]")


def e_exponent(m: int, alpha: Sequence[int], beta: BetaVector, q: int) -> int:
    return sum((a - b) * (q**m - q**B) for a, b, B in zip(alpha, beta.parts, beta.partial_sums))


def beta_vectors(alpha: Sequence[int], m: int) -> list[BetaVector]:
    """Todos os β <= α com |β| <= m, em ordem lexicográfica na caixa ∏[0, α_i]."""
    boxes = [range(a + 1) for a in alpha]
    return [BetaVector(b) for b in itertools.product(*boxes) if sum(b) <= m]


@dataclass(frozen=True, slots=True)
class BetaTerm:
    beta: BetaVector
    exponent: int
    multinomial: TPoly

    @property
    def term(self) -> TPoly:
        return self.multinomial.shift(self.exponent)


def parabolic_series_terms(q: int, alpha: Sequence[int], m: int, numerator_start: int = 0) -> list[BetaTerm]:
    if m < 1:
        raise ValueError("m deve ser >= 1")
    return [
        BetaTerm(beta, e_exponent(m, alpha, beta, q), gaussian_multinomial(m, beta, q, numerator_start))
        for beta in beta_vectors(alpha, m)
    ]


def parabolic_conjectured_series(q: int, alpha: Sequence[int], m: int, numerator_start: int = 0) -> TPoly:
    alpha = tuple(getattr(alpha, "parts", alpha))
    return tpoly_sum(term.term for term in parabolic_series_terms(q, alpha, m, numerator_start))


# ----------------------------- análise de f(t) -----------------------------

def f_support_analysis(q: int) -> dict[str, Any]:
    """Checa f(t) = [3 sobre 2]_{q,t}: coeficientes 0/1, critério de representação e palindromia."""
    f = qbinom(3, 2, q)
    top = 2 * (q**3 - q**2)
    coeffs = [f.coeff(a) for a in range(top + 1)]
    binary = all(c in (0, 1) for c in coeffs)
    bad_repr = [
        a for a in range(q**3 - q**2 + 1)
        if (coeffs[a] == 1) != (rep_decompose(q, a) is not None)
    ]
    palindromic = all(coeffs[a] == coeffs[top - a] for a in range(top + 1))
    report = {
        "q": q,
        "degree": f.degree,
        "support": f.support(),
        "binary_coefficients": binary,
        "representation_criterion": not bad_repr,
        "representation_failures": bad_repr,
        "palindromic": palindromic,
        "ok": binary and not bad_repr and palindromic and f.degree == top,
    }
    if not report["ok"]:
        logger.warning(f"f(t) para q={q} falhou em alguma checagem: {report}")
    return report


def truncated_power_scalar(q: int) -> dict[str, Any]:
    """Coeficiente de t^{q²+q} em (1 + t + ... + t^q)^{2q-1}, reduzido mod p."""
    p, _ = parse_prime_power(q)
    base = TPoly.from_coeffs([1] * (q + 1))
    value = (base ** (2 * q - 1)).coeff(q * q + q)
    residue = value % p
    return {"q": q, "p": p, "coefficient": value, "mod_p": residue, "is_minus_one": residue == p - 1}


def binary_coefficient_probe(q: int, n: int) -> dict[str, Any]:
    """[n+1 sobre n]_{q,t} tem apenas coeficientes 0/1?"""
    f = qbinom(n + 1, n, q)
    coeffs = f.coeffs()
    return {"q": q, "n": n, "degree": f.degree, "max_coefficient": max(coeffs), "binary": set(coeffs) <= {0, 1}}


def coefficient_profile(q: int, m: int, k: int = 2) -> dict[int, int]:
    """Quantos graus têm cada valor de coeficiente em [m sobre k]_{q,t}."""
    profile: dict[int, int] = {}
    for c in qbinom(m, k, q).coeffs():
        profile[c] = profile.get(c, 0) + 1
    return dict(sorted(profile.items()))

"""
MÓDULO DE ARITMÉTICA EM CORPOS FINITOS
=========================================

O módulo gf implementa a aritmética exata em GF(p^e) (inclusive q não primo)
e o binomial de Lucas mod p.

Os escalares circulam como inteiros na codificação Σ c_i p^i, a mesma usada
pelo galois; as tabelas exp/log/Zech são montadas uma vez por corpo a partir de
um galois.GF com o módulo escolhido aqui.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
import itertools

import galois
import numpy as np
from loguru import logger
from sympy import factorint, isprime

from ..utils.settings import MAX_FIELD_ORDER


@dataclass(frozen=True, slots=True)
class FieldElement:
    """Vetor de coeficientes (grau baixo primeiro) de uma classe mod o módulo."""

    coeffs: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]
    q: int
    gf: type = field(compare=False, repr=False)
    exp_table: tuple[int, ...] = field(compare=False, repr=False)
    log_table: tuple[int, ...] = field(compare=False, repr=False)
    zech_table: tuple[int, ...] = field(compare=False, repr=False)
    neg_table: tuple[int, ...] = field(compare=False, repr=False)

    # ----------------------------- codificação -----------------------------

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.q:
            raise ValueError(f"inteiro fora de GF({self.q}): {value}")
        digits = []
        for _ in range(self.e):
            value, d = divmod(value, self.p)
            digits.append(d)
        return FieldElement(tuple(digits))

    def encode(self, a: FieldElement) -> int:
        if len(a.coeffs) != self.e or any(not 0 <= c < self.p for c in a.coeffs):
            raise ValueError(f"elemento não canônico para GF({self.q}): {a.coeffs}")
        return sum(c * self.p**i for i, c in enumerate(a.coeffs))

    def from_int(self, c: int) -> int:
        """Imagem do inteiro c no subcorpo primo."""
        return c % self.p

    @property
    def primitive(self) -> int:
        return self.exp_table[1] if self.q > 2 else 1

    # ----------------------------- aritmética -----------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        n = self.q - 1
        la = self.log_table[a]
        z = self.zech_table[(self.log_table[b] - la) % n]
        if z < 0:
            return 0
        return self.exp_table[(la + z) % n]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return (a * b) % self.p
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] * k) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)


# ----------------------------- construção -----------------------------

def _monic(coeffs_low_first: tuple[int, ...], GFp: type) -> galois.Poly:
    return galois.Poly(list(coeffs_low_first) + [1], field=GFp, order="asc")


def _is_irreducible(coeffs_low_first: tuple[int, ...], p: int, GFp: type) -> bool:
    """Divisão por todos os mônicos de grau 1..e//2."""
    f = _monic(coeffs_low_first, GFp)
    e = len(coeffs_low_first)
    for deg in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if int(f % _monic(tail, GFp)) == 0:
                return False
    return True


def _smallest_irreducible(p: int, e: int, GFp: type) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=e):
        if tail[0] == 0 and e > 1:
            continue  # divisível por x
        if _is_irreducible(tail, p, GFp):
            return tail + (1,)
    raise RuntimeError(f"nenhum irredutível de grau {e} sobre GF({p})")


def parse_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError("not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError("not a prime power")
    (p, e), = fac.items()
    return int(p), int(e)


@lru_cache(maxsize=None)
def make_field(p: int, e: int) -> FieldSpec:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError("not prime")
    if not isinstance(e, int) or e <= 0:
        raise ValueError("bad extension degree")
    q = p**e
    if q > MAX_FIELD_ORDER:
        raise ValueError(f"field too large: q={q} > {MAX_FIELD_ORDER}")

    GFp = galois.GF(p)
    if e == 1:
        modulus = (0, 1)
        GF = GFp
    else:
        modulus = _smallest_irreducible(p, e, GFp)
        GF = galois.GF(q, irreducible_poly=galois.Poly(list(modulus), field=GFp, order="asc"))

    gamma = GF.primitive_element
    powers = gamma ** np.arange(q - 1)
    exp_table = tuple(int(v) for v in powers.view(np.ndarray).tolist())
    log_table = [-1] * q
    for k, v in enumerate(exp_table):
        log_table[v] = k
    one_plus = (powers + GF(1)).view(np.ndarray).tolist()
    zech_table = tuple(log_table[int(v)] for v in one_plus)
    neg_table = tuple(int(v) for v in (-GF.elements).view(np.ndarray).tolist())

    logger.debug(f"GF({q}) montado: módulo={modulus}, primitivo={exp_table[1] if q > 2 else 1}")
    return FieldSpec(
        p=p, e=e, modulus=modulus, q=q, gf=GF,
        exp_table=exp_table, log_table=tuple(log_table),
        zech_table=zech_table, neg_table=neg_table,
    )


def field_for_order(q: int) -> FieldSpec:
    p, e = parse_prime_power(q)
    return make_field(p, e)


# ----------------------------- operações com FieldElement -----------------------------

def field_add(a: FieldElement, b: FieldElement, F: FieldSpec) -> FieldElement:
    return F.element(F.add(F.encode(a), F.encode(b)))


def field_mul(a: FieldElement, b: FieldElement, F: FieldSpec) -> FieldElement:
    return F.element(F.mul(F.encode(a), F.encode(b)))


def field_inv(a: FieldElement, F: FieldSpec) -> FieldElement:
    return F.element(F.inv(F.encode(a)))


def lucas_binomial(N: int, M: int, p: int) -> int:
    if N < 0 or M < 0:
        raise ValueError("binomial com argumento negativo")
    out = 1
    while M:
        n_i, m_i = N % p, M % p
        if m_i > n_i:
            return 0
        out = out * _small_binomial(n_i, m_i, p) % p
        N //= p
        M //= p
    return out


@lru_cache(maxsize=4096)
def _small_binomial(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p

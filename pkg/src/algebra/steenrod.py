"""
MÓDULO DOS OPERADORES DE STEENROD
===================================

Operador total P(ξ)(f) = f(x_1 + x_1^q ξ, ..., x_n + x_n^q ξ) em S e em Q,
extração de P^i e os verificadores das identidades e conjecturas sobre a
família y_{k'} (n = 2).

ξ é representado estruturalmente: a expansão é uma lista de componentes por
grau em ξ, nunca uma variável extra do anel.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass
import itertools
from typing import Any

import numpy as np
from loguru import logger

from .action import GroupGeneratorSet, is_invariant
from .families import L_bound, y_kprime
from .gf import FieldSpec, lucas_binomial, parse_prime_power
from .qring import (
    Monomial,
    QPolynomial,
    RingSpec,
    accumulate_term,
    from_terms,
    monomial,
    poly_add,
    poly_mul,
    poly_scale,
    zero,
)


@dataclass(frozen=True, slots=True)
class SteenrodExpansion:
    components: tuple[QPolynomial, ...]

    def component(self, i: int) -> QPolynomial:
        if 0 <= i < len(self.components):
            return self.components[i]
        return zero(self.components[0].ring)


def _variable_options(a: int, q: int, p: int, cap: int | None) -> list[tuple[int, int, int]]:
    """(j, expoente, coeficiente mod p) de (x + x^q ξ)^a = Σ_j C(a,j) x^{a+(q-1)j} ξ^j."""
    out = []
    for j in range(a + 1):
        exp = a + (q - 1) * j
        if cap is not None and exp >= cap:
            break
        c = lucas_binomial(a, j, p)
        if c:
            out.append((j, exp, c))
    return out


def total_steenrod(f: QPolynomial) -> SteenrodExpansion:
    R = f.ring
    F = R.field
    q, p, cap = F.q, F.p, R.cap
    top = max(f.degree, 0)
    buckets: list[dict[Monomial, int]] = [dict() for _ in range(top + 1)]
    for mono, c in f.terms.items():
        options = [_variable_options(a, q, p, cap) for a in mono]
        for combo in itertools.product(*options):
            J = sum(o[0] for o in combo)
            coeff = c
            for _, _, v in combo:
                coeff = F.mul(coeff, F.from_int(v))
            accumulate_term(buckets[J], tuple(o[1] for o in combo), coeff, F)
    return SteenrodExpansion(tuple(QPolynomial(R, b) for b in buckets))


def steenrod_p(f: QPolynomial, i: int) -> QPolynomial:
    if i < 0:
        raise ValueError("índice de Steenrod negativo")
    return total_steenrod(f).component(i)


def as_scalar_multiple(f: QPolynomial, g: QPolynomial) -> int | None:
    """c com f = c·g, ou None; f = 0 dá c = 0."""
    if f.is_zero:
        return 0
    if g.is_zero or set(f.terms) != set(g.terms):
        return None
    F = f.ring.field
    mono, v = next(iter(g.terms.items()))
    c = F.mul(f.terms[mono], F.inv(v))
    return c if poly_scale(g, c) == f else None


def identify_ykprime(F: FieldSpec, m: int, g: QPolynomial, family: dict[int, QPolynomial] | None = None) -> tuple[int, int] | None:
    """(k', c) com g = c·y_{k'} (c != 0), decidido pelo grau de g."""
    q = F.q
    if g.is_zero:
        return None
    off = g.degree - (q**m - q)
    if off < 0 or off % (q - 1) or off // (q - 1) > L_bound(q, m):
        return None
    k = off // (q - 1)
    target = family[k] if family is not None else y_kprime(F, m, k)
    c = as_scalar_multiple(g, target)
    return (k, c) if c else None


# ----------------------------- identidades -----------------------------

def cartan_check(f: QPolynomial, g: QPolynomial, d: int) -> bool:
    """P^d(fg) = Σ_{i=0}^d P^i(f) P^{d-i}(g)."""
    Pf, Pg = total_steenrod(f), total_steenrod(g)
    rhs = zero(f.ring)
    for i in range(d + 1):
        rhs = poly_add(rhs, poly_mul(Pf.component(i), Pg.component(d - i)))
    return steenrod_p(poly_mul(f, g), d) == rhs


def random_polynomial(R: RingSpec, rng: np.random.Generator, terms: int = 3, max_exp: int | None = None) -> QPolynomial:
    top = R.cap if max_exp is None else max_exp + 1
    if R.cap is not None:
        top = min(top, R.cap)
    items = [
        (tuple(int(a) for a in rng.integers(0, top, size=R.n)), int(rng.integers(1, R.field.q)))
        for _ in range(terms)
    ]
    return from_terms(R, items)


def cartan_sweep(F: FieldSpec, m: int, pairs: int = 100, seed: int = 0, n: int = 2) -> list[dict[str, Any]]:
    """Cartan em pares aleatórios de Q; devolve os contraexemplos encontrados."""
    rng = np.random.default_rng(seed)
    R = RingSpec(F, n, m)
    failures = []
    for _ in range(pairs):
        f = random_polynomial(R, rng, int(rng.integers(1, 4)), 2 * F.q)
        g = random_polynomial(R, rng, int(rng.integers(1, 4)), 2 * F.q)
        d = int(rng.integers(0, max(f.degree, 0) + max(g.degree, 0) + 1))
        if not cartan_check(f, g, d):
            failures.append({"f": str(f), "g": str(g), "d": d})
    if failures:
        logger.warning(f"Cartan falhou em {len(failures)} de {pairs} pares (q={F.q}, m={m})")
    return failures


def ideal_preservation_check(F: FieldSpec, n: int, m: int, i: int) -> bool:
    """Todo componente de P(ξ)(x_i^{q^m}) em S cai em m^[q^m]."""
    S = RingSpec(F, n, None)
    exps = [0] * n
    exps[i - 1] = F.q**m
    exp = total_steenrod(monomial(S, exps))
    cap = F.q**m
    return all(
        any(a >= cap for a in mono)
        for comp in exp.components
        for mono in comp.terms
    )


def p1_shift_check(F: FieldSpec, kprime: int) -> bool:
    """m = 2, n = 2: P^1(y_{k'}) = (1 - k) y_{k'+1} com k = k' + q."""
    q = F.q
    if not 0 <= kprime < q:
        raise ValueError(f"k' fora de [0, {q})")
    scalar = F.from_int(1 - (kprime + q))
    return steenrod_p(y_kprime(F, 2, kprime), 1) == poly_scale(y_kprime(F, 2, kprime + 1), scalar)


def pr_y2_scalar(q: int, r: int) -> int:
    p, _ = parse_prime_power(q)
    return lucas_binomial(q - 1, q - r - 1, p)


def pr_y2_check(F: FieldSpec, r: int) -> bool:
    """m = 2, n = 2: P^r(y_2) = C(q-1, q-r-1) y_{r+2} para 1 <= r <= q-2."""
    q = F.q
    if not 1 <= r <= q - 2:
        raise ValueError(f"r fora de [1, {q - 2}]")
    scalar = F.from_int(pr_y2_scalar(q, r))
    return steenrod_p(y_kprime(F, 2, 2), r) == poly_scale(y_kprime(F, 2, r + 2), scalar)


def invariance_preservation_check(f: QPolynomial, gens: GroupGeneratorSet) -> list[int]:
    """Índices i com P^i(f) NÃO invariante (lista vazia = preservado)."""
    return [i for i, comp in enumerate(total_steenrod(f).components) if not is_invariant(comp, gens)]


def identities_report(F: FieldSpec, m: int = 2, pairs: int = 20, seed: int = 0) -> dict[str, Any]:
    """Roda as identidades de m = 2 (P^1 e P^r sobre y_{k'}), a preservação do ideal e Cartan."""
    q = F.q
    shift = {k: p1_shift_check(F, k) for k in range(q)}
    pr_y2 = {r: pr_y2_check(F, r) for r in range(1, q - 1)}
    ideal = {i: ideal_preservation_check(F, 2, m, i) for i in (1, 2)}
    cartan = cartan_sweep(F, m, pairs, seed)
    ok = all(shift.values()) and all(pr_y2.values()) and all(ideal.values()) and not cartan
    return {
        "q": q, "m": m,
        "p1_shift": [{"kprime": k, "holds": v} for k, v in shift.items()],
        "pr_on_y2": [{"r": r, "scalar": pr_y2_scalar(q, r), "holds": v} for r, v in pr_y2.items()],
        "ideal_preserved": [{"i": i, "holds": v} for i, v in ideal.items()],
        "cartan_pairs": pairs, "cartan_failures": cartan,
        "ok": ok,
    }


# ----------------------------- geração a partir de B -----------------------------

def _generation_indices(q: int, m: int) -> list[tuple[int, int]]:
    """(t, k') dos elementos de B; t = 0 marca a_{m,2,0}."""
    out = [(0, 0)]
    for t in range(1, m):
        out.append((t, 1 + (q**t - 1) // (q - 1)))
    return out


def _claimed_reach(q: int, m: int, t: int, kprime: int, L: int) -> list[int]:
    if t == 0:
        hi = 1
    elif t < m - 1:
        hi = kprime + q**t
    else:
        hi = kprime + q**t - 1
    return list(range(kprime, min(hi, L) + 1))


def steenrod_generation_report(F: FieldSpec, m: int) -> dict[str, Any]:
    q = F.q
    if m < 2:
        raise ValueError("steenrod_generation_report exige m >= 2")
    L = L_bound(q, m)
    A = {k: y_kprime(F, m, k) for k in range(L + 1)}
    expansions = {k: total_steenrod(f) for k, f in A.items()}
    stray = 0

    edges: dict[int, set[int]] = {}
    for k, exp in expansions.items():
        targets = set()
        for r in range(1, len(exp.components)):
            comp = exp.components[r]
            if comp.is_zero:
                continue
            hit = identify_ykprime(F, m, comp, A)
            if hit is None:
                stray += 1
            else:
                targets.add(hit[0])
        edges[k] = targets

    def reach(start: int) -> list[int]:
        seen, frontier = {start}, [start]
        while frontier:
            nxt = []
            for k in frontier:
                for k2 in edges[k] - seen:
                    seen.add(k2)
                    nxt.append(k2)
            frontier = nxt
        return sorted(seen)

    generators = []
    union: set[int] = set()
    for t, kprime in _generation_indices(q, m):
        if kprime > L:
            continue
        reached = reach(kprime)
        claimed = _claimed_reach(q, m, t, kprime, L)
        union.update(reached)
        generators.append({
            "t": t, "kprime": kprime, "reached": reached, "claimed": claimed,
            "claim_holds": set(claimed) <= set(reached),
        })
    covers = union == set(A)
    report = {
        "q": q, "m": m, "L": L,
        "A": sorted(A), "B": [g["kprime"] for g in generators],
        "generators": generators,
        "reached": sorted(union),
        "covers_A": covers,
        "non_family_results": stray,
        "pattern_holds": covers and all(g["claim_holds"] for g in generators),
    }
    log = logger.success if report["pattern_holds"] else logger.warning
    log(f"Geração por Steenrod q={q}, m={m}: alcançados {report['reached']} de 0..{L}")
    return report


def conjecture56_sum_check(q: int, m: int, t: int, r: int) -> dict[str, Any]:
    """Avalia a soma binomial mod p para cada j em [0, r] e testa independência de j."""
    p, _ = parse_prime_power(q)
    if m < 2 or not 1 <= t <= m - 1 or r < 0:
        raise ValueError("parameters outside display's domain")
    num = q**m - q**t - 2 * q + 2
    if num < 0 or num % (q - 1):
        raise ValueError("parameters outside display's domain")
    upper = num // (q - 1)
    L = L_bound(q, m)
    shift = (q**t + q - 2) // (q - 1)
    values = [
        sum(
            lucas_binomial((q - 1) * (L - i), j, p) * lucas_binomial((q - 1) * (shift + i), r - j, p)
            for i in range(upper + 1)
        ) % p
        for j in range(r + 1)
    ]
    return {"q": q, "m": m, "t": t, "r": r, "p": p, "values": values, "independent": len(set(values)) <= 1}

"""
MÓDULO DAS FAMÍLIAS EXPLÍCITAS DE INVARIANTES
===============================================

Constrói as famílias de polinômios invariantes (Dickson, z_n, y_{n,k}, y_{k'},
a_{m,n,k'}, S_0/S_1 e suas potências, famílias dos parabólicos a/b/c/d e as
peças do caso q=2) e expõe as recorrências e formas fechadas para os testes.

Todas as famílias com expoentes múltiplos de q-1 passam por y_type_sum.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from dataclasses import dataclass
import itertools
from typing import Iterator, Sequence

from loguru import logger

from ..utils.clean import normalize_tag
from .action import Composition
from .gf import FieldSpec, lucas_binomial, make_field, parse_prime_power
from .qring import (
    QPolynomial,
    RingSpec,
    constant,
    from_terms,
    monomial,
    poly_add,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_sub,
    project_to_Q,
    zero,
)


def ring_for(F: FieldSpec, n: int, m: int | None) -> RingSpec:
    return RingSpec(F, n, m)


def L_bound(q: int, m: int) -> int:
    """L = (q^m - q)/(q - 1), o maior k' de a_{m,n,k'}."""
    return (q**m - q) // (q - 1)


# ----------------------------- somas do tipo y -----------------------------

def _bounded_compositions(total: int, slots: int, upper: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    hi = min(upper, total)
    lo = max(0, total - upper * (slots - 1))
    for a in range(hi, lo - 1, -1):
        for rest in _bounded_compositions(total - a, slots - 1, upper):
            yield (a,) + rest


def y_type_sum(
    ring: RingSpec,
    variables: Sequence[int],
    target: int,
    upper: int,
    head: Sequence[int] | None = None,
) -> QPolynomial:
    """Σ ∏_{j∈variables} x_j^{i_j(q-1)} sobre 0 <= i_j <= upper, Σ i_j = target.

    `head` soma um expoente fixo a todos os termos (variáveis fora de `variables`).
    """
    q = ring.field.q
    base = list(head) if head is not None else [0] * ring.n
    items = []
    for comp in _bounded_compositions(target, len(variables), upper):
        exps = list(base)
        for var, i in zip(variables, comp):
            exps[var - 1] += i * (q - 1)
        items.append((exps, 1))
    return from_terms(ring, items)


# ----------------------------- Dickson -----------------------------

def _dickson_expansion(F: FieldSpec, n: int) -> list[QPolynomial]:
    """Coeficientes em t de ∏_l (t + l(x)) sobre os q^n funcionais lineares, em S."""
    S = ring_for(F, n, None)
    coeffs = [constant(S)]
    for c in itertools.product(F.elements(), repeat=n):
        lin = from_terms(S, [(tuple(1 if k == i else 0 for k in range(n)), ci) for i, ci in enumerate(c)])
        new = [zero(S)] * (len(coeffs) + 1)
        for k, ck in enumerate(coeffs):
            new[k + 1] = poly_add(new[k + 1], ck)
            new[k] = poly_add(new[k], poly_mul(lin, ck))
        coeffs = new
    return coeffs


def dickson(F: FieldSpec, n: int) -> list[QPolynomial]:
    """[D_{n,0}, ..., D_{n,n}] com D_{n,i} = coeficiente de t^{q^i}."""
    if n < 1:
        raise ValueError("n deve ser >= 1")
    coeffs = _dickson_expansion(F, n)
    powers = {F.q**i for i in range(n + 1)}
    residual = [k for k, c in enumerate(coeffs) if k not in powers and not c.is_zero]
    if residual:
        raise RuntimeError(f"identidade de Dickson falhou: coeficientes não nulos em t^{residual}")
    return [coeffs[F.q**i] for i in range(n + 1)]


def dickson_residual_check(F: FieldSpec, n: int) -> bool:
    try:
        D = dickson(F, n)
    except RuntimeError as exc:
        logger.warning(str(exc))
        return False
    return all(D[i].is_homogeneous() and D[i].degree == F.q**n - F.q**i for i in range(n))


# ----------------------------- m = 2 -----------------------------

def z_n(F: FieldSpec, n: int) -> QPolynomial:
    q = F.q
    return monomial(ring_for(F, n, 2), [q * q - 1] * n)


def y_nk(F: FieldSpec, n: int, k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("k deve ser >= 0")
    R = ring_for(F, n, 2)
    if k > F.q:
        return zero(R)
    return y_type_sum(R, range(1, n + 1), (n - 1) * F.q + k, F.q)


def a_mnk(F: FieldSpec, m: int, n: int, kprime: int) -> QPolynomial:
    L = L_bound(F.q, m)
    if not 0 <= kprime <= L:
        raise ValueError(f"k' fora de [0, {L}]: {kprime}")
    return y_type_sum(ring_for(F, n, m), range(1, n + 1), (n - 1) * L + kprime, L)


def y_kprime(F: FieldSpec, m: int, kprime: int) -> QPolynomial:
    return a_mnk(F, m, 2, kprime)


def a_mnk_degree(q: int, m: int, n: int, kprime: int) -> int:
    return (n - 1) * (q**m - q) + kprime * (q - 1)


def y_closed_form_check(F: FieldSpec, k: int) -> bool:
    """(x1^{q-1} - x2^{q-1})·y_k = x1^{k(q-1)}x2^{k(q-1)}(x1^{(q-k+1)(q-1)} - x2^{(q-k+1)(q-1)}) em S."""
    q = F.q
    if not 0 <= k <= q:
        raise ValueError(f"k fora de [0, {q}]")
    S = ring_for(F, 2, None)
    yk = y_type_sum(S, (1, 2), q + k, q)
    diff = poly_sub(monomial(S, (q - 1, 0)), monomial(S, (0, q - 1)))
    e = (q - k + 1) * (q - 1)
    rhs = poly_mul(
        monomial(S, (k * (q - 1), k * (q - 1))),
        poly_sub(monomial(S, (e, 0)), monomial(S, (0, e))),
    )
    return poly_mul(diff, yk) == rhs


def ynk_recurrence_check(F: FieldSpec, n: int, k: int) -> bool:
    """y_{n,k} = Σ_{i=k}^{q} y_{n-1,q+k-i} · x_n^{i(q-1)}."""
    q = F.q
    R = ring_for(F, n, 2)
    rhs = zero(R)
    for i in range(k, q + 1):
        head = [0] * n
        head[n - 1] = i * (q - 1)
        rhs = poly_add(rhs, y_type_sum(R, range(1, n), (n - 2) * q + q + k - i, q, head))
    return y_nk(F, n, k) == rhs


def amnk_recurrence_check(F: FieldSpec, m: int, n: int, kprime: int) -> bool:
    """a_{m,n,k'} = Σ_{i=k'}^{L} a_{m,n-1,L+k'-i} · x_n^{i(q-1)}."""
    q = F.q
    L = L_bound(q, m)
    R = ring_for(F, n, m)
    rhs = zero(R)
    for i in range(kprime, L + 1):
        head = [0] * n
        head[n - 1] = i * (q - 1)
        rhs = poly_add(rhs, y_type_sum(R, range(1, n), (n - 2) * L + L + kprime - i, L, head))
    return a_mnk(F, m, n, kprime) == rhs


# ----------------------------- tabela de produtos (m=2, n=2) -----------------------------

def _identify(f: QPolynomial, candidates: dict[str, QPolynomial]) -> tuple[str, int] | None:
    """Nome e escalar c com f = c·candidato, se existir."""
    F = f.ring.field
    for name, g in candidates.items():
        if g.is_zero or set(g.terms) != set(f.terms):
            continue
        mono, c0 = next(iter(g.terms.items()))
        c = F.mul(f.terms[mono], F.inv(c0))
        if poly_scale(g, c) == f:
            return name, c
    return None


def product_table(F: FieldSpec) -> list[dict]:
    """Produtos y_i·y_j (i <= j) em Q com n=2, m=2, identificados contra os y_l e z_2."""
    q = F.q
    ys = {k: y_nk(F, 2, k) for k in range(q + 1)}
    candidates = {f"y{k}": v for k, v in ys.items()}
    candidates["z2"] = z_n(F, 2)
    rows = []
    for i in range(q + 1):
        for j in range(i, q + 1):
            prod = poly_mul(ys[i], ys[j])
            ident = None if prod.is_zero else _identify(prod, candidates)
            rows.append({
                "i": i, "j": j, "zero": prod.is_zero,
                "identified": None if ident is None else ident[0],
                "scalar": None if ident is None else ident[1],
            })
    return rows


def expected_product(q: int, i: int, j: int, F: FieldSpec) -> tuple[str, int] | None:
    """Tabela esperada: y0² = y_q, y0·y2 = -z2, y2² = 0, demais nulos."""
    if (i, j) == (0, 0):
        return f"y{q}", 1
    if (i, j) == (0, 2):
        return "z2", F.neg(1)
    return None


def product_table_check(F: FieldSpec) -> bool:
    ok = True
    for row in product_table(F):
        exp = expected_product(F.q, row["i"], row["j"], F)
        got = None if row["zero"] else (row["identified"], row["scalar"])
        if got != exp:
            logger.warning(f"q={F.q}: y{row['i']}·y{row['j']} = {got}, esperado {exp}")
            ok = False
    return ok


def generating_function_check(q: int, m: int) -> bool:
    """Σ_{j=0}^{L} (1+x)^{j(q-1)} = 1 + x^{q-1} + ... + x^{q^m-q} em GF(p)[x]."""
    p, _ = parse_prime_power(q)
    L = L_bound(q, m)
    for deg in range(q**m - q + 1):
        lhs = sum(lucas_binomial(j * (q - 1), deg, p) for j in range(L + 1)) % p
        rhs = 1 if deg % (q - 1) == 0 else 0
        if lhs != rhs:
            return False
    return True


# ----------------------------- S_0, S_1 -----------------------------

def s_images(F: FieldSpec, m: int = 3) -> tuple[QPolynomial, QPolynomial]:
    if m < 2:
        raise ValueError("s_images exige m >= 2")
    q = F.q
    S = ring_for(F, 2, None)
    s0 = y_type_sum(S, (1, 2), q, q)
    s1 = poly_sub(poly_mul(s0, monomial(S, (0, q - 1))), monomial(S, (0, q * q - 1)))
    return project_to_Q(s0, m), project_to_Q(s1, m)


def s_power(F: FieldSpec, a: int, b: int, m: int = 3) -> QPolynomial:
    q = F.q
    if not (0 <= a <= q and 0 <= b <= q - 1):
        raise ValueError(f"s_power exige 0 <= a <= {q} e 0 <= b <= {q - 1}")
    s0, s1 = s_images(F, m)
    return poly_mul(poly_pow(s1, a), poly_pow(s0, b))


def s_power_degree(q: int, a: int, b: int) -> int:
    return a * (q * q - 1) + b * (q * q - q)


def rep_decompose(q: int, a: int) -> tuple[int, int] | None:
    """Único (u, v) >= 0 com a = u(q²-1) + v(q²-q), ou None.

    Domínio: 0 <= a < q(q²-1), que contém [0, q³-q²]. Duas representações
    distintas diferem em u por um múltiplo de q, o que exige a >= q(q²-1);
    abaixo disso a unicidade vale. Fora do domínio levanta ValueError.
    """
    if not 0 <= a < q * (q * q - 1):
        raise ValueError(f"a fora de [0, {q * (q * q - 1)}): {a}")
    found = [
        (u, (a - u * (q * q - 1)) // (q * q - q))
        for u in range(a // (q * q - 1) + 1)
        if (a - u * (q * q - 1)) % (q * q - q) == 0
    ]
    if len(found) > 1:
        raise RuntimeError(f"representação não única para q={q}, a={a}: {found}")
    return found[0] if found else None


# ----------------------------- parabólicos (m = 2) -----------------------------

@dataclass(frozen=True, slots=True)
class ParabolicWhich:
    kind: str  # "a" | "b" | "c" | "d"
    r: int | None = None
    s: int | None = None
    k: int | None = None


def _head(alpha: Composition, r: int, q: int) -> list[int]:
    A = alpha.partial_sums
    return [q * q - 1 if j < A[r - 1] else 0 for j in range(alpha.n)]


def parabolic_family(F: FieldSpec, alpha: Composition, which: ParabolicWhich) -> QPolynomial:
    q = F.q
    n, l = alpha.n, alpha.length
    A = alpha.partial_sums
    R = ring_for(F, n, 2)
    if which.kind == "a":
        return monomial(R, [q * q - 1] * n)
    if which.kind == "b":
        r, k = which.r, which.k
        if r is None or k is None or not (1 <= r <= l and 0 <= k <= q):
            raise ValueError(f"ParB exige 1 <= r <= {l} e 0 <= k <= {q}")
        return y_type_sum(R, range(A[r - 1] + 1, n + 1), (n - A[r - 1] - 1) * q + k, q, _head(alpha, r, q))
    if which.kind == "c":
        r, s, k = which.r, which.s, which.k
        if r is None or s is None or k is None or not (1 <= r < s <= l and 0 <= k <= q):
            raise ValueError(f"ParC exige 1 <= r < s <= {l} e 0 <= k <= {q}")
        return y_type_sum(R, range(A[r - 1] + 1, A[s - 1] + 1), (A[s - 1] - A[r - 1] - 1) * q + k, q, _head(alpha, r, q))
    if which.kind == "d":
        r = which.r
        if r is None or not (1 <= r <= l) or alpha.parts[r - 1] < 2:
            raise ValueError("ParD exige 1 <= r <= l com α_r >= 2")
        return monomial(R, _head(alpha, r, q))
    raise ValueError(f"família parabólica desconhecida: {which.kind}")


def parabolic_degree(q: int, alpha: Composition, which: ParabolicWhich) -> int:
    n, A = alpha.n, alpha.partial_sums
    if which.kind == "a":
        return n * (q * q - 1)
    head = A[which.r - 1] * (q * q - 1)
    if which.kind == "b":
        return head + ((n - A[which.r - 1] - 1) * q + which.k) * (q - 1)
    if which.kind == "c":
        return head + ((A[which.s - 1] - A[which.r - 1] - 1) * q + which.k) * (q - 1)
    return head


def parabolic_beta(alpha: Composition, which: ParabolicWhich) -> tuple[int, ...]:
    """O β do termo da série associado a cada construção."""
    beta = [0] * alpha.length
    if which.kind == "b":
        beta[which.r - 1] = 1
    elif which.kind == "c":
        beta[which.r - 1] = beta[which.s - 1] = 1
    elif which.kind == "d":
        beta[which.r - 1] = 2
    return tuple(beta)


def all_parabolic_members(F: FieldSpec, alpha: Composition) -> list[ParabolicWhich]:
    q, l = F.q, alpha.length
    out = [ParabolicWhich("a")]
    out += [ParabolicWhich("b", r=r, k=k) for r in range(1, l + 1) for k in range(q + 1)]
    out += [ParabolicWhich("c", r=r, s=s, k=k) for r in range(1, l + 1) for s in range(r + 1, l + 1) for k in range(q + 1)]
    out += [ParabolicWhich("d", r=r) for r in range(1, l + 1) if alpha.parts[r - 1] >= 2]
    return out


# ----------------------------- q = 2 -----------------------------

def _require_q2(F: FieldSpec) -> None:
    if F.q != 2:
        raise ValueError("construção válida apenas para q = 2")


def q2_dickson_seed(F: FieldSpec, m: int) -> QPolynomial:
    """x1² + x1x2 + x2² no anel com teto 2^m."""
    _require_q2(F)
    return from_terms(ring_for(F, 2, m), [((2, 0), 1), ((1, 1), 1), ((0, 2), 1)])


def q2_dickson_step(F: FieldSpec, m: int, f: QPolynomial) -> QPolynomial:
    _require_q2(F)
    if f.ring != ring_for(F, 2, m):
        raise ValueError("ring mismatch")
    return poly_mul(q2_dickson_seed(F, m), f)


def q2_top_preimage(m: int) -> QPolynomial:
    """Σ_{i=0}^{2^{m+1}-2} x1^{2^{m+1}-2-i} x2^i em S (q = 2)."""
    F = make_field(2, 1)
    top = 2 ** (m + 1) - 2
    return from_terms(ring_for(F, 2, None), [((top - i, i), 1) for i in range(top + 1)])


# ----------------------------- identificadores -----------------------------

FAMILY_TAGS = (
    "dickson", "zn", "ynk", "ykprime", "amnk", "s0", "s1", "spower",
    "para", "parb", "parc", "pard", "q2seed", "q2top",
)


@dataclass(frozen=True, slots=True)
class FamilyId:
    """Tag da família mais os parâmetros relevantes (os demais ficam None).

    k guarda k, k' ou o índice i de D_{n,i}, conforme a tag.
    """

    tag: str
    n: int | None = None
    m: int | None = None
    k: int | None = None
    r: int | None = None
    s: int | None = None
    a: int | None = None
    b: int | None = None
    alpha: Composition | None = None

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"família desconhecida: {self.tag!r} (opções: {', '.join(FAMILY_TAGS)})")

    def label(self) -> str:
        fields = {k: getattr(self, k) for k in ("n", "m", "k", "r", "s", "a", "b") if getattr(self, k) is not None}
        if self.alpha is not None:
            fields["alpha"] = str(self.alpha)
        inner = ",".join(f"{k}={v}" for k, v in fields.items())
        return f"{self.tag}({inner})"


def _need(fid: FamilyId, *names: str) -> None:
    missing = [n for n in names if getattr(fid, n) is None]
    if missing:
        raise ValueError(f"{fid.tag} exige os parâmetros: {', '.join(missing)}")


def _parabolic_which(fid: FamilyId) -> ParabolicWhich:
    return ParabolicWhich({"para": "a", "parb": "b", "parc": "c", "pard": "d"}[fid.tag], r=fid.r, s=fid.s, k=fid.k)


def build_family(F: FieldSpec, fid: FamilyId) -> QPolynomial:
    tag = fid.tag
    if tag == "dickson":
        _need(fid, "n", "k")
        if not 0 <= fid.k <= fid.n:
            raise ValueError(f"D_{{n,i}} exige 0 <= i <= n")
        return dickson(F, fid.n)[fid.k]
    if tag == "zn":
        _need(fid, "n")
        return z_n(F, fid.n)
    if tag == "ynk":
        _need(fid, "n", "k")
        return y_nk(F, fid.n, fid.k)
    if tag == "ykprime":
        _need(fid, "m", "k")
        return y_kprime(F, fid.m, fid.k)
    if tag == "amnk":
        _need(fid, "m", "n", "k")
        return a_mnk(F, fid.m, fid.n, fid.k)
    if tag in ("s0", "s1"):
        s0, s1 = s_images(F, fid.m or 3)
        return s0 if tag == "s0" else s1
    if tag == "spower":
        _need(fid, "a", "b")
        return s_power(F, fid.a, fid.b, fid.m or 3)
    if tag in ("para", "parb", "parc", "pard"):
        _need(fid, "alpha")
        return parabolic_family(F, fid.alpha, _parabolic_which(fid))
    if tag == "q2seed":
        _need(fid, "m")
        return q2_dickson_seed(F, fid.m)
    _require_q2(F)
    _need(fid, "m")
    return q2_top_preimage(fid.m)


def family_degree(F: FieldSpec, fid: FamilyId) -> int:
    """Grau previsto pela construção."""
    q, tag = F.q, fid.tag
    if tag == "dickson":
        return q**fid.n - q**fid.k
    if tag == "zn":
        return fid.n * (q * q - 1)
    if tag == "ynk":
        return ((fid.n - 1) * q + fid.k) * (q - 1)
    if tag == "ykprime":
        return a_mnk_degree(q, fid.m, 2, fid.k)
    if tag == "amnk":
        return a_mnk_degree(q, fid.m, fid.n, fid.k)
    if tag == "s0":
        return q * q - q
    if tag == "s1":
        return q * q - 1
    if tag == "spower":
        return s_power_degree(q, fid.a, fid.b)
    if tag in ("para", "parb", "parc", "pard"):
        return parabolic_degree(q, fid.alpha, _parabolic_which(fid))
    if tag == "q2seed":
        return 2
    return 2 ** (fid.m + 1) - 2


def parse_family(tag: str, params: dict[str, object]) -> FamilyId:
    """FamilyId a partir de parâmetros soltos (os None são ignorados)."""
    kwargs = {k: v for k, v in params.items() if v is not None and k in FamilyId.__dataclass_fields__}
    if isinstance(kwargs.get("alpha"), (str, list, tuple)):
        kwargs["alpha"] = Composition.parse(kwargs["alpha"])
    return FamilyId(normalize_tag(tag), **kwargs)

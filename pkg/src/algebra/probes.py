"""
MÓDULO DE SONDAGENS EMPÍRICAS
===============================

Checagens que dependem de álgebra linear sobre F_q: comparação das potências
S_1^a S_0^b com a família a_{3,2,k'}, posto das imagens de Dickson em Q,
relatório das famílias dos parabólicos e a verificação de uma família
isolada (`families --verify`).

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
from collections import defaultdict
from typing import Any

from loguru import logger

from .action import Composition, GroupGeneratorSet, gl_generators, is_invariant, parabolic_generators
from .families import (
    FamilyId,
    L_bound,
    a_mnk,
    a_mnk_degree,
    all_parabolic_members,
    amnk_recurrence_check,
    build_family,
    dickson,
    dickson_residual_check,
    family_degree,
    parabolic_beta,
    parabolic_degree,
    parabolic_family,
    q2_dickson_step,
    ring_for,
    s_power,
    s_power_degree,
    y_closed_form_check,
    y_kprime,
    ynk_recurrence_check,
)
from .gf import FieldSpec
from .invariants import invariant_basis, span_rank, spans_equal
from .qring import constant, monomial, poly_mul, project_to_Q, to_text
from .qseries import parabolic_series_terms
from .steenrod import as_scalar_multiple


def s_family_overlap_probe(F: FieldSpec) -> dict[str, Any]:
    """S_1^a S_0^b (a <= q, b <= q-1) contra os a_{3,2,k'} de mesmo grau, m = 3."""
    q, m = F.q, 3
    gens = gl_generators(F, 2)
    L = L_bound(q, m)
    family = {k: a_mnk(F, m, 2, k) for k in range(L + 1)}
    by_degree = defaultdict(list)
    for k in family:
        by_degree[a_mnk_degree(q, m, 2, k)].append(k)

    products, overlaps = [], []
    for a in range(q + 1):
        for b in range(q):
            f = s_power(F, a, b, m)
            deg = s_power_degree(q, a, b)
            products.append({
                "a": a, "b": b, "degree": deg,
                "nonzero": not f.is_zero,
                "invariant": is_invariant(f, gens),
                "degree_ok": f.is_homogeneous() and f.degree == deg,
            })
            for k in by_degree.get(deg, []):
                c = as_scalar_multiple(f, family[k])
                overlaps.append({
                    "a": a, "b": b, "kprime": k, "degree": deg,
                    "scalar_multiple": bool(c),
                    "independent": span_rank([f, family[k]]) == 2,
                })

    ok = all(p["nonzero"] and p["invariant"] and p["degree_ok"] for p in products)
    consistent = all(o["independent"] for o in overlaps)
    if not consistent:
        logger.warning(f"q={q}: S-produto proporcional a algum a_(3,2,k'): {[o for o in overlaps if o['scalar_multiple']]}")
    return {
        "q": q, "m": m, "products": products, "overlaps": overlaps,
        "ok": ok, "conjecture_consistent": consistent,
    }


def dickson_image_report(F: FieldSpec, m: int) -> dict[str, Any]:
    """Posto das projeções de D_{2,0}^a D_{2,1}^b em Q, grau a grau, contra dim (Q^G)_d."""
    q = F.q
    R = ring_for(F, 2, m)
    gens = gl_generators(F, 2)
    D = dickson(F, 2)
    d0, d1 = project_to_Q(D[0], m), project_to_Q(D[1], m)
    deg0, deg1 = q * q - 1, q * q - q
    top = R.top_degree

    pow0 = [constant(R)]
    while len(pow0) * deg0 <= top:
        pow0.append(poly_mul(pow0[-1], d0))
    pow1 = [constant(R)]
    while len(pow1) * deg1 <= top:
        pow1.append(poly_mul(pow1[-1], d1))

    rows = []
    for d in range(top + 1):
        images = [
            poly_mul(pow0[a], pow1[b])
            for a in range(len(pow0))
            for b in range(len(pow1))
            if a * deg0 + b * deg1 == d
        ]
        dim = len(invariant_basis(R, gens, d))
        rows.append({"d": d, "image_rank": span_rank(images), "invariant_dim": dim})
    gaps = [r["d"] for r in rows if r["image_rank"] != r["invariant_dim"]]
    logger.info(f"Imagens de Dickson q={q}, m={m}: graus sem cobertura {gaps}")
    return {"q": q, "m": m, "rows": rows, "uncovered_degrees": gaps, "all_images": not gaps}


def parabolic_family_report(F: FieldSpec, alpha: Composition, basis_check: bool = False) -> dict[str, Any]:
    """Membros a/b/c/d para m = 2 com grau, invariância e termo β da série conjecturada."""
    q = F.q
    gens = parabolic_generators(F, alpha)
    terms = {term.beta.parts: term.term for term in parabolic_series_terms(q, alpha.parts, 2)}
    members, polys_by_degree = [], defaultdict(list)
    for which in all_parabolic_members(F, alpha):
        f = parabolic_family(F, alpha, which)
        deg = parabolic_degree(q, alpha, which)
        beta = parabolic_beta(alpha, which)
        term = terms.get(beta)
        members.append({
            "kind": which.kind, "r": which.r, "s": which.s, "k": which.k,
            "degree": deg, "beta": list(beta),
            "nonzero": not f.is_zero,
            "invariant": is_invariant(f, gens),
            "degree_ok": f.is_zero or f.degree == deg,
            "in_term": term is not None and term.coeff(deg) > 0,
        })
        polys_by_degree[deg].append(f)

    report: dict[str, Any] = {
        "q": q, "alpha": list(alpha.parts), "m": 2, "members": members,
        "ok": all(r["nonzero"] and r["invariant"] and r["degree_ok"] and r["in_term"] for r in members),
    }
    if basis_check:
        R = ring_for(F, alpha.n, 2)
        failed = [
            d for d in range(R.top_degree + 1)
            if not spans_equal(polys_by_degree.get(d, []), invariant_basis(R, gens, d))
        ]
        report["basis_failures"] = failed
        report["basis_ok"] = not failed
    return report


def ambient_group(F: FieldSpec, fid: FamilyId) -> GroupGeneratorSet:
    if fid.tag in ("para", "parb", "parc", "pard"):
        return parabolic_generators(F, fid.alpha)
    n = fid.n if fid.tag in ("dickson", "zn", "ynk", "amnk") else 2
    return gl_generators(F, n)


def verify_family(F: FieldSpec, fid: FamilyId) -> dict[str, Any]:
    """Invariância, grau e a checagem estrutural própria de cada família."""
    f = build_family(F, fid)
    degree = family_degree(F, fid)
    checks: dict[str, bool] = {
        "invariant": is_invariant(f, ambient_group(F, fid)),
        "degree_ok": f.is_zero or (f.is_homogeneous() and f.degree == degree),
    }
    tag = fid.tag
    if tag == "dickson":
        checks["residual"] = dickson_residual_check(F, fid.n)
    elif tag == "ynk":
        if fid.n == 2 and fid.k <= F.q:
            checks["closed_form"] = y_closed_form_check(F, fid.k)
        if fid.n >= 2:
            checks["recurrence"] = ynk_recurrence_check(F, fid.n, fid.k)
    elif tag == "amnk" and fid.n >= 2:
        checks["recurrence"] = amnk_recurrence_check(F, fid.m, fid.n, fid.k)
    elif tag == "ykprime" and F.q == 2 and fid.k + 2 <= L_bound(2, fid.m):
        checks["q2_step"] = q2_dickson_step(F, fid.m, f) == y_kprime(F, fid.m, fid.k + 2)
    elif tag == "q2top":
        top = 2**fid.m - 1
        image = project_to_Q(f, fid.m)
        checks["projection"] = image == monomial(ring_for(F, 2, fid.m), (top, top))
    elif tag == "spower":
        checks["nonzero"] = not f.is_zero
    ok = all(checks.values())
    (logger.success if ok else logger.warning)(f"{fid.label()}: {checks}")
    return {
        "family": fid.label(), "q": F.q, "degree": degree,
        "polynomial": to_text(f), "checks": checks, "ok": ok,
    }

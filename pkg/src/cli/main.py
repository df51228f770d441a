"""
MÓDULO PRINCIPAL DA CLI
=========================

Ponto de entrada `python -m src.cli.main <subcomando>`: hilbert, basis,
families, steenrod, series e lucas. Cada subcomando valida os parâmetros,
delega ao pacote algebra e imprime uma tabela polars ou o relatório JSON.

Códigos de saída: 0 = conferido, 1 = divergência ou verificação que falhou,
2 = erro de uso.

Autor: Pedro Henrique Lima Silva
Data de criação: 18/10/2026
Última modificação: 18/10/2026
"""

from __future__ import annotations
import argparse
from math import comb
from typing import Any, Sequence

from loguru import logger

from ..algebra.action import Composition, GroupGeneratorSet, gl_generators, parabolic_generators
from ..algebra.families import parse_family, build_family, family_degree, product_table, product_table_check
from ..algebra.gf import FieldSpec, lucas_binomial, make_field, parse_prime_power
from ..algebra.invariants import hilbert_series, invariant_basis
from ..algebra.probes import dickson_image_report, parabolic_family_report, s_family_overlap_probe, verify_family
from ..algebra.qring import RingSpec, to_text
from ..algebra.qseries import (
    InexactDivisionError,
    binary_coefficient_probe,
    coefficient_profile,
    conjectured_series,
    f_support_analysis,
    parabolic_series_terms,
    qbinom,
    tpoly_sum,
    truncated_power_scalar,
)
from ..algebra.steenrod import (
    conjecture56_sum_check,
    identify_ykprime,
    identities_report,
    steenrod_generation_report,
    total_steenrod,
)
from ..utils.clean import parse_int_list
from ..utils.logs import configure_logging
from .export import emit, records_frame


# ----------------------------- parâmetros comuns -----------------------------

def resolve_field(args: argparse.Namespace) -> FieldSpec:
    """--q (potência de primo) ou --p/--e explícitos."""
    if args.q is not None:
        p, e = parse_prime_power(args.q)
        if args.p is not None and (args.p, args.e or 1) != (p, e):
            raise ValueError(f"--q {args.q} não corresponde a --p {args.p} --e {args.e or 1}")
        return make_field(p, e)
    if args.p is not None:
        return make_field(args.p, args.e or 1)
    raise ValueError("informe --q ou --p/--e")


def resolve_group(F: FieldSpec, args: argparse.Namespace) -> tuple[int, GroupGeneratorSet]:
    if args.alpha:
        alpha = Composition.parse(args.alpha)
        if args.n is not None and args.n != alpha.n:
            raise ValueError(f"dimension mismatch: --n {args.n} mas α soma {alpha.n}")
        return alpha.n, parabolic_generators(F, alpha)
    if args.n is None:
        raise ValueError("informe --n ou --alpha")
    if args.n < 1:
        raise ValueError("--n deve ser >= 1")
    return args.n, gl_generators(F, args.n)


def _require_m(args: argparse.Namespace) -> int:
    if args.m is None or args.m < 1:
        raise ValueError("informe --m >= 1")
    return args.m


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    k = args.k if args.k is not None else args.kprime
    return {"n": args.n, "m": args.m, "k": k, "r": args.r, "s": args.s, "a": args.a, "b": args.b, "alpha": args.alpha}


# ----------------------------- subcomandos -----------------------------

def cmd_hilbert(args: argparse.Namespace) -> int:
    F = resolve_field(args)
    n, gens = resolve_group(F, args)
    R = RingSpec(F, n, _require_m(args))
    report = hilbert_series(R, gens, numerator_start=args.numerator_index, workers=args.workers)
    emit(report.to_json_dict(include_basis=args.with_basis), report.to_frame(), args.format, args.out)
    if report.conjecture_error:
        print(f"série conjecturada indisponível: {report.conjecture_error}")
    elif args.format != "json":
        print(f"calculada:    {report.computed}")
        print(f"conjecturada: {report.conjectured}")
        print("confere" if report.match else f"diverge nos graus {[d for d, _, _ in report.mismatches]}")
    return 0 if report.match else 1


def cmd_basis(args: argparse.Namespace) -> int:
    F = resolve_field(args)
    n, gens = resolve_group(F, args)
    if args.degree is None:
        raise ValueError("informe --degree")
    R = RingSpec(F, n, _require_m(args))
    basis = invariant_basis(R, gens, args.degree)
    texts = [to_text(f) for f in basis]
    payload = {
        "params": {"q": F.q, "n": n, "m": R.m, "group": gens.kind, "alpha": args.alpha},
        "degree": args.degree, "dim": len(basis), "basis": texts,
    }
    emit(payload, records_frame([{"basis": t} for t in texts]), args.format, args.out, lines=texts)
    return 0


def cmd_families(args: argparse.Namespace) -> int:
    F = resolve_field(args)
    if args.probe == "s-overlap":
        report = s_family_overlap_probe(F)
        emit(report, records_frame(report["products"]), args.format, args.out)
        return 0 if report["ok"] and report["conjecture_consistent"] else 1
    if args.probe == "dickson-image":
        report = dickson_image_report(F, _require_m(args))
        emit(report, records_frame(report["rows"]), args.format, args.out)
        return 0 if report["all_images"] else 1
    if args.probe == "parabolic":
        if not args.alpha:
            raise ValueError("--probe parabolic exige --alpha")
        report = parabolic_family_report(F, Composition.parse(args.alpha), basis_check=args.basis_check)
        emit(report, records_frame(report["members"]), args.format, args.out)
        return 0 if report["ok"] and report.get("basis_ok", True) else 1
    if args.products:
        rows = product_table(F)
        ok = product_table_check(F)
        emit({"q": F.q, "products": rows, "ok": ok}, records_frame(rows), args.format, args.out)
        return 0 if ok else 1

    if not args.family:
        raise ValueError("informe --family, --products ou --probe")
    fid = parse_family(args.family, _family_params(args))
    if args.verify:
        report = verify_family(F, fid)
        emit(report, records_frame([{**report["checks"], "family": report["family"]}]), args.format, args.out)
        return 0 if report["ok"] else 1
    f = build_family(F, fid)
    text = to_text(f)
    payload = {"family": fid.label(), "q": F.q, "degree": family_degree(F, fid), "polynomial": text}
    emit(payload, None, args.format, args.out, lines=[text])
    return 0


def _steenrod_apply(F: FieldSpec, args: argparse.Namespace) -> int:
    if not args.family:
        raise ValueError("--mode apply exige --family")
    fid = parse_family(args.family, _family_params(args))
    f = build_family(F, fid)
    expansion = total_steenrod(f)
    indices = [args.op] if args.op is not None else range(len(expansion.components))
    m = fid.m if fid.m is not None else f.ring.m
    rows, lines = [], []
    for i in indices:
        g = expansion.component(i)
        hit = identify_ykprime(F, m, g) if (m is not None and f.ring.n == 2) else None
        rows.append({
            "op": i, "result": to_text(g),
            "identified": None if hit is None else f"ykprime(m={m},k={hit[0]})",
            "scalar": None if hit is None else hit[1],
        })
        lines.append(f"P^{i}: {to_text(g)}" + ("" if hit is None else f"  = {hit[1]}·y_{hit[0]}"))
    emit({"family": fid.label(), "q": F.q, "results": rows}, records_frame(rows), args.format, args.out, lines=lines)
    return 0


def cmd_steenrod(args: argparse.Namespace) -> int:
    F = resolve_field(args)
    if args.mode == "apply":
        return _steenrod_apply(F, args)
    if args.mode == "generation":
        report = steenrod_generation_report(F, _require_m(args))
        emit(report, records_frame(report["generators"]), args.format, args.out)
        return 0 if report["pattern_holds"] else 1
    if args.mode == "identities":
        report = identities_report(F, args.m or 2, pairs=args.pairs, seed=args.seed)
        emit(report, None, args.format, args.out)
        return 0 if report["ok"] else 1

    m = _require_m(args)
    ts = parse_int_list(args.t) if args.t else list(range(1, m))
    rs = parse_int_list(args.r_list, allow_zero=True) if args.r_list else [0, 1, 2]
    results = [conjecture56_sum_check(F.q, m, t, r) for t in ts for r in rs]
    ok = all(res["independent"] for res in results)
    emit({"q": F.q, "m": m, "results": results, "ok": ok}, records_frame(results), args.format, args.out)
    return 0 if ok else 1


def cmd_series(args: argparse.Namespace) -> int:
    parse_prime_power(args.q)
    if args.fpoly:
        report = f_support_analysis(args.q)
        emit(report, None, args.format, args.out, lines=[
            f"suporte: {report['support']}",
            f"coeficientes 0/1: {report['binary_coefficients']}",
            f"critério de representação: {report['representation_criterion']}",
            f"palíndromo: {report['palindromic']}",
        ])
        return 0 if report["ok"] else 1
    if args.power_scalar:
        report = truncated_power_scalar(args.q)
        emit(report, None, args.format, args.out)
        return 0 if report["is_minus_one"] else 1
    if args.binary_probe:
        if args.n is None:
            raise ValueError("--binary-probe exige --n")
        report = binary_coefficient_probe(args.q, args.n)
        emit(report, None, args.format, args.out)
        return 0

    m = _require_m(args)
    if args.alpha:
        alpha = Composition.parse(args.alpha)
        try:
            terms = parabolic_series_terms(args.q, alpha.parts, m, args.numerator_index)
        except InexactDivisionError as exc:
            logger.warning(f"numerador j={args.numerator_index}: {exc}")
            emit({"q": args.q, "alpha": list(alpha.parts), "m": m, "error": str(exc)}, None, args.format, args.out)
            return 1
        rows = [{"beta": list(t.beta.parts), "e": t.exponent, "term": str(t.term)} for t in terms]
        total = tpoly_sum(t.term for t in terms)
        emit(
            {"q": args.q, "alpha": list(alpha.parts), "m": m, "numerator_index": args.numerator_index,
             "terms": rows, "series": total.coeffs()},
            records_frame(rows), args.format, args.out,
        )
        if args.format != "json":
            print(f"total: {total}")
        return 0
    if args.k is not None:
        f = qbinom(m, args.k, args.q)
        profile = coefficient_profile(args.q, m, args.k)
        emit({"q": args.q, "m": m, "k": args.k, "coefficients": f.coeffs(), "profile": {str(c): v for c, v in profile.items()}},
             None, args.format, args.out, lines=[str(f)])
        return 0
    if args.n is None:
        raise ValueError("informe --n, --alpha ou --k")
    f = conjectured_series(args.q, args.n, m)
    emit({"q": args.q, "n": args.n, "m": m, "series": f.coeffs()}, None, args.format, args.out, lines=[str(f)])
    return 0


def cmd_lucas(args: argparse.Namespace) -> int:
    p, e = parse_prime_power(args.p)
    if e != 1:
        raise ValueError("not prime")
    if args.N < 0 or args.M < 0:
        raise ValueError("N e M devem ser >= 0")
    value = lucas_binomial(args.N, args.M, p)
    emit({"p": p, "N": args.N, "M": args.M, "value": value, "exact_mod_p": comb(args.N, args.M) % p},
         None, args.format, args.out, lines=[str(value)])
    return 0


# ----------------------------- argparse -----------------------------

def _add_common(sp: argparse.ArgumentParser, field_args: bool = True) -> None:
    if field_args:
        sp.add_argument("--q", type=int, default=None, help="Ordem do corpo (potência de primo)")
        sp.add_argument("--p", type=int, default=None, help="Característica (alternativa a --q)")
        sp.add_argument("--e", type=int, default=None, help="Grau da extensão (com --p)")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--out", default=None, help="Arquivo de saída (.json ou .csv); nome sem pasta vai para REPORT_DIR")
    sp.add_argument("--log-level", default=None, help="Sobrescreve LOG_LEVEL")


def _add_family_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--family", default=None, help="Tag da família (dickson, zn, ynk, ykprime, amnk, ...)")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--kprime", type=int, default=None)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--b", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Invariantes de GL_n(F_q) e parabólicos em F_q[x]/(x_i^{q^m})")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hilbert", help="Série de Hilbert calculada vs conjecturada")
    _add_common(sp)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--alpha", default=None, help="Composição de n, ex.: 2,1,3")
    sp.add_argument("--numerator-index", type=int, choices=(0, 1), default=0)
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--with-basis", action="store_true", help="Inclui as bases no JSON")
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("basis", help="Base canônica do subespaço invariante de grau d")
    _add_common(sp)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--degree", type=int, default=None)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("families", help="Famílias explícitas, verificação e sondagens")
    _add_common(sp)
    _add_family_args(sp)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--products", action="store_true", help="Tabela de produtos y_i·y_j (n=2, m=2)")
    sp.add_argument("--probe", choices=("s-overlap", "dickson-image", "parabolic"), default=None)
    sp.add_argument("--basis-check", action="store_true")
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("steenrod", help="Operadores de Steenrod e checagens")
    _add_common(sp)
    _add_family_args(sp)
    sp.add_argument("--mode", choices=("apply", "generation", "sum-check", "identities"), default="apply")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--op", type=int, default=None, help="Índice i de P^i")
    sp.add_argument("--t", default=None, help="Lista de t (sum-check)")
    sp.add_argument("--r-list", default=None, help="Lista de r (sum-check)")
    sp.add_argument("--pairs", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_steenrod)

    sp = sub.add_parser("series", help="Séries em t: gaussianos, conjecturas e análises")
    _add_common(sp, field_args=False)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--numerator-index", type=int, choices=(0, 1), default=0)
    sp.add_argument("--fpoly", action="store_true")
    sp.add_argument("--power-scalar", action="store_true")
    sp.add_argument("--binary-probe", action="store_true")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("lucas", help="Binomial C(N, M) mod p por Lucas")
    _add_common(sp, field_args=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--M", type=int, required=True)
    sp.set_defaults(func=cmd_lucas)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.func(args)
    except ValueError as exc:
        logger.error(f"Parâmetros inválidos: {exc}")
        return 2
    except Exception:
        logger.exception("Falha inesperada")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

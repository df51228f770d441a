import pytest

from src.algebra.action import gl_generators
from src.algebra.families import y_kprime
from src.algebra.gf import field_for_order
from src.algebra.qring import RingSpec, constant, monomial, poly_scale
from src.algebra.steenrod import (
    as_scalar_multiple,
    cartan_sweep,
    conjecture56_sum_check,
    ideal_preservation_check,
    identify_ykprime,
    identities_report,
    invariance_preservation_check,
    p1_shift_check,
    pr_y2_check,
    pr_y2_scalar,
    steenrod_generation_report,
    steenrod_p,
    total_steenrod,
)


def test_frobenius_generator_expansion(F2):
    S = RingSpec(F2, 2, None)
    exp = total_steenrod(monomial(S, (2, 0)))
    assert exp.components[0] == monomial(S, (2, 0))
    assert exp.components[1].is_zero
    assert exp.components[2] == monomial(S, (4, 0))


def test_constant_expansion(F3):
    R = RingSpec(F3, 2, 2)
    exp = total_steenrod(constant(R, 2))
    assert exp.components == (constant(R, 2),)
    assert steenrod_p(constant(R, 2), 3).is_zero


def test_first_operation_on_y0_q2(F2):
    assert steenrod_p(y_kprime(F2, 2, 0), 1) == y_kprime(F2, 2, 1)
    assert steenrod_p(y_kprime(F2, 2, 0), 0) == y_kprime(F2, 2, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_p1_shift(q):
    F = field_for_order(q)
    assert all(p1_shift_check(F, k) for k in range(q))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_pr_on_y2(q):
    F = field_for_order(q)
    assert all(pr_y2_check(F, r) for r in range(1, q - 1))


def test_pr_scalars_q5():
    assert [pr_y2_scalar(5, r) for r in (1, 2, 3)] == [4, 1, 4]


def test_apply_identifies_shifted_family(F3):
    g = steenrod_p(y_kprime(F3, 2, 0), 1)
    assert identify_ykprime(F3, 2, g) == (1, 1)


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_cartan_on_random_pairs(q, m):
    assert cartan_sweep(field_for_order(q), m, pairs=100, seed=q * 10 + m) == []


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_ideal_preservation(q, m):
    F = field_for_order(q)
    assert ideal_preservation_check(F, 2, m, 1)
    assert ideal_preservation_check(F, 2, m, 2)


def test_invariance_preserved(F3):
    gens = gl_generators(F3, 2)
    for k in range(4):
        assert invariance_preservation_check(y_kprime(F3, 2, k), gens) == []


def test_identities_report(F3):
    report = identities_report(F3, pairs=10)
    assert report["ok"]
    assert [row["scalar"] for row in report["pr_on_y2"]] == [pr_y2_scalar(3, 1)]


def test_scalar_multiple(F3):
    f = y_kprime(F3, 2, 1)
    assert as_scalar_multiple(poly_scale(f, 2), f) == 2
    assert as_scalar_multiple(y_kprime(F3, 2, 2), f) is None


def test_generation_q3_m2(F3):
    report = steenrod_generation_report(F3, 2)
    assert report["B"] == [0, 2]
    assert report["covers_A"]
    assert report["pattern_holds"]


def test_generation_q2_m2(F2):
    report = steenrod_generation_report(F2, 2)
    assert report["A"] == [0, 1, 2]
    assert report["B"] == [0, 2]
    assert report["covers_A"]


def test_steenrod_orbit_of_y0_q2_m3(F2):
    y0 = y_kprime(F2, 3, 0)
    for r in range(1, 7):
        assert steenrod_p(y0, r) == y_kprime(F2, 3, r)


def test_steenrod_from_y2_q2_m3(F2):
    y2 = y_kprime(F2, 3, 2)
    assert steenrod_p(y2, 1) == y_kprime(F2, 3, 3)
    assert all(steenrod_p(y2, r).is_zero for r in range(2, 9))
    assert steenrod_p(y_kprime(F2, 3, 3), 2) == y_kprime(F2, 3, 5)


def test_generation_q2_m3_report(F2):
    report = steenrod_generation_report(F2, 3)
    assert report["L"] == 6
    assert report["A"] == list(range(7))
    assert report["B"] == [0, 2, 4]
    rows = {g["t"]: g for g in report["generators"]}
    assert rows[0]["reached"] == list(range(7))
    assert rows[0]["claimed"] == [0, 1]
    assert rows[0]["claim_holds"]
    # y_4 only comes from a_{3,2,0}: P^2(y_2) vanishes
    assert rows[1]["reached"] == [2, 3, 5]
    assert rows[1]["claimed"] == [2, 3, 4]
    assert not rows[1]["claim_holds"]
    assert rows[2]["reached"] == [4, 5, 6]
    assert rows[2]["claimed"] == [4, 5, 6]
    assert rows[2]["claim_holds"]
    assert report["reached"] == list(range(7))
    assert report["covers_A"]
    assert not report["pattern_holds"]


def test_sum_check_values():
    assert conjecture56_sum_check(3, 2, 1, 1)["values"] == [1, 1]
    assert conjecture56_sum_check(2, 3, 1, 0)["independent"]
    report = conjecture56_sum_check(2, 3, 2, 2)
    assert len(report["values"]) == 3


def test_sum_check_domain():
    with pytest.raises(ValueError, match="parameters outside display's domain"):
        conjecture56_sum_check(2, 3, 0, 1)
    with pytest.raises(ValueError, match="parameters outside display's domain"):
        conjecture56_sum_check(2, 3, 1, -1)

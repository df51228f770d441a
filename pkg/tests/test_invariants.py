import json

import pytest

from src.algebra.action import Composition, gl_generators, parabolic_generators
from src.algebra.families import y_nk, z_n
from src.algebra.gf import field_for_order, make_field
from src.algebra.invariants import (
    GFMatrix,
    full_group_dimensions,
    hilbert_series,
    invariant_basis,
    kernel_basis,
    span_rank,
    span_rref,
    spans_equal,
)
from src.algebra.qring import RingSpec, constant, from_terms, monomial, to_text
from src.algebra.qseries import TPoly
from src.utils.fingerprint import report_fingerprint


def test_kernel_basis_small(F3):
    A = GFMatrix.from_rows(F3, [[1, 2, 0]])
    assert kernel_basis(A) == [[1, 1, 0], [0, 0, 1]]
    empty = GFMatrix.from_rows(F3, [], cols=2)
    assert kernel_basis(empty) == [[1, 0], [0, 1]]


def test_span_rref_is_canonical(F2):
    R = RingSpec(F2, 2, 2)
    a = from_terms(R, [((2, 1), 1), ((1, 2), 1)])
    b = monomial(R, (2, 1))
    c = monomial(R, (1, 2))
    assert spans_equal([a, b], [b, c])
    assert span_rank([a, b, c]) == 2
    assert span_rref(span_rref([a, c])) == span_rref([a, c])


def test_basis_degree_3_q2():
    F = make_field(2, 1)
    basis = invariant_basis(RingSpec(F, 2, 2), gl_generators(F, 2), 3)
    assert [to_text(f) for f in basis] == ["x1^2*x2 + x1*x2^2"]


def test_basis_degree_1_is_empty(F2):
    assert invariant_basis(RingSpec(F2, 2, 2), gl_generators(F2, 2), 1) == []


def test_basis_top_degree_q3(F3):
    basis = invariant_basis(RingSpec(F3, 2, 2), gl_generators(F3, 2), 16)
    assert [to_text(f) for f in basis] == ["x1^8*x2^8"]


def test_prefilter_does_not_change_dimensions(F3):
    R = RingSpec(F3, 2, 2)
    gens = gl_generators(F3, 2)
    for d in range(R.top_degree + 1):
        assert len(invariant_basis(R, gens, d)) == len(invariant_basis(R, gens, d, prefilter=False))


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_m1_series(q, n):
    F = field_for_order(q)
    report = hilbert_series(RingSpec(F, n, 1), gl_generators(F, n))
    expected = TPoly.one() + TPoly.monomial(n * (q - 1))
    assert report.computed == expected
    assert report.match


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4)])
def test_m2_series_matches(q, n):
    F = field_for_order(q)
    report = hilbert_series(RingSpec(F, n, 2), gl_generators(F, n))
    assert report.match, report.mismatches


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (3, 3)])
def test_m2_basis_spans_families(q, n):
    F = field_for_order(q)
    R = RingSpec(F, n, 2)
    expected = {0: [constant(R)], n * (q * q - 1): [z_n(F, n)]}
    for k in range(q + 1):
        expected.setdefault(((n - 1) * q + k) * (q - 1), []).append(y_nk(F, n, k))
    report = hilbert_series(R, gl_generators(F, n))
    for record in report.records:
        assert spans_equal(list(record.basis), expected.get(record.degree, []))


@pytest.mark.parametrize("q,n,m", [(2, 2, 3), (3, 2, 3), (2, 2, 4), (2, 3, 3)])
def test_series_beyond_proven_cases(q, n, m):
    F = field_for_order(q)
    report = hilbert_series(RingSpec(F, n, m), gl_generators(F, n))
    assert report.match, report.mismatches


def test_2_2_3_top_term(F2):
    report = hilbert_series(RingSpec(F2, 2, 3), gl_generators(F2, 2))
    assert report.computed.degree == 14
    assert report.computed.coeff(14) == 1


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2)])
def test_full_group_oracle(q, m):
    F = field_for_order(q)
    R = RingSpec(F, 2, m)
    report = hilbert_series(R, gl_generators(F, 2))
    assert full_group_dimensions(R) == report.dimensions


def test_parabolic_series_q2_alpha_11(F2):
    gens = parabolic_generators(F2, Composition.parse("1,1"))
    report = hilbert_series(RingSpec(F2, 2, 2), gens)
    assert report.dimensions == [1, 1, 2, 2, 2, 1, 1]
    assert report.match


@pytest.mark.parametrize(
    "q,alpha",
    [(2, "2,1"), (2, "1,2"), (2, "1,1,1"), (3, "1,1"), (3, "2,1"), (3, "1,2")],
)
def test_parabolic_series_m2(q, alpha):
    F = field_for_order(q)
    a = Composition.parse(alpha)
    report = hilbert_series(RingSpec(F, a.n, 2), parabolic_generators(F, a))
    assert report.match, report.mismatches


@pytest.mark.parametrize("alpha,coeffs", [("2,1", [1, 0, 1, 1]), ("1,2", [1, 1, 0, 1])])
def test_parabolic_series_m1(F2, alpha, coeffs):
    a = Composition.parse(alpha)
    report = hilbert_series(RingSpec(F2, a.n, 1), parabolic_generators(F2, a))
    assert report.computed.coeffs() == coeffs
    assert report.match


def test_thread_pool_gives_same_dimensions(F3):
    R = RingSpec(F3, 2, 2)
    gens = gl_generators(F3, 2)
    assert hilbert_series(R, gens, workers=3).dimensions == hilbert_series(R, gens, workers=1).dimensions


def test_report_serialization(F2):
    report = hilbert_series(RingSpec(F2, 2, 2), gl_generators(F2, 2))
    payload = report.to_json_dict()
    assert payload["schema"] == 1
    assert payload["series"] == [1, 0, 1, 1, 1, 0, 1]
    assert payload["fingerprint"] == report_fingerprint(payload)
    assert payload["degrees"][3]["basis"] == ["x1^2*x2 + x1*x2^2"]
    json.dumps(payload)
    df = report.to_frame()
    assert df.columns == ["degree", "computed", "conjectured", "diff"]
    assert df["diff"].to_list() == [0] * 7


def test_incompatible_group_rejected(F2):
    with pytest.raises(ValueError, match="ring mismatch"):
        invariant_basis(RingSpec(F2, 3, 2), gl_generators(F2, 2), 2)
    with pytest.raises(ValueError, match="infinite basis"):
        invariant_basis(RingSpec(F2, 2, None), gl_generators(F2, 2), 2)

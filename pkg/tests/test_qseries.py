import pytest

from src.algebra.qseries import (
    BetaVector,
    InexactDivisionError,
    TPoly,
    beta_vectors,
    binary_coefficient_probe,
    coefficient_profile,
    conjectured_series,
    e_exponent,
    f_support_analysis,
    gaussian_multinomial,
    k1_term,
    parabolic_conjectured_series,
    parabolic_series_terms,
    qbinom,
    tpoly_exact_div,
    truncated_power_scalar,
)


def test_qbinom_edges():
    assert qbinom(3, 0, 2) == TPoly.one()
    assert qbinom(2, 1, 2).coeffs() == [1, 1, 1]
    with pytest.raises(ValueError):
        qbinom(2, 3, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_qbinom_symmetry(q, m):
    for k in range(m + 1):
        assert qbinom(m, k, q) == qbinom(m, m - k, q)


def test_qbinom_3_2_q2():
    assert qbinom(3, 2, 2).support() == [0, 2, 3, 4, 5, 6, 8]
    assert set(qbinom(3, 2, 2).coeffs()) == {0, 1}


def test_conjectured_series_small():
    assert conjectured_series(2, 2, 2).coeffs() == [1, 0, 1, 1, 1, 0, 1]
    assert conjectured_series(3, 2, 1).coeffs() == [1, 0, 0, 0, 1]
    top = conjectured_series(2, 2, 3)
    assert top.degree == 14
    assert top.coeff(14) == 1


def test_k1_term():
    assert k1_term(2, 2, 2).coeffs() == [0, 0, 1, 1, 1]


def test_exact_division():
    num = TPoly.one_minus(6)
    assert tpoly_exact_div(num, TPoly.one_minus(2)).coeffs() == [1, 0, 1, 0, 1]
    with pytest.raises(InexactDivisionError, match="inexact division"):
        tpoly_exact_div(TPoly.one_minus(5), TPoly.one_minus(2))


def test_multinomial_with_one_part_is_qbinom():
    for m, k, q in [(3, 1, 2), (3, 2, 3), (4, 2, 2)]:
        assert gaussian_multinomial(m, (k,), q) == qbinom(m, k, q)


def test_shifted_numerator_is_inexact():
    with pytest.raises(InexactDivisionError):
        gaussian_multinomial(2, (1,), 2, numerator_start=1)


def test_beta_vectors_and_exponent():
    betas = beta_vectors((1, 1), 2)
    assert [b.parts for b in betas] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [b.parts for b in beta_vectors((1, 1), 1)] == [(0, 0), (0, 1), (1, 0)]
    assert e_exponent(2, (1, 1), BetaVector((0, 0)), 2) == 6
    assert BetaVector((1, 0)).fits_in((1, 1))
    assert not BetaVector((2, 0)).fits_in((1, 1))


def test_parabolic_conjectured_series():
    assert parabolic_conjectured_series(2, (1, 1), 2).coeffs() == [1, 1, 2, 2, 2, 1, 1]
    assert parabolic_conjectured_series(2, (2, 1), 1).coeffs() == [1, 0, 1, 1]
    assert parabolic_conjectured_series(2, (1, 2), 1).coeffs() == [1, 1, 0, 1]
    # uma só parte reduz ao caso GL_n
    assert parabolic_conjectured_series(3, (2,), 2) == conjectured_series(3, 2, 2)


def test_parabolic_terms_sum_to_series():
    terms = parabolic_series_terms(3, (2, 1, 3), 2)
    total = TPoly.zero()
    for term in terms:
        total = total + term.term
    assert total == parabolic_conjectured_series(3, (2, 1, 3), 2)
    assert all(term.beta.size <= 2 for term in terms)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_f_support_analysis(q):
    report = f_support_analysis(q)
    assert report["ok"]
    assert report["degree"] == 2 * (q**3 - q**2)


def test_f_support_q2():
    assert f_support_analysis(2)["support"] == [0, 2, 3, 4, 5, 6, 8]


@pytest.mark.parametrize("q,value", [(2, 1), (3, 35), (4, 2415), (5, 277464)])
def test_truncated_power_scalar(q, value):
    report = truncated_power_scalar(q)
    assert report["coefficient"] == value
    assert report["is_minus_one"]


def test_binary_probe_and_profile():
    assert binary_coefficient_probe(2, 1)["binary"]
    assert qbinom(4, 2, 2).coeff(12) == 3
    assert max(coefficient_profile(2, 4, 2)) >= 3
    assert set(coefficient_profile(2, 3, 2)) == {0, 1}

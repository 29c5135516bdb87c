import pytest

from wreathgroth import ring as rg
from wreathgroth import verify
from wreathgroth.errors import MissingDataError


Z = rg.integers()
C2 = rg.cyclic_group_algebra(2)


def _assert_green(report):
    bad = [(c.name, c.detail) for c in report.checks if not c.passed]
    assert not bad, bad


def test_symfun_suite():
    _assert_green(verify.suite_symfun(Z, 6, 0))


def test_oracle_crosscheck_suite():
    _assert_green(verify.suite_oracle_crosscheck(C2, 3, 0))


def test_commutation_suite():
    _assert_green(verify.suite_commutation(C2, 3, 0))


def test_presentation_suite():
    _assert_green(verify.suite_presentation(C2, 3, 0))


def test_presentation_suite_golden():
    _assert_green(verify.suite_presentation(rg.golden_ring(), 3, 0))


def test_hopf_suite():
    _assert_green(verify.suite_hopf(C2, 3, 0))


def test_lambda_suite():
    _assert_green(verify.suite_lambda(C2, 4, 0))
    with pytest.raises(MissingDataError):
        verify.suite_lambda(rg.matrix_ring(2), 2, 0)


def test_witt_suite():
    _assert_green(verify.suite_witt(Z, 3, 0))


def test_run_suite_rejects_unknown_name():
    with pytest.raises(ValueError):
        verify.run_suite("nonsense", Z, 2, 0)


def test_basis_independence_matrix_is_unimodular():
    rows = verify.basis_independence_matrix(C2, 2)
    for row in rows:
        for x in row:
            assert x.denominator == 1
    assert verify._determinant(rows) in (1, -1)


def test_determinant_helper():
    from fractions import Fraction

    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert verify._determinant(rows) == 1
    rows = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert verify._determinant(rows) == -1

from zhualg.identities import IdentityCase, b_sum, c_coefficient, c_sum, \
    check_c_family, check_derivative_collapse, check_descent_telescoping, \
    check_key_lemma_identity, check_mixed_mode_collapse, check_two_var_sum, \
    check_unit_sum_a, check_unit_sum_f, mixed_mode_collapse, one_plus_z, \
    run_identity_suite, two_var_sum, unit_sum_a, unit_sum_f
from zhualg.laurent import LaurentPoly
from zhualg.rational import Q

VZ = ("z",)


def test_unit_sum_a_explicit_n1():
    # B_1 = (1+z)/z - (1+z)/z^2 and C_1 = 1/z^2, so A_1 = B_1 + C_1 = 1
    b1 = b_sum(1)
    assert b1 == LaurentPoly(VZ, {(-1,): Q(1), (0,): Q(1),
                                  (-2,): Q(-1)}) + \
        LaurentPoly(VZ, {(-1,): Q(-1)})
    assert c_sum(1) == LaurentPoly(VZ, {(-2,): Q(1)})
    assert unit_sum_a(1) == LaurentPoly.one(VZ)


def test_unit_sums_collapse_to_one():
    for n in range(6):
        assert unit_sum_a(n) == LaurentPoly.one(VZ)
        assert unit_sum_f(n) == LaurentPoly.one(VZ)


def test_two_var_sum_vanishes():
    for n in range(4):
        assert not two_var_sum(n)
        assert two_var_sum(n) == two_var_sum(n, rewritten=True)


def test_c_coefficient_values():
    # c_1(1,0) = 0 by the cancelling pair of terms
    assert c_coefficient(1, 1, 0) == 0
    # a nonzero value outside the vanishing range
    assert c_coefficient(1, 1, 1) != 0


def test_mixed_mode_collapse_vanishing_range():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for i in range(1, k + 1):
                assert mixed_mode_collapse(n, k, i) == 0
    # i = 0 gives the untelescoped value 1, not 0
    assert mixed_mode_collapse(2, 1, 0) == 1


def test_case_groups_all_pass_small():
    for group in (check_unit_sum_a(3), check_unit_sum_f(3),
                  check_two_var_sum(2), check_c_family(3),
                  check_mixed_mode_collapse(3), check_key_lemma_identity(2)):
        for case in group:
            assert isinstance(case, IdentityCase)
            assert case.passed, case


def test_single_case_checks():
    assert check_derivative_collapse(4).passed
    assert check_descent_telescoping(3).passed


def test_suite_runs_clean_at_reduced_range():
    cases = run_identity_suite(4, 3)
    failures = [c for c in cases if not c.passed]
    assert failures == []
    assert len(cases) > 50


def test_one_plus_z_guard():
    import pytest
    with pytest.raises(ValueError):
        one_plus_z(-1)

import pytest

from zhualg.modules import an_action_check, apply_reassociate, o_j, o_zero, \
    omega_eigenvalue_report, omega_n, reassociate, reassociate_behavior_check, \
    reassociate_closed_form
from zhualg.rational import Q
from zhualg.voa import HeisenbergSpace, Vec, VirasoroSpace, conformal_vector


def test_omega_zero_of_fock_is_bottom(fock23):
    om = omega_n(fock23, 0, 4)
    assert om.dims == {0: 1, 1: 0, 2: 0, 3: 0, 4: 0}


def test_omega_one_of_fock(fock23):
    om = omega_n(fock23, 1, 5)
    assert om.dims == {0: 1, 1: 1, 2: 0, 3: 0, 4: 0, 5: 0}


def test_omega_eigenvalues_differ_by_degree(fock23):
    om = omega_n(fock23, 1, 5)
    eig = omega_eigenvalue_report(fock23, om)
    h = Q(2, 3)
    assert eig[0] == [h * h / 2]
    assert eig[1] == [h * h / 2 + 1]
    assert eig[1][0] - eig[0][0] == 1


def test_omega_virasoro_verma():
    verma = VirasoroSpace(Q(1, 2), highest_weight=Q(1, 16))
    om = omega_n(verma, 0, 3)
    # a Verma module at generic h has trivial singular vectors here:
    # only the bottom is annihilated by all lowering modes
    assert om.dims[0] == 1 and om.dims[1] == 0


def test_zero_mode_preserves_degree(fock23):
    om = conformal_vector(fock23.voa)
    v = Vec.basis((1,))
    img = o_zero(fock23, om, v)
    assert set(img.terms) <= {(1,)}
    # shifted mode o_j raises module degree by j
    up = o_j(fock23, Vec.basis((1,)), 1, v)
    assert set(up.terms) <= {(1, 1)}
    down = o_j(fock23, Vec.basis((1,)), -1, v)
    assert set(down.terms) <= {()}


def test_an_action_check_level_zero(heis, fock23):
    rep = an_action_check(heis, fock23, 0, 2, 3)
    for key in ("star_zero_mode", "mixed_mode", "ideal_annihilated"):
        assert rep[key]["failed"] == [], key


def test_reassociate_parameter_guard():
    with pytest.raises(ValueError):
        reassociate(0, 1, 1)          # needs i >= j
    with pytest.raises(ValueError):
        reassociate(-1, -1, 1)        # needs i >= 0
    with pytest.raises(ValueError):
        reassociate(1, -2, 1)         # needs j >= -n
    reassociate(2, -1, 1)             # i beyond n is allowed


def test_reassociate_matches_closed_form():
    for n in range(4):
        for i in range(n + 1):
            assert reassociate(i, -i, n) == reassociate_closed_form(i, n)


def test_reassociate_triangular_system():
    # defining property: sum_{m<=t} c_m C(n+i+t, t-m) = delta_{t,0}
    from zhualg.rational import binomial
    n, i, j = 2, 1, 1
    table = reassociate(i, j, n)
    coeffs = [table[(n, n + 1 + i + m)] for m in range(n + j + 1)]
    for t in range(n + j + 1):
        acc = sum((coeffs[m] * binomial(n + i + t, t - m)
                   for m in range(t + 1)), Q(0))
        assert acc == (1 if t == 0 else 0)


def test_reassociate_behavioral(heis, fock23):
    for (n, i, j) in ((0, 0, 0), (1, 1, -1), (1, 1, 0), (1, 2, -1)):
        rec = reassociate_behavior_check(heis, fock23, n, i, j,
                                         weight_cap=2, depth_cap=4)
        assert rec["failed"] == [], (n, i, j)


def test_apply_reassociate_zero_table(heis):
    out = apply_reassociate(heis, {}, Vec.basis((1,)), Vec.basis((1,)))
    assert not out

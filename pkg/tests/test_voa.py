import pytest
from hypothesis import given, settings, strategies as st

from zhualg.rational import Q, partition_count
from zhualg.voa import HeisenbergSpace, Vec, VirasoroSpace, conformal_vector, \
    exp_l1, heisenberg, make_backend, phi_map, sign_l0, state_weight, \
    vacuum, virasoro, virasoro_op, weight_components


def test_vec_arithmetic():
    v = Vec.basis((1,)) + 2 * Vec.basis((2,))
    assert v.coeff((2,)) == 2
    assert not (v - v)
    assert (-v).coeff((1,)) == -1
    assert len(v) == 2
    assert weight_components(v) == {1: Vec.basis((1,)),
                                    2: Vec.basis((2,)) * 2}


def test_make_backend():
    assert make_backend("heisenberg").kind == "heisenberg"
    assert make_backend("virasoro", Q(1, 2)).kind == "virasoro"
    with pytest.raises(ValueError):
        make_backend("virasoro")
    with pytest.raises(ValueError):
        make_backend("nope")


def test_heisenberg_commutator(heis):
    # [x(m), x(-m)] = m on the vacuum: x(m) x(-m) |0> = m |0>
    for m in range(1, 4):
        v = heis.gen_apply(m, heis.gen_apply(-m, Vec.basis(())))
        assert v == Vec.basis(()) * Q(m)
    # x(m) |0> = 0 for m >= 0
    assert not heis.gen_apply(2, Vec.basis(()))


def test_basis_dims_match_partition_numbers(heis, vir):
    graded = heis.graded_states(6)
    for w in range(7):
        assert len(graded[w]) == partition_count(w)
    graded_v = vir.graded_states(6)
    for w in range(7):
        assert len(graded_v[w]) == partition_count(w, 2)


def test_virasoro_central_term(vir):
    # [L(2), L(-2)] |0> = 4 L(0)|0> + (c/12)(8-2)|0> = (c/2)|0>
    v = vir.gen_apply(2, vir.gen_apply(-2, Vec.basis(())))
    assert v == Vec.basis(()) * (vir.c / 2)


def test_conformal_vector_gives_weight_grading(heis, vir):
    for space in (heis, vir):
        for parts in space.basis_states(4):
            v = Vec.basis(parts)
            assert virasoro_op(space, 0, v) == v * Q(state_weight(parts))


def test_translation_on_vacuum(heis, vir):
    for space in (heis, vir):
        assert not virasoro_op(space, -1, vacuum(space))


def test_mode_of_vacuum_state(heis):
    # the vacuum's vertex operator is the identity: 1_m = delta_{m,-1}
    v = Vec.basis((2, 1))
    assert heis.mode(vacuum(heis), -1, v) == v
    assert not heis.mode(vacuum(heis), 0, v)


def test_composite_mode_matches_iterated_generators(heis):
    # omega = (1/2) a(-1)a(-1)|0>; omega_1 = L(0) must weigh basis states
    om = conformal_vector(heis)
    w = Vec.basis((3, 1))
    assert heis.mode(om, 1, w) == w * 4
    # omega_0 = L(-1) raises weight by one and kills nothing linearly:
    # check commutation [L(-1), a(-k)] = k a(-k-1) indirectly
    lm = heis.mode(om, 0, Vec.basis((1,)))
    assert lm == Vec.basis((2,))


def test_fock_module_zero_mode():
    fock = HeisenbergSpace(Q(2, 3))
    assert fock.gen_apply(0, Vec.basis(())) == Vec.basis(()) * Q(2, 3)
    assert not fock.gen_apply(1, Vec.basis(()))
    assert fock.bottom_symbol == "|h>"


def test_virasoro_verma_min_depth():
    verma = VirasoroSpace(Q(1, 2), highest_weight=Q(1, 16))
    assert verma.min_depth == 1
    assert verma.gen_apply(0, Vec.basis(())) == Vec.basis(()) * Q(1, 16)


def test_sign_l0_and_exp_l1(heis):
    v = Vec.basis((2, 1))
    assert sign_l0(v) == -v
    assert sign_l0(Vec.basis((1, 1))) == Vec.basis((1, 1))
    # e^{L(1)} is unipotent: constant term preserved
    w = exp_l1(heis, v)
    assert w.coeff((2, 1)) == 1


@settings(deadline=None, max_examples=30)
@given(st.lists(st.integers(1, 3), min_size=0, max_size=3))
def test_phi_is_an_involution(parts):
    heis = heisenberg()
    v = Vec.basis(tuple(sorted(parts, reverse=True)))
    assert phi_map(heis, phi_map(heis, v)) == v


def test_phi_involution_virasoro(vir):
    for parts in vir.basis_states(5):
        v = Vec.basis(parts)
        assert phi_map(vir, phi_map(vir, v)) == v


def test_render(heis):
    assert heis.render(Vec.basis((2, 1)) * Q(1, 2)) == "1/2 a(-2)a(-1)|0>"
    assert heis.render(Vec()) == "0"

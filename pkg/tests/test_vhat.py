import pytest

from zhualg.rational import Q
from zhualg.vhat import VhatElement, degree_zero_homomorphism_check, \
    translate_rewrite, vhat_act, vhat_bracket, vhat_to_an
from zhualg.voa import HeisenbergSpace, Vec
from zhualg.zhu import on_generators


def test_element_algebra():
    x = VhatElement.single((1,), 0)
    y = VhatElement.single((1,), 1, Q(1, 2))
    s = x + 2 * y
    assert s.terms[((1,), 1)] == 1
    assert not (s - s)
    assert s.degrees() == [-1, 0]
    assert not s.is_homogeneous()
    assert s.degree_component(0) == x


def test_bracket_heisenberg_relations(heis):
    # [a(m), a(k)] = m delta_{m+k,0} acting on any Fock vector
    fock = HeisenbergSpace(Q(2, 3))
    w = Vec.basis((2, 1))
    for m in (-2, -1, 1, 2):
        for k in (-2, -1, 1, 2):
            br = vhat_bracket(heis, VhatElement.single((1,), m),
                              VhatElement.single((1,), k))
            expect = Vec.basis((2, 1)) * Q(m) if m + k == 0 else Vec()
            assert vhat_act(fock, br, w) == expect


def test_bracket_degree_additivity(heis):
    x = VhatElement.single((1, 1), 2)     # degree wt - m - 1 = -1
    y = VhatElement.single((1,), -3)      # degree 3
    br = vhat_bracket(heis, x, y)
    assert br.degrees() in ([], [2])


def test_translation_rewrite_acts_by_zero(heis):
    # (L(-1)a)(m) + m a(m-1) kills every module vector
    fock = HeisenbergSpace(Q(1))
    for m in (-2, 0, 1, 3):
        x = translate_rewrite(heis, Vec.basis((1,)), m)
        for parts in fock.basis_states(3):
            assert not vhat_act(fock, x, Vec.basis(parts))


def test_vhat_to_an_requires_degree_zero(heis):
    span = on_generators(heis, 0, 6, 3)
    with pytest.raises(ValueError):
        vhat_to_an(heis, VhatElement.single((1,), 1), span)
    img = vhat_to_an(heis, VhatElement.single((1,), 0), span)
    # the image is the fully reduced coset representative of a(-1)|0>,
    # which is nonzero and congruent to it modulo the ideal
    assert img
    diff = (img - Vec.basis((1,))).terms
    rem, _ = span.span.reduce(diff)
    assert not rem


def test_degree_zero_bracket_homomorphism(heis):
    span = on_generators(heis, 0, 10, 4)
    x = VhatElement.single((1,), 0)
    y = VhatElement.single((1, 1), 1)
    m = degree_zero_homomorphism_check(heis, x, y, 0, span)
    assert m.certified


def test_render(heis):
    x = VhatElement.single((1,), -1, Q(1, 2))
    assert "a(-1)|0>" in x.render(heis)
    assert VhatElement().render(heis) == "0"

"""The graded Lie algebra of formal modes a(m) and its degree-zero image.

Elements are finite sums sum c . a(m) with a a basis monomial of the algebra
and m an integer; a(m) is assigned degree wt a - m - 1.  The bracket is

    [a(p), b(q)] = sum_{i>=0} C(p, i) (a_i b)(p + q - i),

finite because a_i b vanishes once its weight drops below zero.  Elements are
formal: the translation relation (L(-1)a)(m) = -m . a(m-1) is available as a
rewrite on explicitly L(-1)-shaped inputs, but no complete normal form modulo
translation is attempted — equality across that relation is behavioral
(equal action on a module window).
"""

from __future__ import annotations

from .rational import Q, ZERO, binomial
from .voa import ModeSpace, Vec, state_weight, virasoro_op, weight_components


class VhatElement:
    """Sparse formal sum: {(state_parts, m): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, val in terms.items():
                v = Q(val)
                if v != 0:
                    self.terms[key] = v

    @classmethod
    def single(cls, parts: tuple, m: int, coeff=1):
        return cls({(tuple(parts), m): Q(coeff)})

    @classmethod
    def from_vec(cls, vec: Vec, m: int):
        return cls({(parts, m): c for parts, c in vec.items()})

    def iadd(self, other, scale=1):
        s = Q(scale)
        for key, val in other.terms.items():
            nv = self.terms.get(key, ZERO) + s * val
            if nv == 0:
                self.terms.pop(key, None)
            else:
                self.terms[key] = nv
        return self

    def __add__(self, other):
        out = VhatElement(self.terms)
        return out.iadd(other)

    def __sub__(self, other):
        out = VhatElement(self.terms)
        return out.iadd(other, -1)

    def __mul__(self, scalar):
        s = Q(scalar)
        return VhatElement({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VhatElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return sorted({state_weight(parts) - m - 1 for parts, m in self.terms})

    def degree_component(self, d: int):
        return VhatElement({(parts, m): c for (parts, m), c in self.terms.items()
                            if state_weight(parts) - m - 1 == d})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def render(self, space: ModeSpace) -> str:
        from .rational import format_rational
        if not self.terms:
            return "0"
        bits = []
        for (parts, m), c in sorted(self.terms.items()):
            bits.append("%s [%s](%d)" % (format_rational(c),
                                         space.render_state(parts), m))
        return " + ".join(bits)


def vhat_bracket(space: ModeSpace, x: VhatElement, y: VhatElement) -> VhatElement:
    """[x, y], bilinear in the single-mode brackets."""
    out = VhatElement()
    for (ap, p), cx in x.terms.items():
        a = Vec.basis(ap)
        for (bp, q), cy in y.terms.items():
            wa, wb = state_weight(ap), state_weight(bp)
            # a_i b = 0 once i > wa + wb - 1 (weight would go negative)
            for i in range(wa + wb):
                coef = binomial(p, i)
                if coef == 0:
                    continue
                prod = space.mode(a, i, Vec.basis(bp))
                if prod:
                    out.iadd(VhatElement.from_vec(prod, p + q - i),
                             cx * cy * coef)
    return out


def translate_rewrite(space: ModeSpace, a: Vec, m: int) -> VhatElement:
    """The translation relation as a rewrite: (L(-1)a)(m) -> -m . a(m-1)."""
    la = virasoro_op(space, -1, a)
    return VhatElement.from_vec(la, m) + VhatElement.from_vec(a, m - 1) * m


def vhat_act(space_or_module, x: VhatElement, w: Vec) -> Vec:
    """Action on a module: a(m) acts as the mode operator a_m."""
    out = Vec()
    for (parts, m), c in x.terms.items():
        out.iadd(space_or_module.mode(Vec.basis(parts), m, w), c)
    return out


def vhat_to_an(space: ModeSpace, x: VhatElement, on_span):
    """Degree-0 elements map onto the level-n algebra: a(wt a - 1) -> [a].

    Returns the reduced coset representative against the given O_n span.
    Raises on inhomogeneous or nonzero-degree input.
    """
    degs = x.degrees()
    if degs not in ([], [0]):
        raise ValueError("vhat_to_an needs a degree-0 element, got degrees %r"
                         % (degs,))
    v = Vec()
    for (parts, m), c in x.terms.items():
        if m != state_weight(parts) - 1:
            raise AssertionError("degree-0 term with unexpected mode index")
        v.iadd(Vec.basis(parts), c)
    remainder, _ = on_span.span.reduce(v.terms)
    return Vec(remainder)


def degree_zero_homomorphism_check(space: ModeSpace, x: VhatElement,
                                   y: VhatElement, n: int, on_span):
    """Image of [x,y] equals the star-commutator of the images modulo O_n.

    Uses the skew-residue congruence: for degree-0 a(wt a-1), b(wt b-1), the
    bracket image is Res_z Y(a,z)b (1+z)^{wt a-1}, which is congruent to
    a *_n b - b *_n a.
    """
    from .zhu import membership, star_n
    img_bracket = Vec()
    for (parts, m), c in vhat_bracket(space, x, y).terms.items():
        img_bracket.iadd(Vec.basis(parts), c)
    xa = Vec()
    for (parts, m), c in x.terms.items():
        xa.iadd(Vec.basis(parts), c)
    ya = Vec()
    for (parts, m), c in y.terms.items():
        ya.iadd(Vec.basis(parts), c)
    star_comm = star_n(space, xa, ya, n) - star_n(space, ya, xa, n)
    return membership(img_bracket - star_comm, on_span)

"""Desk-scale vertex operator algebras with an exact recursive mode calculus.

Two backends are provided: the rank-1 free boson (Heisenberg) and the
universal Virasoro vacuum module at rational central charge.  States are
canonical normal-ordered monomials of generator modes applied to a cyclic
vector, encoded as weakly decreasing tuples of positive mode depths.  The
same machinery drives both the algebra itself and its highest-weight modules
(see :mod:`zhualg.modules`): a module only differs in what the generator
modes do to the bottom vector.

The product u_m v for composite u is computed by the iterate recursion

    (x(-k)u')_m = sum_j (-1)^j C(-k, j)
                  ( x(-k-j) u'_{m+j}  -  (-1)^k u'_{m-k-j} x(j) ),

whose sums terminate because the grading is bounded below.  Results are
memoized per space.
"""

from __future__ import annotations

from .rational import Q, ZERO, binomial, format_rational, partitions


class Vec:
    """Sparse vector: finitely many monomial keys with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, val in terms.items():
                v = Q(val)
                if v != 0:
                    self.terms[key] = v

    @classmethod
    def basis(cls, key):
        v = cls()
        v.terms[key] = Q(1)
        return v

    @classmethod
    def zero(cls):
        return cls()

    def copy(self):
        v = Vec()
        v.terms = dict(self.terms)
        return v

    def iadd(self, other, scale=1):
        """In-place self += scale * other (builder use only)."""
        s = Q(scale)
        if s == 0:
            return self
        for key, val in other.terms.items():
            nv = self.terms.get(key, ZERO) + s * val
            if nv == 0:
                self.terms.pop(key, None)
            else:
                self.terms[key] = nv
        return self

    def __add__(self, other):
        return self.copy().iadd(other)

    def __sub__(self, other):
        return self.copy().iadd(other, -1)

    def __neg__(self):
        return Vec({k: -v for k, v in self.terms.items()})

    def __mul__(self, scalar):
        s = Q(scalar)
        if s == 0:
            return Vec()
        return Vec({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Vec) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def coeff(self, key):
        return self.terms.get(key, ZERO)


def state_weight(parts) -> int:
    return sum(parts)


def weight_components(vec: Vec):
    """Split a vector into weight-homogeneous pieces {weight: Vec}."""
    out = {}
    for key, val in vec.items():
        w = state_weight(key)
        out.setdefault(w, Vec()).terms[key] = val
    return out


class ModeSpace:
    """Common machinery for the VOA and its highest-weight modules.

    Subclasses fix the generator commutation rule and what modes do to the
    bottom (vacuum or highest-weight) vector.  ``self.voa`` is the space the
    left factor of ``mode`` lives in; for the algebra itself it is ``self``.
    """

    min_depth = 1
    gen_weight = 1
    gen_symbol = "?"
    bottom_symbol = "|0>"

    def __init__(self):
        self._gen_memo = {}
        self._mode_memo = {}
        self.voa = self

    # -- subclass hooks -----------------------------------------------
    def _bottom(self, m: int) -> Vec:
        raise NotImplementedError

    def _bracket(self, m: int, k: int, rest: tuple) -> Vec:
        """[x(m), x(-k)] applied to the monomial ``rest``."""
        raise NotImplementedError

    # -- generator modes ----------------------------------------------
    def gen_apply(self, m: int, vec) -> Vec:
        """Apply the generator mode x(m), normal-ordering the result."""
        if isinstance(vec, Vec):
            out = Vec()
            for key, val in vec.items():
                out.iadd(self._gen_state(m, key), val)
            return out
        return self._gen_state(m, vec)

    def _gen_state(self, m: int, parts: tuple) -> Vec:
        key = (m, parts)
        memo = self._gen_memo
        if key in memo:
            return memo[key]
        if not parts:
            result = self._bottom(m)
        else:
            k = parts[0]
            if m < 0 and -m >= k:
                result = Vec.basis((-m,) + parts)
            else:
                rest = parts[1:]
                result = self.gen_apply(-k, self._gen_state(m, rest))
                result = result + self._bracket(m, k, rest)
        memo[key] = result
        return result

    def _wdegree(self, wstate) -> int:
        """Grading degree of a state of this space (weight, for the algebra
        itself); the iterate recursion bounds its sums with it."""
        return state_weight(wstate)

    # -- general modes u_m --------------------------------------------
    def mode(self, u: Vec, m: int, w: Vec) -> Vec:
        """u_m w for u in the algebra and w in this space."""
        out = Vec()
        for ustate, uc in u.items():
            for wstate, wc in w.items():
                out.iadd(self._mode_state(ustate, m, wstate), uc * wc)
        return out

    def _mode_state(self, ustate: tuple, m: int, wstate: tuple) -> Vec:
        key = (ustate, m, wstate)
        memo = self._mode_memo
        if key in memo:
            return memo[key]
        if not ustate:
            result = Vec.basis(wstate) if m == -1 else Vec()
        else:
            k = ustate[0]
            rest = ustate[1:]
            rest_wt = state_weight(rest)
            deg_w = self._wdegree(wstate)
            gw = self.voa.gen_weight
            # field index of the generator mode x(-k) = gen_(n)
            n = gw - 1 - k
            result = Vec()
            # gen_(n-j) u'_{m+j} w : terminates once u'_{m+j} w drops below
            # the grading floor
            for j in range(0, rest_wt + deg_w - m):
                c = binomial(n, j)
                if c == 0:
                    continue
                inner = self._mode_state(rest, m + j, wstate)
                if inner:
                    sign = -1 if j % 2 else 1
                    result.iadd(self.gen_apply(-k - j, inner), sign * c)
            # - (-1)^n u'_{n+m-j} gen_(j) w, gen_(j) = x(j-gw+1); zero beyond
            # the depth of w
            for j in range(0, deg_w + gw):
                c = binomial(n, j)
                if c == 0:
                    continue
                xw = self._gen_state(j - gw + 1, wstate)
                if xw:
                    out = Vec()
                    for key2, val2 in xw.items():
                        out.iadd(self._mode_state(rest, n + m - j, key2), val2)
                    sign = -1 if (j + n) % 2 else 1
                    result.iadd(out, -sign * c)
        memo[key] = result
        return result

    # -- basis and rendering ------------------------------------------
    def basis_states(self, cap: int):
        """All monomials of weight (degree) <= cap, graded, deterministic."""
        out = []
        for w in range(cap + 1):
            out.extend(partitions(w, self.min_depth))
        return out

    def graded_states(self, cap: int):
        return {w: partitions(w, self.min_depth) for w in range(cap + 1)}

    def render_state(self, parts: tuple) -> str:
        body = "".join("%s(-%d)" % (self.gen_symbol, d) for d in parts)
        return body + self.bottom_symbol

    def render(self, vec: Vec) -> str:
        if not vec:
            return "0"
        bits = []
        for key, val in vec.sorted_items():
            bits.append("%s %s" % (format_rational(val), self.render_state(key)))
        return " + ".join(bits)


class HeisenbergSpace(ModeSpace):
    """Rank-1 free boson: [x(m), x(k)] = m delta_{m+k,0}.

    ``highest_weight=None`` gives the vacuum module, i.e. the algebra itself;
    a rational highest weight h gives the Fock module with x(0) = h on the
    bottom vector.
    """

    gen_symbol = "a"
    min_depth = 1

    def __init__(self, highest_weight=None):
        super().__init__()
        self.kind = "heisenberg"
        self.h = None if highest_weight is None else Q(highest_weight)
        if self.h is not None:
            self.bottom_symbol = "|h>"

    def _bottom(self, m: int) -> Vec:
        if m < 0:
            return Vec.basis((-m,))
        if m == 0 and self.h is not None:
            return Vec({(): self.h})
        return Vec()

    def _bracket(self, m: int, k: int, rest: tuple) -> Vec:
        if m == k:
            return Vec({rest: Q(m)})
        return Vec()


class VirasoroSpace(ModeSpace):
    """Virasoro modes: [L(m), L(k)] = (m-k) L(m+k) + delta (c/12)(m^3-m).

    The vacuum flavour (``highest_weight=None``) is the universal vacuum
    module at central charge c: depths >= 2 (L(-1) kills the vacuum), no
    quotient by singular vectors.  With a highest weight h it is the Verma
    module M(c, h), depths >= 1.
    """

    gen_symbol = "L"
    gen_weight = 2

    def __init__(self, central_charge, highest_weight=None):
        super().__init__()
        self.kind = "virasoro"
        self.c = Q(central_charge)
        self.h = None if highest_weight is None else Q(highest_weight)
        self.min_depth = 2 if self.h is None else 1
        if self.h is not None:
            self.bottom_symbol = "|h>"

    def _bottom(self, m: int) -> Vec:
        if self.h is None:
            if m <= -2:
                return Vec.basis((-m,))
            return Vec()
        if m < 0:
            return Vec.basis((-m,))
        if m == 0:
            return Vec({(): self.h})
        return Vec()

    def _bracket(self, m: int, k: int, rest: tuple) -> Vec:
        out = self.gen_apply(m - k, Vec.basis(rest)) * Q(m + k)
        if m == k:
            out.iadd(Vec.basis(rest), self.c / 12 * (m ** 3 - m))
        return out


def heisenberg():
    return HeisenbergSpace()


def virasoro(central_charge):
    return VirasoroSpace(central_charge)


def make_backend(name: str, central_charge=None):
    if name == "heisenberg":
        return heisenberg()
    if name == "virasoro":
        if central_charge is None:
            raise ValueError("virasoro backend needs a central charge")
        return virasoro(central_charge)
    raise ValueError("unknown backend %r" % name)


# -- distinguished vectors and sl2 operations -------------------------

def vacuum(space: ModeSpace) -> Vec:
    return Vec.basis(())


def conformal_vector(space: ModeSpace) -> Vec:
    if space.kind == "heisenberg":
        return Vec({(1, 1): Q(1, 2)})
    return Vec.basis((2,))


def virasoro_op(space: ModeSpace, i: int, v: Vec) -> Vec:
    """L(i) v on any space, via the conformal vector: L(i) = omega_{i+1}."""
    return space.mode(conformal_vector(space.voa), i + 1, v)


def exp_l1(space: ModeSpace, v: Vec) -> Vec:
    """e^{L(1)} v; finite because L(1) strictly lowers the weight."""
    out = Vec()
    term = v
    fact = Q(1)
    k = 0
    while term:
        out.iadd(term, 1 / fact)
        term = virasoro_op(space, 1, term)
        k += 1
        fact = fact * k
    return out


def sign_l0(v: Vec) -> Vec:
    """(-1)^{L(0)} v, i.e. each weight-k component scaled by (-1)^k."""
    out = Vec()
    for key, val in v.items():
        out.terms[key] = -val if state_weight(key) % 2 else val
    return out


def phi_map(space: ModeSpace, v: Vec) -> Vec:
    """The anti-involution candidate v -> e^{L(1)} (-1)^{L(0)} v."""
    return exp_l1(space, sign_l0(v))

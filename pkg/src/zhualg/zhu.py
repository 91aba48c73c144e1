"""The graded products, the ideal O_n, and the truncated quotient algebras.

Everything here happens inside a weight window: O_n mixes weights, so its
span is materialized only up to weight W + S (window plus slack) and
membership is a certificate-producing, sound-but-incomplete test.  A
``certified`` verdict is always genuine; ``not_found`` may just mean the
slack was too small.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import RowSpan
from .rational import Q, binomial
from .voa import ModeSpace, Vec, conformal_vector, vacuum, virasoro_op, \
    weight_components


def weighted_residue(space: ModeSpace, u: Vec, v: Vec, shift: int, power: int) -> Vec:
    """Res_z Y(u,z)v (1+z)^{wt u + shift} / z^{power}, extended bilinearly.

    Equals sum_i C(wt u + shift, i) u_{i - power} v on homogeneous u.  A
    negative exponent means the binomial expansion in nonnegative powers of
    z; the sum still terminates because u_{i-power} v = 0 once its weight
    wt u + wt v - (i - power) - 1 drops below zero.
    """
    out = Vec()
    max_wv = max((sum(parts) for parts in v.terms), default=0)
    for wt_u, u_part in weight_components(u).items():
        e = wt_u + shift
        cap = wt_u + max_wv + power - 1
        if e >= 0:
            cap = min(cap, e)
        for i in range(cap + 1):
            c = binomial(e, i)
            if c:
                out.iadd(space.mode(u_part, i - power, v), c)
    return out


def circle_n(space: ModeSpace, u: Vec, v: Vec, n: int) -> Vec:
    """u o_n v = Res_z Y(u,z)v (1+z)^{wt u + n} / z^{2n+2}."""
    return weighted_residue(space, u, v, n, 2 * n + 2)


def star_n(space: ModeSpace, u: Vec, v: Vec, n: int) -> Vec:
    """u *_n v = sum_{m=0}^n (-1)^m C(m+n, n) Res_z Y(u,z)v
    (1+z)^{wt u + n} / z^{n+m+1}; Zhu's product when n = 0."""
    out = Vec()
    for m in range(n + 1):
        sign = -1 if m % 2 else 1
        out.iadd(weighted_residue(space, u, v, n, n + m + 1),
                 sign * binomial(m + n, n))
    return out


def l_shift(space: ModeSpace, u: Vec) -> Vec:
    """(L(-1) + L(0)) u, the non-circle generators of O_n."""
    return virasoro_op(space, -1, u) + virasoro_op(space, 0, u)


def window_columns(space: ModeSpace, window_cap: int, hide_cap: int):
    """Pivot-priority column order for O_n row reduction.

    States of weight > hide_cap come first (weight descending), so a reduced
    row whose pivot lies at weight <= hide_cap is automatically supported in
    the low-weight window; then weight ascending, lexicographic within a
    weight.
    """
    cols = []
    graded = space.graded_states(window_cap)
    for w in range(window_cap, hide_cap, -1):
        cols.extend(graded[w])
    for w in range(0, hide_cap + 1):
        cols.extend(graded[w])
    return cols


@dataclass
class OnSpan:
    """Row-reduced span of the O_n generators inside a weight window."""

    space: ModeSpace
    n: int
    window: int          # W: quotient window
    slack: int           # S: extra weight allowed for generators
    span: RowSpan = field(default=None, repr=False)
    generator_tags: list = field(default_factory=list, repr=False)

    @property
    def support_cap(self):
        return self.window + self.slack

    def rank(self):
        return self.span.rank


def on_generators(space: ModeSpace, n: int, window: int, slack: int,
                  track_certificates=True) -> OnSpan:
    """Build the row-reduced span of {u o_n v} + {(L(-1)+L(0))u} in the window.

    Generators are all circle products of basis pairs whose full support
    (weight <= wt u + wt v + 2n + 1) fits under window + slack, plus the
    L-shift of every basis state of weight <= window + slack - 1.
    """
    cap = window + slack
    cols = window_columns(space, cap, window)
    span = RowSpan(cols, track_certificates=track_certificates)
    result = OnSpan(space, n, window, slack, span)
    basis = space.basis_states(cap)
    for u_parts in basis:
        wu = sum(u_parts)
        if wu + 1 <= cap:
            g = l_shift(space, Vec.basis(u_parts))
            if g:
                tag = ("L", u_parts)
                result.generator_tags.append(tag)
                span.add(g.terms, tag)
        for v_parts in basis:
            if wu + sum(v_parts) + 2 * n + 1 > cap:
                continue
            g = circle_n(space, Vec.basis(u_parts), Vec.basis(v_parts), n)
            if g:
                tag = ("circ", u_parts, v_parts)
                result.generator_tags.append(tag)
                span.add(g.terms, tag)
    return result


@dataclass
class Membership:
    certified: bool
    remainder: Vec
    combination: dict | None


def membership(x: Vec, span: OnSpan) -> Membership:
    """Certificate-producing reduction of x against the O_n span.

    ``certified`` is sound (x genuinely lies in O_n); a False verdict is
    inconclusive, a larger slack may still succeed.
    """
    for parts in x.terms:
        if sum(parts) > span.support_cap:
            raise ValueError("support exceeds the window: weight %d > %d"
                             % (sum(parts), span.support_cap))
    remainder, combo = span.span.reduce(x.terms)
    return Membership(not remainder, Vec(remainder), combo)


@dataclass
class QuotientTable:
    """Truncated algebra table: coset representatives of V^{<=W} mod O_n.

    Dimensions are reported per weight *at this window*; they upper-bound the
    true image dimensions and are exact when the slack suffices.
    """

    on_span: OnSpan
    rep_states: list
    dims_per_weight: dict
    table: dict          # (rep_i, rep_j) -> dict[rep index -> Q] or None

    def reduce_to_reps(self, x: Vec):
        """Coset coordinates of x, or None if it sticks out of the window."""
        remainder, _ = self.on_span.span.reduce(x.terms)
        coords = {}
        rep_index = {s: i for i, s in enumerate(self.rep_states)}
        for parts, val in remainder.items():
            if parts not in rep_index:
                return None
            coords[rep_index[parts]] = val
        return coords


def quotient_build(space: ModeSpace, n: int, window: int, slack: int,
                   with_table=True) -> QuotientTable:
    span = on_generators(space, n, window, slack, track_certificates=False)
    pivot_states = set(span.span.pivot_columns())
    reps = [s for s in space.basis_states(window) if s not in pivot_states]
    dims = {}
    for s in reps:
        dims[sum(s)] = dims.get(sum(s), 0) + 1
    qt = QuotientTable(span, reps, dims, {})
    if with_table:
        for i, si in enumerate(reps):
            for j, sj in enumerate(reps):
                prod = star_n(space, Vec.basis(si), Vec.basis(sj), n)
                qt.table[(i, j)] = qt.reduce_to_reps(prod)
    return qt


def phi_check(space: ModeSpace, n: int, span: OnSpan, weight_cap: int):
    """phi(u *_n v) - phi(v) *_n phi(u) in O_n, and phi^2 = id, windowed."""
    from .voa import phi_map
    results = {"pairs_tested": 0, "certified": 0, "failed": [],
               "involution_ok": True}
    basis = space.basis_states(weight_cap)
    for parts in space.basis_states(max(weight_cap, 4)):
        v = Vec.basis(parts)
        if phi_map(space, phi_map(space, v)) != v:
            results["involution_ok"] = False
    for up in basis:
        for vp in basis:
            u, v = Vec.basis(up), Vec.basis(vp)
            x = phi_map(space, star_n(space, u, v, n)) - \
                star_n(space, phi_map(space, v), phi_map(space, u), n)
            results["pairs_tested"] += 1
            if membership(x, span).certified:
                results["certified"] += 1
            else:
                results["failed"].append((up, vp))
    return results


def surjection_check(space: ModeSpace, n: int, window: int, slack: int,
                     pair_weight_cap: int):
    """Instance evidence for the surjection A_n(V) ->> A_{n-1}(V).

    (a) every O_n generator within the window is certified in the O_{n-1}
    span; (b) u *_n v - u *_{n-1} v is certified in O_{n-1} for all basis
    pairs up to the pair weight cap.
    """
    if n < 1:
        raise ValueError("surjection_check needs n >= 1")
    lower = on_generators(space, n - 1, window, slack)
    report = {"n": n, "generators_tested": 0, "generators_certified": 0,
              "star_pairs_tested": 0, "star_pairs_certified": 0,
              "failed": []}
    basis = space.basis_states(pair_weight_cap)
    for up in basis:
        g = l_shift(space, Vec.basis(up))
        gens = [(("L", up), g)] if g else []
        for vp in basis:
            if sum(up) + sum(vp) + 2 * n + 1 <= lower.support_cap:
                g = circle_n(space, Vec.basis(up), Vec.basis(vp), n)
                if g:
                    gens.append((("circ", up, vp), g))
        for tag, g in gens:
            report["generators_tested"] += 1
            if membership(g, lower).certified:
                report["generators_certified"] += 1
            else:
                report["failed"].append(("generator", tag))
    for up in basis:
        for vp in basis:
            u, v = Vec.basis(up), Vec.basis(vp)
            diff = star_n(space, u, v, n) - star_n(space, u, v, n - 1)
            report["star_pairs_tested"] += 1
            if membership(diff, lower).certified:
                report["star_pairs_certified"] += 1
            else:
                report["failed"].append(("star_diff", up, vp))
    return report


def skew_residue(space: ModeSpace, u: Vec, v: Vec) -> Vec:
    """Res_z Y(u,z)v (1+z)^{wt u - 1} (the commutator residue of *_n)."""
    return weighted_residue(space, u, v, -1, 0)


def star_opposite(space: ModeSpace, u: Vec, v: Vec, n: int) -> Vec:
    """The reversed-order expression congruent to u *_n v modulo O_n:

    sum_{m=0}^n (-1)^n C(m+n, n) Res_z Y(v,z)u (1+z)^{wt v + m - 1} / z^{n+m+1}.
    """
    out = Vec()
    sign = -1 if n % 2 else 1
    for m in range(n + 1):
        out.iadd(weighted_residue(space, v, u, m - 1, n + m + 1),
                 sign * binomial(m + n, n))
    return out


def omega_commutator(space: ModeSpace, u: Vec, n: int) -> Vec:
    """omega *_n u - u *_n omega."""
    om = conformal_vector(space)
    return star_n(space, om, u, n) - star_n(space, u, om, n)


def zhu_coincidence_check(space: ModeSpace, weight_cap: int):
    """star_0 equals the classical single-residue product on basis pairs."""
    basis = space.basis_states(weight_cap)
    report = {"pairs_tested": 0, "matched": 0, "failed": []}
    for up in basis:
        for vp in basis:
            u, v = Vec.basis(up), Vec.basis(vp)
            classical = weighted_residue(space, u, v, 0, 1)
            report["pairs_tested"] += 1
            if star_n(space, u, v, 0) == classical:
                report["matched"] += 1
            else:
                report["failed"].append((up, vp))
    return report


def algebra_suite(space: ModeSpace, n: int, weight_cap: int, slack: int):
    """Certify the structural identities of the level-n product inside O_n.

    Checks, each 100%-certified or listed as failed:
      * associator differences (u*v)*w - u*(v*w) on basis triples,
      * two-sided ideal products g *_n u and u *_n g for every O_n generator
        g built from pairs within the weight cap,
      * the two skew-symmetry congruences (reversed residue and
        reversed-order star expression),
      * centrality of the conformal vector.
    """
    window = 3 * weight_cap + 2 * n + 2
    span = on_generators(space, n, window, slack, track_certificates=False)
    basis = space.basis_states(weight_cap)
    checks = {}

    def run(name, items):
        rec = {"tested": 0, "certified": 0, "failed": []}
        for label, x in items:
            rec["tested"] += 1
            if membership(x, span).certified:
                rec["certified"] += 1
            else:
                rec["failed"].append(label)
        checks[name] = rec

    def associators():
        for up in basis:
            u = Vec.basis(up)
            for vp in basis:
                v = Vec.basis(vp)
                for wp in basis:
                    w = Vec.basis(wp)
                    x = star_n(space, star_n(space, u, v, n), w, n) - \
                        star_n(space, u, star_n(space, v, w, n), n)
                    yield (up, vp, wp), x

    def ideal_products():
        gens = []
        for up in basis:
            g = l_shift(space, Vec.basis(up))
            if g:
                gens.append((("L", up), g))
            for vp in basis:
                g = circle_n(space, Vec.basis(up), Vec.basis(vp), n)
                if g:
                    gens.append((("circ", up, vp), g))
        for tag, g in gens:
            for up in basis:
                u = Vec.basis(up)
                yield (tag, up, "left"), star_n(space, g, u, n)
                yield (tag, up, "right"), star_n(space, u, g, n)

    def skew_pairs():
        for up in basis:
            for vp in basis:
                u, v = Vec.basis(up), Vec.basis(vp)
                x = star_n(space, u, v, n) - star_n(space, v, u, n) - \
                    skew_residue(space, u, v)
                yield (up, vp), x

    def reversed_star():
        for up in basis:
            for vp in basis:
                u, v = Vec.basis(up), Vec.basis(vp)
                yield (up, vp), star_n(space, u, v, n) - \
                    star_opposite(space, u, v, n)

    def omega_comms():
        for up in basis:
            yield (up,), omega_commutator(space, Vec.basis(up), n)

    run("associator", associators())
    run("ideal_product", ideal_products())
    run("skew_residue", skew_pairs())
    run("reversed_star", reversed_star())
    run("omega_central", omega_comms())
    checks["_window"] = {"n": n, "W": window, "S": slack,
                         "generator_count": span.span.generator_count,
                         "rank": span.rank()}
    return checks

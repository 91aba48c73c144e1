"""Truncated induced modules over a level-n algebra input, and their radicals.

Given a finite-dimensional space U carrying a verified level-n algebra action,
the induced module places U in degree n and adjoins free generator letters of
degree 1 - n .. -1 (shallow annihilators) and >= 1 (creators); letters of
degree <= -(n+1) kill U and the degree-0 letter acts through U's action
matrix.  Two truncations make the module finite:

* degrees are clamped to [0, cap]: the negative-degree part of the exact
  induced module lies inside the radical (the quotient is degree-bounded
  below), and cap = D + headroom leaves room for intermediate excursions
  above the reported window D;
* basis enumeration bounds the total annihilator drop per word (``ann_cap``);
  the action itself is computed on whatever words arise, only *enumeration*
  is windowed.

The contragredient pairing is evaluated by the reassociation recursion: a
degree-0 word of shifted zero modes collapses pairwise, left to right, with
the coefficient tables of :func:`zhualg.modules.reassociate`, until a single
plain zero mode acts on U through its matrix.  The radical J is the kernel of
the windowed pairing matrix; enlarging the window can only shrink it.
"""

from __future__ import annotations

from .linalg import kernel_basis
from .modules import apply_reassociate, omega_n, reassociate
from .rational import Q, ZERO, binomial, partitions
from .voa import ModeSpace, Vec, state_weight, virasoro_op, weight_components
from .zhu import circle_n, l_shift, star_n


# -- small exact matrices (tuples of row tuples) ----------------------

def mat_zero(nrows, ncols):
    return tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows))


def mat_identity(n):
    return tuple(tuple(Q(1) if i == j else ZERO for j in range(n))
                 for i in range(n))


def mat_add(a, b, scale=1):
    s = Q(scale)
    return tuple(tuple(a[i][j] + s * b[i][j] for j in range(len(a[0])))
                 for i in range(len(a)))


def mat_mul(a, b):
    ncols = len(b[0]) if b else 0
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO)
                       for j in range(ncols)) for i in range(len(a)))


def mat_is_zero(a):
    return all(v == 0 for row in a for v in row)


# -- the level-n module input -----------------------------------------

class AnModuleInput:
    """A finite-dimensional module over the level-n algebra, as matrices.

    ``act_fn(parts)`` must return the matrix of the zero mode o(b) of the
    basis state ``parts`` in a fixed basis of U (columns index the source
    vector).  It has to be defined for arbitrary states, not only a weight
    window, because the pairing recursion produces deep composite states.
    """

    def __init__(self, voa: ModeSpace, n: int, dim: int, act_fn, labels=None):
        self.voa = voa
        self.n = n
        self.dim = dim
        self._act_fn = act_fn
        self.labels = labels or ["u%d" % i for i in range(dim)]
        self._memo = {}

    def act_state(self, parts: tuple):
        if parts not in self._memo:
            self._memo[parts] = self._act_fn(parts)
        return self._memo[parts]

    def act(self, vec: Vec):
        """Matrix of o(vec); o is defined per weight component, so this is
        just the linear extension over basis states."""
        out = mat_zero(self.dim, self.dim)
        for parts, c in vec.items():
            out = mat_add(out, self.act_state(parts), c)
        return out

    def axiom_report(self, weight_cap: int):
        """Check the action axioms on basis pairs inside the weight cap:
        o(u *_n v) = o(u) o(v), the translation combination acts by zero,
        and every circle product acts by zero."""
        rec = {"star_tested": 0, "star_ok": 0,
               "shift_tested": 0, "shift_ok": 0,
               "circle_tested": 0, "circle_ok": 0, "failed": []}
        basis = self.voa.basis_states(weight_cap)
        for up in basis:
            u = Vec.basis(up)
            g = l_shift(self.voa, u)
            rec["shift_tested"] += 1
            if mat_is_zero(self.act(g)):
                rec["shift_ok"] += 1
            else:
                rec["failed"].append(("shift", up))
            for vp in basis:
                v = Vec.basis(vp)
                rec["star_tested"] += 1
                if self.act(star_n(self.voa, u, v, self.n)) == \
                        mat_mul(self.act_state(up), self.act_state(vp)):
                    rec["star_ok"] += 1
                else:
                    rec["failed"].append(("star", up, vp))
                rec["circle_tested"] += 1
                if mat_is_zero(self.act(circle_n(self.voa, u, v, self.n))):
                    rec["circle_ok"] += 1
                else:
                    rec["failed"].append(("circle", up, vp))
        rec["passed"] = not rec["failed"]
        return rec

    def nonfactoring_report(self, weight_cap: int):
        """Witness that the action does not factor through level n-1: some
        level-(n-1) circle product acts by a nonzero matrix."""
        if self.n == 0:
            return {"applicable": False, "witness": None, "passed": True}
        basis = self.voa.basis_states(weight_cap)
        for up in basis:
            for vp in basis:
                g = circle_n(self.voa, Vec.basis(up), Vec.basis(vp),
                             self.n - 1)
                if g and not mat_is_zero(self.act(g)):
                    return {"applicable": True, "witness": (up, vp),
                            "passed": True}
        return {"applicable": True, "witness": None, "passed": False}


def an_module_from_omega(voa: ModeSpace, module: ModeSpace, n: int):
    """The level-n input carried by degrees 0..n of a highest-weight module.

    For a graded simple module those degrees are exactly the level-n
    lowest-weight subspace; the action matrices are the zero modes o(b)
    restricted to them (degree-preserving, so the matrices close on the
    chosen basis of module states).
    """
    states = []
    graded = module.graded_states(n)
    for d in range(n + 1):
        states.extend(graded.get(d, []))
    index = {s: i for i, s in enumerate(states)}
    dim = len(states)

    def act_fn(parts):
        w = state_weight(parts)
        cols = []
        for s in states:
            img = module.mode(Vec.basis(parts), w - 1, Vec.basis(s))
            col = [ZERO] * dim
            for key, c in img.items():
                if key not in index:
                    raise AssertionError("zero mode left the degree window")
                col[index[key]] = c
            cols.append(col)
        return tuple(tuple(cols[s][t] for s in range(dim))
                     for t in range(dim))

    labels = [module.render_state(s) for s in states]
    return AnModuleInput(voa, n, dim, act_fn, labels)


# -- growable exact row reduction -------------------------------------

class GrowingSpan:
    """Reduced row echelon span whose column set grows with the input.

    Pivot priority is the natural tuple order on the keys, which is fixed
    for a given key universe, so reduction is deterministic.  Tags give
    membership certificates exactly as in :class:`zhualg.linalg.RowSpan`.
    """

    def __init__(self, track=False):
        self.rows = []        # list of dict key -> Q
        self.combos = []
        self.pivots = {}      # key -> row number
        self.track = track

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, row, combo):
        changed = True
        while changed:
            changed = False
            for key in sorted(row):
                if key in self.pivots:
                    i = self.pivots[key]
                    c = row.pop(key)
                    for j, v in self.rows[i].items():
                        if j == key:
                            continue
                        nv = row.get(j, ZERO) - c * v
                        if nv == 0:
                            row.pop(j, None)
                        else:
                            row[j] = nv
                    if combo is not None:
                        for t, cv in self.combos[i].items():
                            nv = combo.get(t, ZERO) + c * cv
                            if nv == 0:
                                combo.pop(t, None)
                            else:
                                combo[t] = nv
                    changed = True
                    break
        return row, combo

    def add(self, vec, tag=None) -> bool:
        row = {k: Q(v) for k, v in vec.items() if Q(v) != 0}
        combo = {tag: Q(1)} if self.track else None
        row, combo = self._reduce(row, combo)
        if not row:
            return False
        piv = min(row)
        pval = row[piv]
        row = {k: v / pval for k, v in row.items()}
        if combo is not None:
            combo = {t: v / pval for t, v in combo.items()}
        # clear the new pivot from existing rows
        for i, other in enumerate(self.rows):
            if piv in other:
                c = other.pop(piv)
                for j, v in row.items():
                    if j == piv:
                        continue
                    nv = other.get(j, ZERO) - c * v
                    if nv == 0:
                        other.pop(j, None)
                    else:
                        other[j] = nv
                if self.track:
                    # row changed by -c * new_row: certificate follows
                    oc = self.combos[i]
                    for t, cv in combo.items():
                        nv = oc.get(t, ZERO) - c * cv
                        if nv == 0:
                            oc.pop(t, None)
                        else:
                            oc[t] = nv
        self.pivots[piv] = len(self.rows)
        self.rows.append(row)
        if self.track:
            self.combos.append(combo)
        return True

    def reduce(self, vec):
        row = {k: Q(v) for k, v in vec.items() if Q(v) != 0}
        combo = {} if self.track else None
        row, combo = self._reduce(row, combo)
        return row, combo

    def contains(self, vec) -> bool:
        row, _ = self.reduce(vec)
        return not row


# -- the truncated induced module -------------------------------------

class InducedModule(ModeSpace):
    """The induced module of a level-n input, truncated to degrees [0, cap].

    States are pairs (word, ui): ``word`` is a weakly increasing tuple of
    generator letter indices m with m <= -1 (creators, degree -m) or
    1 <= m <= n (shallow annihilators), applied left to right to the ui-th
    basis vector of U sitting in degree n.  Composite modes act through the
    same iterate recursion as on any graded module.
    """

    bottom_symbol = "|U>"

    def __init__(self, voa: ModeSpace, U: AnModuleInput, D: int,
                 ann_cap: int = 6, headroom: int | None = None):
        super().__init__()
        self.voa = voa
        self.U = U
        self.n = U.n
        self.D = D
        self.ann_cap = ann_cap
        self.headroom = U.n + 4 if headroom is None else headroom
        self.cap = D + self.headroom
        self.kind = voa.kind
        self.gen_symbol = voa.gen_symbol
        self._gen_parts = (1,) if voa.kind == "heisenberg" else (2,)
        self._gen0 = U.act_state(self._gen_parts)
        self._pair_memo = {}

    # -- grading and generator letters --------------------------------
    def _wdegree(self, state) -> int:
        word, _ = state
        return self.n - sum(word)

    def _clamped(self, state) -> Vec:
        d = self._wdegree(state)
        if 0 <= d <= self.cap:
            return Vec.basis(state)
        return Vec()

    def _gen_state(self, m: int, state) -> Vec:
        key = (m, state)
        memo = self._gen_memo
        if key in memo:
            return memo[key]
        word, ui = state
        n = self.n
        letter = m <= -1 or 1 <= m <= n
        if not word:
            if m == 0:
                result = Vec()
                for t in range(self.U.dim):
                    c = self._gen0[t][ui]
                    if c:
                        result.iadd(Vec.basis(((), t)), c)
            elif letter:
                result = self._clamped(((m,), ui))
            else:
                result = Vec()          # deep annihilator kills U
        else:
            k0 = word[0]
            if letter and m <= k0:
                result = self._clamped(((m,) + word, ui))
            else:
                rest = (word[1:], ui)
                result = self.gen_apply(k0, self._gen_state(m, rest))
                if self.voa.kind == "heisenberg":
                    if m + k0 == 0:
                        result = result + Vec.basis(rest) * Q(m)
                else:
                    result = result + \
                        self.gen_apply(m + k0, Vec.basis(rest)) * Q(m - k0)
                    if m + k0 == 0:
                        result = result + Vec.basis(rest) * \
                            (self.voa.c / 12 * (m ** 3 - m))
        memo[key] = result
        return result

    # -- windowed basis ------------------------------------------------
    def graded_states(self, cap: int, ann_cap: int | None = None):
        ann = self.ann_cap if ann_cap is None else ann_cap
        out = {d: [] for d in range(cap + 1)}
        pos_lists = [()]
        if self.n >= 1:
            for t in range(1, ann + 1):
                for parts in partitions(t, 1):
                    if parts and parts[0] <= self.n:
                        pos_lists.append(tuple(sorted(parts)))
        for plist in pos_lists:
            t = sum(plist)
            for s in range(0, cap - self.n + t + 1):
                d = self.n + s - t
                if d < 0 or d > cap:
                    continue
                for parts in partitions(s, 1):
                    word = tuple(-p for p in parts) + plist
                    for ui in range(self.U.dim):
                        out[d].append((word, ui))
        for d in out:
            out[d].sort(key=lambda st: (len(st[0]), st[0], st[1]))
        return out

    def basis_states(self, cap: int):
        graded = self.graded_states(cap)
        out = []
        for d in range(cap + 1):
            out.extend(graded[d])
        return out

    def render_state(self, state) -> str:
        word, ui = state
        body = "".join("%s(%d)" % (self.gen_symbol, m) for m in word)
        return body + "|%s>" % self.U.labels[ui]

    # -- the contragredient pairing ------------------------------------
    def _pair_matrix(self, word: tuple):
        """Matrix M with <u'_t, word . u_s> = M[t][s], by pairwise collapse
        of the degree-0 word through the reassociation tables."""
        if word in self._pair_memo:
            return self._pair_memo[word]
        items = [(Vec.basis(self._gen_parts), -m) for m in word]
        result = None
        while len(items) > 1:
            (a1, p1), (a2, p2) = items[0], items[1]
            if not (p1 >= p2 and p1 >= 0 and p1 + p2 >= 0):
                raise AssertionError(
                    "pairing word not collapse-ordered: %r" % (word,))
            table = reassociate(p1, p2, self.n)
            w = apply_reassociate(self.voa, table, a1, a2)
            if not w:
                result = mat_zero(self.U.dim, self.U.dim)
                break
            items = [(w, p1 + p2)] + items[2:]
        if result is None:
            if not items:
                result = mat_identity(self.U.dim)
            else:
                a, p = items[0]
                if p != 0:
                    raise AssertionError("word of nonzero total shift")
                result = self.U.act(a)
        self._pair_memo[word] = result
        return result

    def pairing_vector(self, vec: Vec):
        """The functional values (<u'_t, vec>)_t; zero off degree n."""
        out = [ZERO] * self.U.dim
        for state, c in vec.items():
            if self._wdegree(state) != self.n:
                continue
            mat = self._pair_matrix(state[0])
            ui = state[1]
            for t in range(self.U.dim):
                out[t] += c * mat[t][ui]
        return tuple(out)

    # -- mode words ----------------------------------------------------
    def apply_shift_word(self, word, vec: Vec) -> Vec:
        """Apply o_{q1}(b1) ... o_{qr}(br), rightmost first; ``word`` is a
        list of (state_parts, shift) pairs."""
        for parts, q in reversed(word):
            w = state_weight(parts)
            vec = self.mode(Vec.basis(parts), w - 1 - q, vec)
            if not vec:
                return vec
        return vec

    def pairing_words(self, from_degree: int, bweight_cap: int,
                      qdepth: int, max_len: int):
        """Windowed raising words from ``from_degree`` up to degree n."""
        t = self.n - from_degree
        basis = [s for s in self.voa.basis_states(bweight_cap) if s]
        words = []
        if t == 0:
            words.append([])
        for b in basis:
            words.append([(b, t)])
        if max_len >= 2:
            for b1 in basis:
                for b2 in basis:
                    for q2 in range(-qdepth, qdepth + 1):
                        q1 = t - q2
                        mid = from_degree + q2
                        if not (0 <= mid <= self.cap):
                            continue
                        if (q1, q2) == (t, 0) or abs(q1) > qdepth + abs(t):
                            continue
                        words.append([(b1, q1), (b2, q2)])
        if max_len >= 3:
            for b1 in basis:
                for b2 in basis:
                    for b3 in basis:
                        for q3 in range(-qdepth, qdepth + 1):
                            for q2 in range(-qdepth, qdepth + 1):
                                q1 = t - q2 - q3
                                m1 = from_degree + q3
                                m2 = m1 + q2
                                if not (0 <= m1 <= self.cap and
                                        0 <= m2 <= self.cap):
                                    continue
                                if abs(q1) > qdepth + abs(t):
                                    continue
                                words.append([(b1, q1), (b2, q2), (b3, q3)])
        return words

    # -- the radical ---------------------------------------------------
    def radical(self, bweight_cap: int = 2, qdepth: int | None = None,
                max_len: int = 2, ann_cap: int | None = None):
        """Windowed kernel of the pairing: per degree, the combinations of
        windowed basis states all of whose raised pairings vanish.

        The kernel can only shrink when the window grows, so equality of
        dimensions under enlargement is the stability test.
        """
        if qdepth is None:
            qdepth = self.n + 2
        graded = self.graded_states(self.D, ann_cap)
        kernel = {}
        for d in range(self.D + 1):
            cols = graded[d]
            if not cols:
                kernel[d] = []
                continue
            rows = []
            for word in self.pairing_words(d, bweight_cap, qdepth, max_len):
                pairs = [self.pairing_vector(
                    self.apply_shift_word(word, Vec.basis(s))) for s in cols]
                for t in range(self.U.dim):
                    row = {ci: pairs[ci][t] for ci in range(len(cols))
                           if pairs[ci][t] != 0}
                    if row:
                        rows.append(row)
            kern = kernel_basis(rows, len(cols))
            kernel[d] = [{cols[ci]: c for ci, c in k.items()} for k in kern]
        return {"kernel": kernel,
                "dims": {d: len(kernel[d]) for d in kernel},
                "window": {"bweight_cap": bweight_cap, "qdepth": qdepth,
                           "max_len": max_len,
                           "ann_cap": ann_cap or self.ann_cap}}

    def radical_intersect_bottom(self, rad) -> int:
        """dim(J window  intersect  U) at degree n."""
        span = GrowingSpan()
        for k in rad["kernel"].get(self.n, []):
            span.add(k)
        r0 = span.rank
        grow = 0
        for ui in range(self.U.dim):
            if span.add({((), ui): Q(1)}):
                grow += 1
        # dim(J + U) = r0 + grow; dim intersection = rank(J) + dim U - that
        return r0 + self.U.dim - (r0 + grow)

    # -- weak associativity relations ----------------------------------
    def series_coefficient(self, side: str, a, b_parts: tuple,
                           ustate, alpha: int, beta: int, exponent: int) -> Vec:
        """Coefficient of z0^alpha z2^beta in the truncated module, of

        left:  (z0+z2)^exponent Y(a, z0+z2) Y(b, z2) u,  region |z0| > |z2|,
        right: (z2+z0)^exponent Y(Y(a, z0) b, z2) u,     region |z2| > |z0|.
        """
        if not isinstance(a, Vec):
            a = Vec.basis(a)
        ub = Vec.basis(ustate)
        wb = state_weight(b_parts)
        b = Vec.basis(b_parts)
        out = Vec()
        if side == "left":
            lo = max(0, self.n + wb + beta - self.cap)
            hi = self.n + wb + beta
            for i in range(lo, hi + 1):
                c = binomial(alpha + i, i)
                if not c:
                    continue
                inner = self.mode(b, i - beta - 1, ub)
                if not inner:
                    continue
                out.iadd(self.mode(a, exponent - 1 - alpha - i, inner), c)
        elif side == "right":
            for wa, apart in weight_components(a).items():
                for i in range(0, wa + wb + alpha + 1):
                    c = binomial(exponent, i)
                    if not c:
                        continue
                    av = self.voa.mode(apart, i - 1 - alpha, b)
                    if not av:
                        continue
                    out.iadd(self.mode(av, exponent - i - 1 - beta, ub), c)
        else:
            raise ValueError("side must be 'left' or 'right'")
        return out

    def weak_assoc_defect(self, a_parts, b_parts, ustate, alpha, beta,
                          exp_shift: int = 0) -> Vec:
        exponent = state_weight(a_parts) + self.n + exp_shift
        return self.series_coefficient("left", a_parts, b_parts, ustate,
                                       alpha, beta, exponent) - \
            self.series_coefficient("right", a_parts, b_parts, ustate,
                                    alpha, beta, exponent)

    def w_relation_vectors(self, weight_cap: int, alpha_pad: int = 2):
        """The windowed family of weak-associativity relation coefficients.

        One vector per (a, b, u, degree, alpha); beta is pinned by the
        target degree.  Coefficients whose series terms would exceed the
        internal degree cap are skipped rather than silently truncated.
        """
        out = []
        basis = [s for s in self.voa.basis_states(weight_cap) if s]
        for a in basis:
            wa = state_weight(a)
            for b in basis:
                wb = state_weight(b)
                for ui in range(self.U.dim):
                    ustate = ((), ui)
                    for d in range(self.D + 1):
                        a_lo = max(-wa - wb - alpha_pad, self.n + d - self.cap)
                        a_hi = self.n + d + alpha_pad
                        for alpha in range(a_lo, a_hi + 1):
                            beta = d - wb - alpha
                            vec = self.weak_assoc_defect(a, b, ustate,
                                                         alpha, beta)
                            if vec:
                                out.append(((a, b, ui, alpha, beta), d, vec))
        return out

    def quotient_by_relations(self, relations):
        """Row-reduce the module closure of the relation vectors and report
        the graded dimensions of the quotient and injectivity of U.

        Closure is under generator letters only; composite modes act through
        letter products in this presentation, so the letter closure already
        spans the full module closure.
        """
        spans = {d: GrowingSpan() for d in range(self.D + 1)}
        queue = []
        for label, d, vec in relations:
            if spans[d].add(vec.terms):
                queue.append((d, vec))
        while queue:
            d, vec = queue.pop()
            for m in range(d - self.D, d + 1):
                nv = self.gen_apply(m, vec)
                if nv and spans[d - m].add(nv.terms):
                    queue.append((d - m, nv))
        graded = self.graded_states(self.D)
        dims = {}
        for d in range(self.D + 1):
            universe = set(graded[d])
            for row in spans[d].rows:
                universe.update(row)
            dims[d] = len(universe) - spans[d].rank
        # U stays injective in the quotient
        probe = spans[self.n]
        injective = True
        test = GrowingSpan()
        for row in probe.rows:
            test.add(row)
        for ui in range(self.U.dim):
            if not test.add({((), ui): Q(1)}):
                injective = False
        return {"span_ranks": {d: spans[d].rank for d in spans},
                "dims": dims, "bottom_injective": injective}

    def relations_in_radical(self, relations, bweight_cap=2,
                             qdepth=None, max_len=2):
        """Every relation vector pairs to zero against the word window —
        the submodule they generate is inside the radical."""
        if qdepth is None:
            qdepth = self.n + 2
        rec = {"tested": 0, "ok": 0, "failed": []}
        for label, d, vec in relations:
            rec["tested"] += 1
            good = True
            for word in self.pairing_words(d, bweight_cap, qdepth, max_len):
                pv = self.pairing_vector(self.apply_shift_word(word, vec))
                if any(v != 0 for v in pv):
                    good = False
                    break
            if good:
                rec["ok"] += 1
            else:
                rec["failed"].append(label)
        return rec

    # -- the quotient and the recovery of U ----------------------------
    def quotient_spans(self, rad):
        spans = {}
        for d, kern in rad["kernel"].items():
            sp = GrowingSpan()
            for k in kern:
                sp.add(k)
            spans[d] = sp
        return spans

    def omega_recovery(self, rad, cond_weight_cap: int = 3,
                       act_weight_cap: int = 3, strict: bool = False):
        """Recover the input U from the quotient L = M/J.

        The degree-n piece L(n) lies inside the level-n subspace of L, and
        for inputs none of whose summands factor through level n-1 it maps
        isomorphically onto the quotient of the level-n subspace by the
        level-(n-1) one.  The default mode therefore identifies L(n) with
        the recovered module and compares the induced action matrices with
        U's table state by state.

        ``strict=True`` additionally quotients out the computed
        level-(n-1) window at degree n — the kernel of the maps
        a(wt a + n - 1) down to degree 0 (mod J).  For an input with a
        summand that does factor through level n-1 the induction regrades
        that summand, its image lands in the lower window, and the strict
        quotient drops it; the lower-window dimension is reported in both
        modes so the difference is visible.
        """
        n = self.n
        spans = self.quotient_spans(rad)

        def reduceL(vec: Vec, d: int):
            row, _ = spans.get(d, GrowingSpan()).reduce(vec.terms)
            return row

        graded = self.graded_states(self.D)
        # representatives of L(n): non-pivot states of the J span
        piv = set(spans.get(n, GrowingSpan()).pivots)
        reps = [s for s in graded[n] if s not in piv]
        rep_idx = {s: i for i, s in enumerate(reps)}
        report = {"L_dim_at_n": len(reps)}

        # the previous-level window at degree n
        if n == 0:
            prev_vectors = []
        else:
            rows = []
            for a_parts in self.voa.basis_states(cond_weight_cap):
                if not a_parts:
                    continue
                wa = state_weight(a_parts)
                m = wa + n - 1
                imgs = []
                for s in reps:
                    img = self.mode(Vec.basis(a_parts), m, Vec.basis(s))
                    imgs.append(reduceL(img, 0))
                targets = sorted({t for img in imgs for t in img})
                for t in targets:
                    row = {ci: imgs[ci][t] for ci in range(len(reps))
                           if t in imgs[ci] and imgs[ci][t] != 0}
                    if row:
                        rows.append(row)
            kern = kernel_basis(rows, len(reps))
            prev_vectors = [{reps[ci]: c for ci, c in k.items()}
                            for k in kern]
        report["prev_window_dim_at_n"] = len(prev_vectors)

        span_prev = GrowingSpan()
        for k in prev_vectors:
            span_prev.add(dict(k))

        # images of the U basis, reduced mod J (and, in strict mode, mod
        # the previous-level window)
        solver = GrowingSpan(track=True)
        if strict:
            for i, row in enumerate(span_prev.rows):
                solver.add(dict(row), ("prev", i))
        u_images = []
        independent = True
        for ui in range(self.U.dim):
            img = reduceL(Vec.basis(((), ui)), n)
            u_images.append(img)
            if not solver.add(dict(img), ("u", ui)):
                independent = False
        report["bottom_images_independent"] = independent
        report["strict"] = strict
        report["quotient_dim"] = report["L_dim_at_n"] - \
            (report["prev_window_dim_at_n"] if strict else 0)

        # recovered action matrices
        recovered_ok = independent and \
            report["quotient_dim"] == self.U.dim
        compared = []
        if independent:
            for b in self.voa.basis_states(act_weight_cap):
                if not b:
                    continue
                wb = state_weight(b)
                mat = []
                ok = True
                for ui in range(self.U.dim):
                    rep_vec = Vec(u_images[ui])
                    y = self.mode(Vec.basis(b), wb - 1, rep_vec)
                    rem, combo = solver.reduce(reduceL(y, n))
                    if rem:
                        ok = False
                        break
                    col = [combo.get(("u", t), ZERO)
                           for t in range(self.U.dim)]
                    mat.append(col)
                if not ok:
                    compared.append((b, "not_in_span"))
                    recovered_ok = False
                    continue
                recovered = tuple(tuple(mat[s][t]
                                        for s in range(self.U.dim))
                                  for t in range(self.U.dim))
                expected = self.U.act_state(b)
                compared.append((b, recovered == expected))
                if recovered != expected:
                    recovered_ok = False
        report["action_compared"] = compared
        report["recovered_exactly"] = recovered_ok
        return report

    def ln_dims(self, rad):
        """Graded dimensions of L = M/J at the window."""
        graded = self.graded_states(self.D, rad["window"]["ann_cap"])
        return {d: len(graded[d]) - len(rad["kernel"][d])
                for d in range(self.D + 1)}

    # -- boundary expansion checks -------------------------------------
    def boundary_residue_check(self, a_parts, b_parts, ui, i: int, j: int):
        """Residue-level equality of the two regional expansions:
        Res_{z0} z0^{-1+i} of both sides of the weighted relation with
        exponent wt a + n + j agree after pairing (per z2 coefficient)."""
        wa = state_weight(a_parts)
        wb = state_weight(b_parts)
        exponent = wa + self.n + j
        ustate = ((), ui)
        alpha = -i
        beta0 = self.n - wb - alpha + j
        ok = True
        for db in (-1, 0, 1):
            beta = beta0 + db
            lv = self.pairing_vector(self.series_coefficient(
                "left", a_parts, b_parts, ustate, alpha, beta, exponent))
            rv = self.pairing_vector(self.series_coefficient(
                "right", a_parts, b_parts, ustate, alpha, beta, exponent))
            if lv != rv:
                ok = False
        return ok

    def weighted_relation_check(self, a_parts, b_parts, ui, j: int,
                                alpha_lo: int = -3, alpha_hi: int = 5):
        """All windowed coefficients of the j-shifted relation agree after
        pairing."""
        wb = state_weight(b_parts)
        ustate = ((), ui)
        ok = True
        for alpha in range(alpha_lo, alpha_hi + 1):
            beta = self.n - wb - alpha + j
            vec = self.weak_assoc_defect(a_parts, b_parts, ustate,
                                         alpha, beta, exp_shift=j)
            if any(v != 0 for v in self.pairing_vector(vec)):
                ok = False
        return ok

    def derivative_step_check(self, a_parts, b_parts, ui, m: int):
        """One downward-induction step: the residue of the total derivative
        d/dz0 [ z0^{m+1} (z0+z2)^{wt a + n} (either side) ] vanishes after
        pairing.  The z0-derivative of the state series inserts the
        translation image of a."""
        wa = state_weight(a_parts)
        wb = state_weight(b_parts)
        P = wa + self.n
        la = virasoro_op(self.voa, -1, Vec.basis(a_parts))
        ustate = ((), ui)
        ok = True
        for side in ("left", "right"):
            for db in (-1, 0, 1):
                beta = self.n - wb + 1 + m + db
                vec = self.series_coefficient(
                    side, a_parts, b_parts, ustate, -1 - m, beta, P) * Q(m + 1)
                vec = vec + self.series_coefficient(
                    side, a_parts, b_parts, ustate, -2 - m, beta, P - 1) * Q(P)
                vec = vec + self.series_coefficient(
                    side, la, b_parts, ustate, -2 - m, beta, P)
                if any(v != 0 for v in self.pairing_vector(vec)):
                    ok = False
        return ok


# -- public pipeline wrappers ------------------------------------------

def induce(voa: ModeSpace, U: AnModuleInput, D: int, ann_cap: int = 6,
           headroom: int | None = None,
           axiom_weight_cap: int = 3) -> InducedModule:
    """Build the truncated induced module after certifying U's action.

    Raises ``ValueError`` if U fails the level-n axiom check at the given
    weight window.
    """
    if D < U.n:
        raise ValueError("degree cap D=%d below the level n=%d" % (D, U.n))
    rep = U.axiom_report(axiom_weight_cap)
    if not rep["passed"]:
        raise ValueError("U fails the level-%d axiom check at window "
                         "(weight cap %d): %r"
                         % (U.n, axiom_weight_cap, rep["failed"][:3]))
    return InducedModule(voa, U, D, ann_cap=ann_cap, headroom=headroom)


def w_relations(M: InducedModule, weight_window: int, alpha_pad: int = 2):
    """Windowed weak-associativity relation vectors (the W family)."""
    return M.w_relation_vectors(weight_window, alpha_pad=alpha_pad)


def quotient_mbar(M: InducedModule, relations):
    """Quotient of the induced module by the submodule the relations
    generate, with graded dimensions and injectivity of the bottom."""
    return M.quotient_by_relations(relations)


def pairing_and_radical(M: InducedModule, bweight_cap: int = 2,
                        qdepth: int | None = None, max_len: int = 2,
                        stability_probe: bool = True):
    """The windowed radical J with its standard companion checks.

    Returns the radical data plus: dim(J intersect U), the graded
    dimensions of L = M/J, and (optionally) a monotone window-stability
    probe — the kernel recomputed at an enlarged window; if it shrinks,
    the run is flagged inconclusive.
    """
    rad = M.radical(bweight_cap=bweight_cap, qdepth=qdepth, max_len=max_len)
    out = {"radical": rad,
           "J_dims": rad["dims"],
           "J_intersect_U": M.radical_intersect_bottom(rad),
           "L_dims": M.ln_dims(rad)}
    if stability_probe:
        w = rad["window"]
        rad2 = M.radical(bweight_cap=w["bweight_cap"] + 1,
                         qdepth=w["qdepth"] + 1, max_len=w["max_len"])
        out["stability"] = {"enlarged_dims": rad2["dims"],
                            "stable": rad2["dims"] == rad["dims"]}
        out["inconclusive"] = not out["stability"]["stable"]
    else:
        out["inconclusive"] = False
    return out


def ln_quotient(M: InducedModule, rad):
    """Graded dimensions of L at the window (the quotient by J)."""
    return M.ln_dims(rad)


def omega_recovery_check(M: InducedModule, rad, cond_weight_cap: int = 3,
                         act_weight_cap: int = 3, strict: bool = False):
    """Recover the input module from L and compare action tables."""
    return M.omega_recovery(rad, cond_weight_cap=cond_weight_cap,
                            act_weight_cap=act_weight_cap, strict=strict)

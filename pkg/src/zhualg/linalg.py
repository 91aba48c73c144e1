"""Exact sparse row reduction over the rationals, with membership certificates.

A ``RowSpan`` maintains a reduced row-echelon basis for the span of the
vectors fed to it.  Column order is fixed up front and doubles as the pivot
priority: the pivot of a row is its first nonzero entry in that order, which
is what makes windowed quotients deterministic.  Each stored row optionally
remembers the combination of original generators it came from, so membership
tests can return an explicit certificate.
"""

from __future__ import annotations

from .rational import Q, ZERO


class RowSpan:
    def __init__(self, columns, track_certificates=True):
        self.columns = list(columns)
        self.col_index = {c: i for i, c in enumerate(self.columns)}
        if len(self.col_index) != len(self.columns):
            raise ValueError("duplicate column keys")
        self.track = track_certificates
        self.rows = []        # list of dict[col_idx -> Q], reduced echelon
        self.combos = []      # parallel list of dict[tag -> Q] (if tracking)
        self.pivot_of_row = []
        self.pivots = {}      # col_idx -> row number
        self.generator_count = 0

    @property
    def rank(self):
        return len(self.rows)

    def _to_indexed(self, vec):
        out = {}
        for key, val in vec.items():
            v = Q(val)
            if v != 0:
                if key not in self.col_index:
                    raise KeyError("vector support outside the column window: %r" % (key,))
                out[self.col_index[key]] = v
        return out

    def _reduce_indexed(self, row, combo):
        for col in range(len(self.columns)):
            if col in row and col in self.pivots:
                c = row.pop(col)
                prow = self.rows[self.pivots[col]]
                for j, v in prow.items():
                    if j == col:
                        continue
                    nv = row.get(j, ZERO) - c * v
                    if nv == 0:
                        row.pop(j, None)
                    else:
                        row[j] = nv
                if combo is not None:
                    pcombo = self.combos[self.pivots[col]]
                    for tag, cv in pcombo.items():
                        nv = combo.get(tag, ZERO) + c * cv
                        if nv == 0:
                            combo.pop(tag, None)
                        else:
                            combo[tag] = nv
        return row, combo

    def add(self, vec, tag=None) -> bool:
        """Add a generator; returns True when it enlarges the span."""
        self.generator_count += 1
        row = self._to_indexed(vec)
        combo = {tag: Q(1)} if self.track else None
        row, combo = self._reduce_indexed(row, combo)
        if not row:
            return False
        piv = min(row)
        pval = row[piv]
        row = {j: v / pval for j, v in row.items()}
        if combo is not None:
            combo = {t: v / pval for t, v in combo.items()}
        rownum = len(self.rows)
        # full RREF: clear this pivot column from the existing rows
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
                    # the row changed by -c * new_row, so its certificate
                    # must change by -c * new_combo
                    ocombo = self.combos[i]
                    for t, cv in combo.items():
                        nv = ocombo.get(t, ZERO) - c * cv
                        if nv == 0:
                            ocombo.pop(t, None)
                        else:
                            ocombo[t] = nv
        self.rows.append(row)
        if self.track:
            self.combos.append(combo)
        self.pivot_of_row.append(piv)
        self.pivots[piv] = rownum
        return True

    def reduce(self, vec):
        """Reduce ``vec`` against the span.

        Returns ``(remainder, combination)`` with ``vec = remainder +
        sum(combination[tag] * generator[tag])``.  The remainder is empty
        exactly when ``vec`` lies in the span; the combination is ``None``
        when certificate tracking is off.
        """
        row = self._to_indexed(vec)
        combo = {} if self.track else None
        row, combo = self._reduce_indexed(row, combo)
        remainder = {self.columns[j]: v for j, v in row.items()}
        return remainder, combo

    def contains(self, vec) -> bool:
        remainder, _ = self.reduce(vec)
        return not remainder

    def pivot_columns(self):
        return [self.columns[self.pivot_of_row[i]] for i in range(len(self.rows))]


def kernel_basis(rows, ncols):
    """Kernel of the matrix whose rows are dicts {col_idx: Q}.

    Returns a list of kernel vectors (dicts {col_idx: Q}), computed by exact
    Gaussian elimination with deterministic pivoting (lowest column first).
    """
    span = RowSpan(range(ncols), track_certificates=False)
    for r in rows:
        span.add(r)
    pivot_cols = set(span.pivot_of_row)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = {f: Q(1)}
        for i, row in enumerate(span.rows):
            if f in row:
                vec[span.pivot_of_row[i]] = -row[f]
        basis.append(vec)
    return basis

"""Exact rational scalars and the integer combinatorics shared by every module.

All coefficients in the library are exact rationals; there is no floating
point anywhere.  ``gmpy2.mpq`` is used when available (it is markedly faster
for the big row reductions), with ``fractions.Fraction`` as a drop-in
fallback.
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rational(value, den=None):
    """Coerce ``value`` (int, string like ``"2/3"``, or rational) to a scalar."""
    if den is not None:
        return Q(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    return Q(value)


def parse_rational(text: str):
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError("zero denominator in %r" % text)
        return Q(int(num), d)
    return Q(int(text))


def format_rational(q) -> str:
    """Render a scalar as ``"p/q"`` (or ``"p"`` when the denominator is 1)."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def binomial(n: int, k: int):
    """Binomial coefficient C(n, k) for arbitrary integer upper index.

    C(n, k) = 0 for k < 0.  For n < 0 and k >= 0 the standard extension
    C(n, k) = (-1)^k C(-n+k-1, k) is used, so the Pascal rule
    C(l, k) = C(l-1, k) + C(l-1, k-1) holds for all integers l, k.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(-n + k - 1, k)


def partitions(total: int, min_part: int = 1, max_part: int | None = None):
    """All partitions of ``total`` with parts >= ``min_part``.

    Returned as tuples sorted weakly decreasing, listed in lexicographically
    decreasing order, e.g. partitions(4) = [(4,), (3,1), (2,2), (2,1,1),
    (1,1,1,1)].  The empty partition is the unique partition of 0.
    """
    if total < 0:
        return []
    if max_part is None:
        max_part = total
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), min_part - 1, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(total, max_part, [])
    return out


def partition_count(total: int, min_part: int = 1) -> int:
    """Number of partitions of ``total`` with parts >= ``min_part``."""
    if total < 0:
        return 0
    # p(t; parts >= m) via the bounded-part recurrence
    table = {(0, 0): 1}

    def count(rem, cap):
        if rem == 0:
            return 1
        if cap < min_part:
            return 0
        key = (rem, cap)
        if key not in table:
            table[key] = sum(count(rem - p, p) for p in range(min_part, min(cap, rem) + 1))
        return table[key]

    return count(total, total)

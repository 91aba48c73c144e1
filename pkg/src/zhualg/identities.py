"""Symbolic verification of the combinatorial identities behind the products.

Every check builds exact Laurent polynomials in one or two variables and
tests for literal equality; there is no numerical tolerance.  Wherever an
object has two published expressions (a defining double sum and a rewritten
single sum), both are constructed independently and compared.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .rational import Q, ZERO, binomial


@dataclass
class IdentityCase:
    name: str
    parameters: dict
    passed: bool
    detail: str = ""


VARS_Z = ("z",)
VARS_WZ = ("w", "z")


def _zpoly(terms):
    """{exponent: coeff} -> LaurentPoly in z."""
    return LaurentPoly(VARS_Z, {(e,): c for e, c in terms.items()})


def one_plus_z(power: int) -> LaurentPoly:
    """(1+z)^power as an exact polynomial (power >= 0) over z."""
    if power < 0:
        raise ValueError("finite expansion needs power >= 0")
    return _zpoly({i: binomial(power, i) for i in range(power + 1)})


# ---------------------------------------------------------------------------
# the telescoped sums B, C, D, E and the two unit sums built from them
# ---------------------------------------------------------------------------

def b_sum(n: int) -> LaurentPoly:
    """B_n = sum_{k=0}^n (-1)^k C(n+k-1, k) (1+z)^n / z^{n+k}."""
    out = LaurentPoly.zero(VARS_Z)
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        out = out + one_plus_z(n) * _zpoly({-(n + k): Q(sign * binomial(n + k - 1, k))})
    return out


def c_sum(n: int) -> LaurentPoly:
    """C_n = sum_{k=1}^n C(n+k-1, k-1) (1+z)^{k-1} / z^{n+k}."""
    out = LaurentPoly.zero(VARS_Z)
    for k in range(1, n + 1):
        out = out + one_plus_z(k - 1) * _zpoly({-(n + k): Q(binomial(n + k - 1, k - 1))})
    return out


def unit_sum_a(n: int) -> LaurentPoly:
    """The double-sum unit expression, directly from its definition:

    sum_{k=0}^n sum_{m=0}^{n-k} (-1)^m C(m+n+k, m) (1+z)^n / z^{m+n+k}
    + sum_{k=1}^n sum_{m=0}^{n-k} C(m+n+k, m) (-1)^{n+k} (1+z)^{m+k-1}
      / z^{m+n+k}.
    """
    out = LaurentPoly.zero(VARS_Z)
    for k in range(n + 1):
        for m in range(n - k + 1):
            sign = -1 if m % 2 else 1
            out = out + one_plus_z(n) * _zpoly(
                {-(m + n + k): Q(sign * binomial(m + n + k, m))})
    for k in range(1, n + 1):
        for m in range(n - k + 1):
            sign = -1 if (n + k) % 2 else 1
            out = out + one_plus_z(m + k - 1) * _zpoly(
                {-(m + n + k): Q(sign * binomial(m + n + k, m))})
    return out


def unit_sum_a_bc_form(n: int) -> LaurentPoly:
    """The rewritten form B_n + (-1)^{n-1} C_n of the same expression."""
    sign = -1 if n % 2 == 0 else 1
    return b_sum(n) + c_sum(n) * Q(sign)


def d_sum(n: int) -> LaurentPoly:
    """D_n = sum_{m=0}^n C(m+n, n) (-1)^m (1+z)^{n+1} / z^{n+m+1}."""
    out = LaurentPoly.zero(VARS_Z)
    for m in range(n + 1):
        sign = -1 if m % 2 else 1
        out = out + one_plus_z(n + 1) * _zpoly(
            {-(n + m + 1): Q(sign * binomial(m + n, n))})
    return out


def e_sum(n: int) -> LaurentPoly:
    """E_n = sum_{m=0}^n C(m+n, n) (1+z)^m / z^{n+m+1}.

    (The source derivation prints a spurious (-1)^m here; that sign
    contradicts both the bridging relation E_n = C_n + C(2n,n)(1+z)^n
    /z^{2n+1} and the split F_n = D_n + (-1)^{n+1} E_n, each of which pins
    the unsigned form.)
    """
    out = LaurentPoly.zero(VARS_Z)
    for m in range(n + 1):
        out = out + one_plus_z(m) * _zpoly(
            {-(n + m + 1): Q(binomial(m + n, n))})
    return out


def unit_sum_f(n: int) -> LaurentPoly:
    """F_n = sum_m C(m+n,n) ((-1)^m (1+z)^{n+1} - (-1)^n (1+z)^m)/z^{n+m+1},
    built directly from its definition."""
    out = LaurentPoly.zero(VARS_Z)
    sgn_n = -1 if n % 2 else 1
    for m in range(n + 1):
        sign = -1 if m % 2 else 1
        num = one_plus_z(n + 1) * Q(sign) - one_plus_z(m) * Q(sgn_n)
        out = out + num * _zpoly({-(n + m + 1): Q(binomial(m + n, n))})
    return out


def unit_sum_f_de_form(n: int) -> LaurentPoly:
    """The split form D_n + (-1)^{n+1} E_n."""
    sign = -1 if n % 2 == 0 else 1
    return d_sum(n) + e_sum(n) * Q(sign)


def check_unit_sum_a(n: int):
    """Both forms of the first unit sum equal 1, plus the telescoping steps
    for B and C used in its derivation."""
    cases = []
    direct = unit_sum_a(n)
    rewritten = unit_sum_a_bc_form(n)
    cases.append(IdentityCase("unit_sum_a.direct", {"n": n},
                              direct == LaurentPoly.one(VARS_Z)))
    cases.append(IdentityCase("unit_sum_a.two_forms_agree", {"n": n},
                              direct == rewritten))
    if n >= 1:
        sign_prev = -1 if n % 2 == 0 else 1
        step_b = b_sum(n) - b_sum(n - 1) \
            - one_plus_z(n - 1) * _zpoly({-(2 * n - 1): Q(sign_prev * binomial(2 * (n - 1), n - 1))}) \
            - one_plus_z(n) * _zpoly({-(2 * n): Q(-sign_prev * binomial(2 * n - 1, n))})
        cases.append(IdentityCase("unit_sum_a.b_recursion", {"n": n}, not step_b))
        sgn = -1 if (n + 1) % 2 else 1
        sgn_n = -1 if n % 2 else 1
        step_c = c_sum(n) * Q(sgn) - c_sum(n - 1) * Q(sgn_n) \
            - one_plus_z(n - 1) * _zpoly({-(2 * n - 1): Q(sgn_n * binomial(2 * n - 2, n - 1))}) \
            - one_plus_z(n) * _zpoly({-(2 * n): Q(-sgn_n * binomial(2 * n - 1, n - 1))})
        cases.append(IdentityCase("unit_sum_a.c_recursion", {"n": n}, not step_c))
    return cases


def check_unit_sum_f(n: int):
    """F_n = 1 both ways, and the bridging relations to B_n and C_n."""
    cases = []
    direct = unit_sum_f(n)
    split = unit_sum_f_de_form(n)
    cases.append(IdentityCase("unit_sum_f.direct", {"n": n},
                              direct == LaurentPoly.one(VARS_Z)))
    cases.append(IdentityCase("unit_sum_f.two_forms_agree", {"n": n},
                              direct == split))
    sgn_n = -1 if n % 2 else 1
    bridge_d = d_sum(n) - b_sum(n) \
        - one_plus_z(n) * _zpoly({-(2 * n + 1): Q(sgn_n * binomial(2 * n, n))})
    cases.append(IdentityCase("unit_sum_f.d_bridge", {"n": n}, not bridge_d))
    bridge_e = e_sum(n) - c_sum(n) \
        - one_plus_z(n) * _zpoly({-(2 * n + 1): Q(binomial(2 * n, n))})
    cases.append(IdentityCase("unit_sum_f.e_bridge", {"n": n}, not bridge_e))
    return cases


# ---------------------------------------------------------------------------
# the two-variable vanishing sum and its coefficient family c_n(p, q)
# ---------------------------------------------------------------------------

def two_var_sum(n: int, rewritten=False) -> LaurentPoly:
    """The two-variable expression that vanishes identically:

    sum_{m=0}^n (-1)^m C(m+n, n)
      ( sum_{i=0}^{n-m} sum_{j=0}^{m} C(-m-n-1, i) C(m, j) (-1)^i
          w^{i+j} / z^{i+m}  -  z^{-m} ).

    The subtracted term is z^{-m}, not the printed constant 1: the proof
    extracts it as the w^0 part of the z^{-m} coefficient, and with a bare
    1 the sum does not vanish (n = 1 already fails).

    ``rewritten`` uses the positive-binomial form C(m+n+i, i) in place of
    (-1)^i C(-m-n-1, i).
    """
    out = LaurentPoly.zero(VARS_WZ)
    for m in range(n + 1):
        sgn_m = -1 if m % 2 else 1
        outer = Q(sgn_m * binomial(m + n, n))
        inner = LaurentPoly.monomial(VARS_WZ, (0, -m), -1)
        for i in range(n - m + 1):
            if rewritten:
                ci = Q(binomial(m + n + i, i))
            else:
                sgn_i = -1 if i % 2 else 1
                ci = Q(sgn_i * binomial(-m - n - 1, i))
            for j in range(m + 1):
                inner = inner + LaurentPoly.monomial(
                    VARS_WZ, (i + j, -(i + m)), ci * binomial(m, j))
        out = out + inner * outer
    return out


def c_coefficient(n: int, p: int, q: int):
    """c_n(p, q) = sum_{m=0}^p (-1)^m C(m+n, n) C(n+p, n+m) C(m, q)."""
    acc = ZERO
    for m in range(p + 1):
        sign = -1 if m % 2 else 1
        acc += Q(sign * binomial(m + n, n) * binomial(n + p, n + m)
                 * binomial(m, q))
    return acc


def check_two_var_sum(n: int):
    cases = [IdentityCase("two_var_sum.vanishes", {"n": n},
                          not two_var_sum(n)),
             IdentityCase("two_var_sum.two_forms_agree", {"n": n},
                          two_var_sum(n) == two_var_sum(n, rewritten=True))]
    return cases


def check_c_family(max_n: int):
    """Vanishing for 1 <= q+1 <= p <= n and the descent recursion
    c_n(p,q) = c_{n-1}(p,q) - c_n(p-1, q-1) on the same range."""
    cases = []
    for n in range(1, max_n + 1):
        van_ok = True
        rec_ok = True
        for p in range(1, n + 1):
            for q in range(p):
                if c_coefficient(n, p, q) != 0:
                    van_ok = False
                if c_coefficient(n, p, q) != \
                        c_coefficient(n - 1, p, q) - c_coefficient(n, p - 1, q - 1):
                    rec_ok = False
        cases.append(IdentityCase("c_family.vanishing", {"n": n}, van_ok))
        cases.append(IdentityCase("c_family.recursion", {"n": n}, rec_ok))
    return cases


# ---------------------------------------------------------------------------
# in-proof identities
# ---------------------------------------------------------------------------

def check_derivative_collapse(n: int):
    """sum_{m=0}^n C(m+n,n)(-1)^m (mz + n + m + 1)/z^{n+m+2}
    = (-1)^n C(2n, n) (2n+1) / z^{2n+2}; the scalar collapse used to show
    the translation-plus-weight shift lands in the level-n ideal."""
    lhs = LaurentPoly.zero(VARS_Z)
    for m in range(n + 1):
        sign = -1 if m % 2 else 1
        coeff = Q(sign * binomial(m + n, n))
        lhs = lhs + _zpoly({-(n + m + 1): coeff * m, -(n + m + 2): coeff * (n + m + 1)})
    sgn_n = -1 if n % 2 else 1
    rhs = _zpoly({-(2 * n + 2): Q(sgn_n * binomial(2 * n, n) * (2 * n + 1))})
    return IdentityCase("derivative_collapse", {"n": n}, lhs == rhs)


def mixed_mode_collapse(n: int, k: int, i: int):
    """sum_{m=0}^i C(2n+m-k, m) C(-m-2n-1+k, i-m), which vanishes for
    1 <= i <= k <= n — the collapse making the mixed-mode identity exact."""
    acc = ZERO
    for m in range(i + 1):
        acc += Q(binomial(2 * n + m - k, m) * binomial(-m - 2 * n - 1 + k, i - m))
    return acc


def check_mixed_mode_collapse(max_n: int):
    cases = []
    for n in range(1, max_n + 1):
        ok = True
        for k in range(1, n + 1):
            for i in range(1, k + 1):
                if mixed_mode_collapse(n, k, i) != 0:
                    ok = False
        cases.append(IdentityCase("mixed_mode_collapse", {"n": n}, ok))
    return cases


def check_descent_telescoping(n: int):
    """The binomial telescoping behind the level-descent surjection:
    (-1)^m C(m+n, n) + (-1)^{m+1} C(m+n-1, n) collapses to the level-(n-1)
    star coefficients (-1)^m C(m+n-1, n-1)."""
    if n < 1:
        raise ValueError("descent needs n >= 1")
    ok = True
    for m in range(n):
        left = Q(binomial(m + n, n) - binomial(m + n - 1, n))
        if left != Q(binomial(m + n - 1, n - 1)):
            ok = False
    return IdentityCase("descent_telescoping", {"n": n}, ok)


def check_key_lemma_identity(n: int, max_weight_shift: int = 4):
    """The pairing key identity, in reduced and weight-dependent form.

    Reduced: the double unit sum equals 1 (same polynomial as
    ``unit_sum_a``).  Unreduced, for a placeholder weight exponent t >= 1:

      sum_{k,m} (-1)^m C(m+n+k, m) (1+z)^{t+n} / z^{m+n+1+k}
      + sum_{k>=1,m} C(m+n+k, m) (-1)^{n+k} (1+z)^{t+m+k-1} / z^{1+m+n+k}
      + sum_{k=1}^n (1+z)^{t-1+k}
      = (1+z)^{t+n} / z,

    checked exactly for t = 0..max_weight_shift after clearing 1/z.
    """
    cases = [IdentityCase("key_lemma.reduced", {"n": n},
                          unit_sum_a(n) == LaurentPoly.one(VARS_Z))]
    for t in range(max_weight_shift + 1):
        lhs = LaurentPoly.zero(VARS_Z)
        for k in range(n + 1):
            for m in range(n - k + 1):
                sign = -1 if m % 2 else 1
                lhs = lhs + one_plus_z(t + n) * _zpoly(
                    {-(m + n + 1 + k): Q(sign * binomial(m + n + k, m))})
        for k in range(1, n + 1):
            for m in range(n - k + 1):
                sign = -1 if (n + k) % 2 else 1
                lhs = lhs + one_plus_z(t + m + k - 1) * _zpoly(
                    {-(1 + m + n + k): Q(sign * binomial(m + n + k, m))})
        for k in range(1, n + 1):
            lhs = lhs + one_plus_z(t - 1 + k)
        rhs = one_plus_z(t + n) * _zpoly({-1: Q(1)})
        cases.append(IdentityCase("key_lemma.weighted", {"n": n, "t": t},
                                  lhs == rhs))
    return cases


# ---------------------------------------------------------------------------
# suite runners
# ---------------------------------------------------------------------------

def run_identity_suite(max_n_onevar: int = 8, max_n_twovar: int = 6):
    """All identity cases at the default parameter ranges."""
    cases = []
    for n in range(max_n_onevar + 1):
        cases.extend(check_unit_sum_a(n))
        cases.extend(check_unit_sum_f(n))
        cases.append(check_derivative_collapse(n))
        if n >= 1:
            cases.append(check_descent_telescoping(n))
    for n in range(max_n_twovar + 1):
        cases.extend(check_two_var_sum(n))
    cases.extend(check_c_family(max_n_onevar))
    cases.extend(check_mixed_mode_collapse(max_n_onevar))
    for n in range(min(max_n_onevar, 4) + 1):
        cases.extend(check_key_lemma_identity(n))
    return cases

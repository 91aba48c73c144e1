"""Symbolic verification of the binomial identities behind the theory.

Everything here is exact Laurent-polynomial arithmetic over the
rationals: the unit sums collapse to the constant 1, the two-variable
obstruction sum vanishes identically, and the mode-reassociation tables
solve their defining triangular system.

Run with:  python3 demos/identity_showcase.py
"""

from zhualg.identities import c_coefficient, mixed_mode_collapse, \
    run_identity_suite, two_var_sum, unit_sum_a, unit_sum_f
from zhualg.modules import reassociate
from zhualg.rational import format_rational


def main():
    print("unit sums (must equal the constant Laurent polynomial 1):")
    for n in range(5):
        print("  n=%d  A_n(z) = %s   F_n(z) = %s"
              % (n, unit_sum_a(n).render(), unit_sum_f(n).render()))

    print("\ntwo-variable obstruction sum (must vanish identically):")
    for n in range(4):
        s = two_var_sum(n)
        print("  n=%d  sum = %s" % (n, s.render() if s else "0"))

    print("\ncoefficient family c_n(p, q) on its vanishing range:")
    for n in (1, 2, 3):
        vals = [format_rational(c_coefficient(n, p, q))
                for p in range(1, n + 1) for q in range(p)]
        print("  n=%d  values = %s" % (n, vals))

    print("\nmixed-mode collapse sums, 1 <= i <= k <= n:")
    for n in (2, 3):
        vals = [format_rational(mixed_mode_collapse(n, k, i))
                for k in range(1, n + 1) for i in range(1, k + 1)]
        print("  n=%d  values = %s" % (n, vals))

    print("\nreassociation table at (i, j, n) = (1, -1, 1):")
    for key, coeff in sorted(reassociate(1, -1, 1).items()):
        print("  entry %s -> %s" % (key, format_rational(coeff)))

    print("\nrunning the full identity suite (n <= 8 one-variable,")
    print("n <= 6 two-variable)...")
    cases = run_identity_suite(8, 6)
    failed = [c for c in cases if not c.passed]
    print("%d cases, %d failed" % (len(cases), len(failed)))
    assert not failed


if __name__ == "__main__":
    main()

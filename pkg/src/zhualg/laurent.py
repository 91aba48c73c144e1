"""Finitely supported multivariate Laurent polynomials over exact rationals.

This is the calculus in which every residue formula and combinatorial
identity of the library is evaluated.  Polynomials are immutable, stored
sparsely as a map from integer exponent vectors to nonzero rationals, with a
fixed variable order per instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import Q, ZERO, binomial, format_rational


class VariableMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ExpansionRegion:
    """How to expand a binomial power with negative exponent.

    ``finite`` forbids negative exponents altogether; ``major_first`` expands
    (x + y)^e as a series in nonnegative powers of y (valid in |x| > |y|),
    truncated after ``order_cap + 1`` terms.
    """

    tag: str = "major_first"
    order_cap: int = 0

    def __post_init__(self):
        if self.tag not in ("finite", "major_first"):
            raise ValueError("unknown region tag %r" % self.tag)
        if self.order_cap < 0:
            raise ValueError("order_cap must be nonnegative")


FINITE = ExpansionRegion("finite")


class LaurentPoly:
    """Immutable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__ if False else None
        self.variables = tuple(variables)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                c = Q(coeff)
                if c != 0:
                    key = tuple(int(e) for e in exps)
                    if len(key) != len(self.variables):
                        raise VariableMismatch("exponent vector length mismatch")
                    clean[key] = clean.get(key, ZERO) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def constant(cls, variables, coeff):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Q(coeff)})

    @classmethod
    def monomial(cls, variables, exponents, coeff=1):
        return cls(variables, {tuple(exponents): Q(coeff)})

    @classmethod
    def var(cls, variables, name, power=1, coeff=1):
        variables = tuple(variables)
        idx = variables.index(name)
        exps = [0] * len(variables)
        exps[idx] = power
        return cls(variables, {tuple(exps): Q(coeff)})

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if self.variables != other.variables:
            raise VariableMismatch(
                "variable lists differ: %r vs %r" % (self.variables, other.variables))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, ZERO) + c
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = Q(other)
            return LaurentPoly(self.variables,
                               {e: v * c for e, v in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, ZERO) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = self.inverse_monomial()
            return inv ** (-n)
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_monomial(self):
        """Exact inverse, defined only for single-term polynomials."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (exps, coeff), = self.terms.items()
        return LaurentPoly(self.variables,
                           {tuple(-e for e in exps): 1 / Q(coeff)})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self.terms == other.terms
        return self.terms == (LaurentPoly.constant(self.variables, other)).terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus -----------------------------------------------------
    def coefficient(self, exponents):
        key = tuple(int(e) for e in exponents)
        if len(key) != len(self.variables):
            raise VariableMismatch("exponent vector length mismatch")
        return self.terms.get(key, ZERO)

    def residue(self, name: str):
        """Coefficient of name^{-1}, as a polynomial in the other variables."""
        idx = self.variables.index(name)
        rest = self.variables[:idx] + self.variables[idx + 1:]
        terms = {}
        for exps, c in self.terms.items():
            if exps[idx] == -1:
                key = exps[:idx] + exps[idx + 1:]
                terms[key] = terms.get(key, ZERO) + c
        return LaurentPoly(rest, terms)

    def derivative(self, name: str):
        idx = self.variables.index(name)
        terms = {}
        for exps, c in self.terms.items():
            if exps[idx] == 0:
                continue
            key = exps[:idx] + (exps[idx] - 1,) + exps[idx + 1:]
            terms[key] = terms.get(key, ZERO) + c * exps[idx]
        return LaurentPoly(self.variables, terms)

    def coefficient_in(self, name: str, power: int):
        """Coefficient of name^power, as a polynomial in the other variables."""
        idx = self.variables.index(name)
        rest = self.variables[:idx] + self.variables[idx + 1:]
        terms = {}
        for exps, c in self.terms.items():
            if exps[idx] == power:
                terms[exps[:idx] + exps[idx + 1:]] = c
        return LaurentPoly(rest, terms)

    def exponents_of(self, name: str):
        idx = self.variables.index(name)
        return sorted({e[idx] for e in self.terms})

    # -- rendering ----------------------------------------------------
    def sorted_terms(self):
        """Deterministic (lexicographic by exponent vector) term iteration."""
        return sorted(self.terms.items())

    def __repr__(self):
        return "LaurentPoly(%r)" % (self.render(),)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append("%s^%d" % (name, e))
            body = " ".join(factors)
            cs = format_rational(coeff)
            parts.append(cs if not body else "%s * %s" % (cs, body))
        return " + ".join(parts)


def binomial_power(variables, x_name, y_name, exponent, region=FINITE,
                   x_coeff=1, y_coeff=1):
    """Expansion of (cx*x + cy*y)^exponent as a LaurentPoly.

    Nonnegative exponents give the exact finite expansion regardless of
    region.  Negative exponents require a ``major_first`` region (valid where
    |x| dominates |y|) and produce sum_{i=0}^{order_cap} C(e, i)
    (cx*x)^{e-i} (cy*y)^i.
    """
    variables = tuple(variables)
    if exponent < 0 and region.tag == "finite":
        raise ValueError("negative exponent needs a series expansion region")
    x = LaurentPoly.var(variables, x_name, coeff=x_coeff)
    y = LaurentPoly.var(variables, y_name, coeff=y_coeff)
    if exponent >= 0:
        return (x + y) ** exponent
    top = region.order_cap
    result = LaurentPoly.zero(variables)
    for i in range(top + 1):
        result = result + binomial(exponent, i) * (x ** (exponent - i)) * (y ** i)
    return result

"""Exact computer algebra for graded associative quotients of vertex
operator algebras.

Subpackages by layer:

* :mod:`zhualg.rational`, :mod:`zhualg.laurent`, :mod:`zhualg.linalg` —
  exact arithmetic, Laurent polynomials, certificate-producing row
  reduction;
* :mod:`zhualg.voa` — the free-boson and Virasoro backends with the
  recursive mode calculus;
* :mod:`zhualg.zhu` — the level-n products, the ideal spans, quotient
  tables, and structure certificates;
* :mod:`zhualg.vhat`, :mod:`zhualg.modules` — the formal mode Lie algebra,
  lowest-weight subspaces, and shifted-mode reassociation;
* :mod:`zhualg.verma` — truncated induced modules, radicals, and input
  recovery;
* :mod:`zhualg.identities` — the symbolic combinatorial identity suite;
* :mod:`zhualg.reports`, :mod:`zhualg.cli` — JSON reporting and the
  command-line front end.
"""

from .rational import Q, binomial, format_rational, parse_rational
from .voa import HeisenbergSpace, ModeSpace, Vec, VirasoroSpace, \
    conformal_vector, heisenberg, make_backend, vacuum, virasoro
from .zhu import circle_n, l_shift, membership, on_generators, \
    quotient_build, star_n, weighted_residue
from .modules import o_j, o_zero, omega_n, reassociate
from .verma import AnModuleInput, InducedModule, an_module_from_omega, \
    induce, ln_quotient, omega_recovery_check, pairing_and_radical, \
    quotient_mbar, w_relations

__version__ = "0.1.0"

__all__ = [
    "Q", "binomial", "format_rational", "parse_rational",
    "HeisenbergSpace", "ModeSpace", "Vec", "VirasoroSpace",
    "conformal_vector", "heisenberg", "make_backend", "vacuum", "virasoro",
    "circle_n", "l_shift", "membership", "on_generators", "quotient_build",
    "star_n", "weighted_residue",
    "o_j", "o_zero", "omega_n", "reassociate",
    "AnModuleInput", "InducedModule", "an_module_from_omega", "induce",
    "ln_quotient", "omega_recovery_check", "pairing_and_radical",
    "quotient_mbar", "w_relations",
    "__version__",
]

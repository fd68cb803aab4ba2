"""Exact ramification invariants for truncated discrete valuation rings.

The package computes, in exact arithmetic over F_q[t]/t^N or Z/p^N:

* Eisenstein extensions, their automorphisms, and the Swan / Artin
  ramification characters (`dvr_arith`, `eisenstein_galois`);
* conductors and total dimensions of finite-monodromy representations
  (`conductors`);
* Milnor numbers as stabilized Jacobian-quotient lengths (`milnor`);
* finite homological models: strict Koszul dg-algebras, matrix
  factorizations, descent structures (`dg_models`);
* equivariant traces valued in class-sum coefficients (`group_traces`);
* built-in verification suites and a CLI (`verify`, `cli`).
"""

from .dvr_arith import DVRPoly, DVRSpec, Valuation, is_eisenstein, quotient_length
from .eisenstein_galois import (artin_character, automorphism_group,
                                character_table, extend, swan_character)
from .conductors import (GroupModule, artin_conductor, dimtot, swan_conductor,
                         verify_eq_1_2)
from .errors import (DegreeOne, NotEisenstein, NotEquivariant, NotFiniteLength,
                     NotGalois, NotIsolated, NotStabilized, ParseError,
                     PrecisionLoss, RamifyError, TriangularIdentityFailed)
from .milnor import Hypersurface, milnor_number, verify_deligne_milnor_n0
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "DVRPoly", "DVRSpec", "Valuation", "is_eisenstein", "quotient_length",
    "artin_character", "automorphism_group", "character_table", "extend",
    "swan_character",
    "GroupModule", "artin_conductor", "dimtot", "swan_conductor",
    "verify_eq_1_2",
    "DegreeOne", "NotEisenstein", "NotEquivariant", "NotFiniteLength",
    "NotGalois", "NotIsolated", "NotStabilized", "ParseError",
    "PrecisionLoss", "RamifyError", "TriangularIdentityFailed",
    "Hypersurface", "milnor_number", "verify_deligne_milnor_n0",
    "SUITES", "run_suite",
    "__version__",
]

"""Exact verification of duoidal structures and R-matrices over finite-dimensional bialgebras."""

from .bialg import (BialgebraData, ClassicalRElement, check_classical_qt, is_cocommutative,
                    star_inverse_check, validate_bialgebra)
from .duoidal_core import (DuoidalStructure, InterchangeOnEM, check_bimonoid,
                           check_double_opmonoidal, check_duoidal_axioms,
                           check_em_duoidal_axioms, check_em_duoidal_lift, derived_iota,
                           lifted_interchange)
from .errors import (DimensionMismatch, DuoidalError, InvalidPermutation, MalformedInstance,
                     PrerequisiteFailed)
from .instance import Instance, load
from .lindist import (LinearDistributors, check_B0_conjugation,
                      check_double_opmonoidal_implies_lindist, check_lindist_lift_nonplanar,
                      check_lindist_lift_planar, distributors_from_normal)
from .monad_em import (ModuleObject, SeparatelyOpmonoidalData, check_bimonad_laws,
                       check_module, check_module_morphism, free_module, probe_modules,
                       trivial_module)
from .report import CheckReport, Verdict
from .rmatrix import (DuoidalRMatrix, braiding_from_classical, check_braiding,
                      check_rmatrix_axioms, check_xi, embed_classical, r_from_xi,
                      roundtrip_check, roundtrip_check_xi, xi_from_r)

__all__ = [
    "BialgebraData", "CheckReport", "ClassicalRElement", "DimensionMismatch", "DuoidalError",
    "DuoidalRMatrix", "DuoidalStructure", "Instance", "InterchangeOnEM", "InvalidPermutation",
    "LinearDistributors", "MalformedInstance", "ModuleObject", "PrerequisiteFailed",
    "SeparatelyOpmonoidalData", "Verdict", "braiding_from_classical", "check_B0_conjugation",
    "check_bimonad_laws", "check_bimonoid", "check_braiding", "check_classical_qt",
    "check_double_opmonoidal", "check_double_opmonoidal_implies_lindist",
    "check_duoidal_axioms", "check_em_duoidal_axioms", "check_em_duoidal_lift",
    "check_lindist_lift_nonplanar", "check_lindist_lift_planar", "check_module",
    "check_module_morphism", "check_rmatrix_axioms", "check_xi", "derived_iota",
    "distributors_from_normal", "embed_classical", "free_module", "is_cocommutative",
    "lifted_interchange", "load", "probe_modules", "r_from_xi", "roundtrip_check",
    "roundtrip_check_xi", "star_inverse_check", "trivial_module", "validate_bialgebra",
    "xi_from_r",
]

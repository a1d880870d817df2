"""Exact structure-constant computations for Z2-graded (Hom-)algebras.

Algebras are finite tables of rational structure constants on a graded
basis.  The library checks axiom systems exhaustively on basis tuples
(right alternativity, Bol and Hom-Bol superalgebras, (Hom-)Lie supertriple
systems) and runs the constructions relating them.
"""

from .constructions import (
    beta_n_twist,
    bol_from_right_alternative,
    check_hom_morphism,
    jordan_triple,
    lie_sts_from_jordan,
    nth_derived,
    yau_twist_binary,
    yau_twist_bts,
)
from .core import (
    BinaryStructure,
    GradedLinearMap,
    Grading,
    SuperAlgebra,
    SuperVector,
    TernaryStructure,
    as_scalar,
    check_grading_compat,
    check_multiplicative,
    compose,
    degree_of,
    eval_binary,
    eval_ternary,
    map_power,
)
from .errors import AlgebraError, HypothesisError
from .fixtures import FIXTURES, fixture, mutate
from .identities import (
    SUITES,
    check_bol_super,
    check_hom_alternative,
    check_hom_bol_super,
    check_hom_lie_supertriple,
    check_left_hom_alternative,
    check_lie_supertriple,
    check_plus_supercommutative,
    check_right_hom_alternative,
    check_suite,
)
from .io import dumps_algebra, load_algebra, load_morphism, loads_algebra, save_algebra
from .products import hom_associator, hom_jordan_associator, rescale, super_jordan, supercommutator
from .report import CheckReport

__all__ = [
    "AlgebraError",
    "BinaryStructure",
    "CheckReport",
    "FIXTURES",
    "GradedLinearMap",
    "Grading",
    "HypothesisError",
    "SUITES",
    "SuperAlgebra",
    "SuperVector",
    "TernaryStructure",
    "as_scalar",
    "beta_n_twist",
    "bol_from_right_alternative",
    "check_bol_super",
    "check_grading_compat",
    "check_hom_alternative",
    "check_hom_bol_super",
    "check_hom_lie_supertriple",
    "check_hom_morphism",
    "check_left_hom_alternative",
    "check_lie_supertriple",
    "check_multiplicative",
    "check_plus_supercommutative",
    "check_right_hom_alternative",
    "check_suite",
    "compose",
    "degree_of",
    "dumps_algebra",
    "eval_binary",
    "eval_ternary",
    "fixture",
    "hom_associator",
    "hom_jordan_associator",
    "jordan_triple",
    "lie_sts_from_jordan",
    "load_algebra",
    "load_morphism",
    "loads_algebra",
    "map_power",
    "mutate",
    "nth_derived",
    "rescale",
    "save_algebra",
    "super_jordan",
    "supercommutator",
    "yau_twist_binary",
    "yau_twist_bts",
]

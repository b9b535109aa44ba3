"""albertkit: exact-arithmetic workbench for cubic Jordan algebras.

Builds first Tits construction models over exact fields, derives their
quadratic Jordan structure, and verifies the defining identities plus
the isotopy, Springer-form and quadratic-form statements that go with
them -- all over the rationals and odd prime fields, with no floats.
"""

__version__ = "0.1.0"

from .axioms import run_axiom_suite
from .deg3 import CubicQuotient, Matrix3, SplitEtale, discriminant_algebra
from .fields import PrimeField, RationalField, field_from_descriptor
from .isotopy import StructureWord, eval_word, is_autotopy, isotope
from .jordan import CubicJordanModel
from .pipelines import run_command
from .tits import TitsModel, lemma_trans_move, tits_first

__all__ = [
    "CubicJordanModel",
    "CubicQuotient",
    "Matrix3",
    "PrimeField",
    "RationalField",
    "SplitEtale",
    "StructureWord",
    "TitsModel",
    "discriminant_algebra",
    "eval_word",
    "field_from_descriptor",
    "is_autotopy",
    "isotope",
    "lemma_trans_move",
    "run_axiom_suite",
    "run_command",
    "tits_first",
    "__version__",
]

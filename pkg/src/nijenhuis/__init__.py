"""Free Nijenhuis algebras on a set: the alternating bracketed-word basis,
diamond product, coproduct, left counit and right antipode, with exhaustive
law checking."""

from .algebra import (
    NijenhuisTarget,
    bracket,
    diamond,
    eval_expression,
    evaluate,
    extend_hom,
    free_target,
    scalar_target,
)
from .coalgebra import convolve, coproduct, counit, identity, unit_counit
from .elements import Element, TensorElement, apply_right, combine, tensor_multiply
from .enumeration import dimension_series, enumerate_basis
from .hopf import NonGradedCoproduct, antipode, check_connected, homogeneous_components
from .kernel import available_backends, set_backend
from .report import LawReport
from .textio import ParseError, from_json, parse, print_canonical, print_latex, to_json
from .verify import LAWS, run_suite
from .words import AdjacentBrackets, EmptyWord, compare, diamond_factorize, measures, validate_basis

__version__ = "0.1.0"

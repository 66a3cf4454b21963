"""Exact symbolic computation in the twisted Heisenberg-Virasoro algebra."""

from .central import C, C_I, C_LI, CentralPoly
from .enveloping import (
    DEFAULT_ORDER,
    EnvelopingElement,
    GeneratorOrder,
    commutator,
    filtration_degree,
    multiply,
    normal_order,
    reduce_mod_left_ideal,
    renormalize,
    specialize_centrals,
)
from .errors import (
    IndexRangeError,
    ParseError,
    ResourceLimitError,
    StepBudgetExceeded,
    TruncationError,
    TwistedHVError,
    UsageError,
)
from .frontend.evaluate import evaluate
from .frontend.parser import parse
from .frontend.serialize import format_element
from .modules import (
    IntermediateSeriesModule,
    IntermediateSeriesParams,
    ModuleVector,
    VermaModule,
    VermaParams,
    act,
    check_module_axioms,
    find_annihilated_vectors,
    intseries_new,
    is_harish_chandra_window,
    support,
    verma_new,
    weight_space_dim,
)
from .structure import Generator, I, L, LieElement, bracket, bracket_basis, grade, verify_jacobi
from .verify import verify_all

__all__ = [
    "act",
    "bracket",
    "bracket_basis",
    "C",
    "C_I",
    "C_LI",
    "CentralPoly",
    "check_module_axioms",
    "commutator",
    "DEFAULT_ORDER",
    "EnvelopingElement",
    "evaluate",
    "filtration_degree",
    "find_annihilated_vectors",
    "format_element",
    "Generator",
    "GeneratorOrder",
    "grade",
    "I",
    "IndexRangeError",
    "IntermediateSeriesModule",
    "IntermediateSeriesParams",
    "intseries_new",
    "is_harish_chandra_window",
    "L",
    "LieElement",
    "ModuleVector",
    "multiply",
    "normal_order",
    "parse",
    "ParseError",
    "reduce_mod_left_ideal",
    "renormalize",
    "ResourceLimitError",
    "specialize_centrals",
    "StepBudgetExceeded",
    "support",
    "TruncationError",
    "TwistedHVError",
    "UsageError",
    "verify_all",
    "verify_jacobi",
    "verma_new",
    "VermaModule",
    "VermaParams",
    "weight_space_dim",
]

__version__ = "0.1.0"

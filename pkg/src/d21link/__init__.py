"""Exact link invariants from a six-dimensional quantum supermodule.

The package evaluates the braiding induced on the six-dimensional
supermodule of the quantized exceptional Lie superalgebra of type D(2,1)
at parameter one, feeds it through an unoriented tangle calculus to produce
a framed-link invariant with values in Z[q, q^{-1}], and cross-validates
every value against an independently computed specialization of Kauffman's
Dubrovnik polynomial (a = -q^{-1}, z = q - q^{-1}).
"""

__version__ = "0.1.0"

from .dubrovnik import braid_closure_graph, dubrovnik_poly, specialize
from .ring import QuarterLaurent, RatFunc, format_q_laurent, to_integer_laurent
from .rmatrix import braiding
from .tangle import BraidWord, evaluate_sliced, invariant, parse_braid

__all__ = [
    "BraidWord",
    "QuarterLaurent",
    "RatFunc",
    "braid_closure_graph",
    "braiding",
    "dubrovnik_poly",
    "evaluate_sliced",
    "format_q_laurent",
    "invariant",
    "parse_braid",
    "specialize",
    "to_integer_laurent",
]

"""Exact invariant/horizontal differential forms of diagonal group actions.

Computes, over the rationals: the exterior algebra on affine n-space,
Euler contraction operators of torus factors and their homology,
invariant-ring generators, the invariant pullback of quotient
differentials with degreewise cokernels, smoothness criteria by
independent routes, and the canonical module by two constructions.
"""

__version__ = "0.1.0"

from invforms.action import ActionSpec, Weight, make_action, validate_action
from invforms.forms import PolyForm, exterior_derivative, wedge
from invforms.poly import Polynomial

__all__ = [
    "ActionSpec",
    "PolyForm",
    "Polynomial",
    "Weight",
    "__version__",
    "exterior_derivative",
    "make_action",
    "validate_action",
    "wedge",
]

"""Exact linear algebra for Symm^r over finite rings with the GL_2 action."""
from .fields import FieldContext, GF, IntegerModRing, is_prime, primes_up_to, primitive_root, valuation
from .kmodules import (
    GL2Rep,
    IrredLabel,
    KSubmodule,
    NotIrreducibleError,
    Quotient,
    full_module,
    identify_irreducible,
    quotient,
    spin,
    standard_generators,
    submodule_W,
    submodule_Y,
    symm_rep,
)
from .symm import SymmElement, act_gl2, substitute, theta_bar, theta_bar_multiply

__all__ = [
    "FieldContext", "GF", "IntegerModRing", "is_prime", "primes_up_to", "primitive_root", "valuation",
    "GL2Rep", "IrredLabel", "KSubmodule", "NotIrreducibleError", "Quotient", "full_module",
    "identify_irreducible", "quotient", "spin", "standard_generators", "submodule_W", "submodule_Y",
    "symm_rep", "SymmElement", "act_gl2", "substitute", "theta_bar", "theta_bar_multiply",
]

"""Exact decomposition of split Lie algebras and their weight modules.

Everything is computed over the rationals with :class:`fractions.Fraction`.
"""
from .connections import connect_roots, connect_weights, find_connection, is_connection
from .decomposition import (
    decompose_algebra,
    decompose_module,
    minimal_weight_submodules,
    pair,
    simple_components,
    simplicity_report,
)
from .errors import SplitLieError
from .involution import Involution, build as involution_split
from .lie_algebra import LieAlgebra, direct_sum
from .linalg import Subspace
from .split import split
from .weight_module import ModuleAction, adjoint_module, weight_decompose

__all__ = [
    "LieAlgebra",
    "ModuleAction",
    "Involution",
    "Subspace",
    "SplitLieError",
    "adjoint_module",
    "connect_roots",
    "connect_weights",
    "decompose_algebra",
    "decompose_module",
    "direct_sum",
    "find_connection",
    "involution_split",
    "is_connection",
    "minimal_weight_submodules",
    "pair",
    "simple_components",
    "simplicity_report",
    "split",
    "weight_decompose",
]

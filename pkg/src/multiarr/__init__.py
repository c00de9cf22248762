"""Exact bases for derivation modules of rank-2 multiarrangements."""

from .arrangement import (
    A2,
    B2,
    DX,
    DY,
    EULER,
    Derivation,
    ExponentPair,
    Multiarrangement,
    apply,
    is_balanced,
    is_member,
    non_balanced_basis,
    saito_check,
)
from .kernels import BACKEND
from .poly import HomoPoly, LinearForm

__all__ = [
    "A2",
    "B2",
    "BACKEND",
    "DX",
    "DY",
    "EULER",
    "Derivation",
    "ExponentPair",
    "HomoPoly",
    "LinearForm",
    "Multiarrangement",
    "apply",
    "is_balanced",
    "is_member",
    "non_balanced_basis",
    "saito_check",
]

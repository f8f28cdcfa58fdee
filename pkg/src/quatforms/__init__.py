"""Exact tools for supersingular endomorphism rings via binary and ternary quadratic forms."""

from .binforms import BinaryForm
from .endo import (
    EndoResult,
    eichler_to_maximal,
    kernel_ideal_crosscheck,
    maxorder_oriented,
    maxorder_over_fp,
    nonoriented_isogeny,
    oriented_isogeny_action,
    same_eigenvector_class,
)
from .errors import ContractError, EnumerationLimit, PreconditionError
from .quat import OrderLattice, QuaternionElement, clifford_order, eichler_order, order_disc, ternary_from_order
from .terforms import TernaryForm, canonical, canonicalize, equivalent

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "TernaryForm",
    "QuaternionElement",
    "OrderLattice",
    "EndoResult",
    "PreconditionError",
    "ContractError",
    "EnumerationLimit",
    "canonical",
    "canonicalize",
    "equivalent",
    "clifford_order",
    "eichler_order",
    "order_disc",
    "ternary_from_order",
    "maxorder_over_fp",
    "maxorder_oriented",
    "eichler_to_maximal",
    "oriented_isogeny_action",
    "nonoriented_isogeny",
    "same_eigenvector_class",
    "kernel_ideal_crosscheck",
]

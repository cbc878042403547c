"""Finite-ring workbench: stable range one, unit lifting, unique generation."""

from .ring import FiniteRing, RingError, ValidationReport, isomorphic, opposite, validate
from .specs import SpecError, construct, to_table_spec
from .subsets import ElementSubset, Side, annihilator, principal, units
from .properties import (
    PropertyResult,
    directly_finite,
    principal_are_annihilators,
    quasi_morphic,
    replay,
    stable_range_one,
    uniquely_generated,
    unit_lifting,
    vasershtein_transfer,
)
from .enumeration import canonical_form, enumerate_unital_rings

__all__ = [
    "FiniteRing", "RingError", "ValidationReport", "isomorphic", "opposite", "validate",
    "SpecError", "construct", "to_table_spec",
    "ElementSubset", "Side", "annihilator", "principal", "units",
    "PropertyResult", "directly_finite", "principal_are_annihilators", "quasi_morphic",
    "replay", "stable_range_one", "uniquely_generated", "unit_lifting", "vasershtein_transfer",
    "canonical_form", "enumerate_unital_rings",
]

"""Explicit constructions of the rank-3 graph families."""

from .generate import DEFAULT_MAX_NU, Generated, generate, is_constructible, sweep_specs
from .spec import ALIASES, CONSTRUCTIBLE_ROWS, Family, FamilySpec, WitnessHint, parse_spec, resolve_family

__all__ = [
    "ALIASES",
    "CONSTRUCTIBLE_ROWS",
    "DEFAULT_MAX_NU",
    "Family",
    "FamilySpec",
    "Generated",
    "WitnessHint",
    "generate",
    "is_constructible",
    "parse_spec",
    "resolve_family",
    "sweep_specs",
]

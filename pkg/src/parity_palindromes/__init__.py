"""Parity palindrome compositions: enumeration, the production rules that
triple their count every two steps, and exhaustive checks of both."""

from .core import (
    Composition,
    InvalidComposition,
    NotAPpc,
    ParityWord,
    PpcError,
    PpcType,
    classify,
    format_composition,
    is_ppc,
    parity_word,
    parse_composition,
)
from .oracle import (
    DEFAULT_CAP,
    FormulaOverflow,
    NOutOfRange,
    count_ppcs_brute,
    count_ppcs_formula,
    enumerate_compositions,
    enumerate_ppcs,
)
from .production import (
    ForestLevel,
    ParityMismatch,
    Production,
    ProductionRule,
    RuleNotApplicable,
    TotalTooSmall,
    apply_rule,
    build_forest,
    parent_of,
    produce,
    type_census,
    verify_bijection,
)

__version__ = "0.1.0"

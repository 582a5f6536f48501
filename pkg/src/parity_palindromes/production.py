"""Production rules taking a ppc of ``m`` to ppcs of ``m + 2``, their inverse,
the seeded production forest, and per-total checks of the counting argument.

The four rules::

    A   1 + c + 1             (new border parts)
    B   first+1 ... last+1    (single part: +2)
    C1  last+2                when the first part is 1
    C2  first+2               when the last part is 1
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    Composition,
    NotAPpc,
    PpcError,
    PpcType,
    as_composition,
    classify,
    format_composition,
    is_ppc,
    sort_key,
)
from .oracle import (
    DEFAULT_CAP,
    NOutOfRange,
    count_ppcs_brute,
    count_ppcs_formula,
    enumerate_ppcs,
)


class RuleNotApplicable(PpcError):
    pass


class TotalTooSmall(PpcError):
    pass


class ParityMismatch(PpcError):
    pass


class ProductionRule(str, enum.Enum):
    A = "A"
    B = "B"
    C1 = "C1"
    C2 = "C2"

    def __str__(self) -> str:
        return self.value


RULE_ORDER = (ProductionRule.A, ProductionRule.B, ProductionRule.C1, ProductionRule.C2)

SEEDS = {
    "even": (Composition((1, 1)), Composition((2,))),
    "odd": (Composition((1, 1, 1)), Composition((3,))),
}

# child-type multiset produced by each parent type
FANOUT = {
    PpcType.A: Counter({PpcType.A: 1, PpcType.B: 1, PpcType.C: 2}),
    PpcType.B: Counter({PpcType.A: 1, PpcType.B: 1}),
    PpcType.C: Counter({PpcType.A: 1, PpcType.B: 1, PpcType.C: 1}),
}


@dataclass(frozen=True)
class Production:
    parent: Composition
    rule: ProductionRule
    child: Composition

    def __str__(self) -> str:
        return f"{self.parent} -{self.rule}-> {self.child}"


def _require_producer(p: Composition) -> None:
    if not is_ppc(p):
        raise NotAPpc(f"{p} is not a ppc")
    if p.total < 2:
        raise TotalTooSmall(f"{p} has total {p.total}; producers need total >= 2")


def rule_applies(p: Composition, rule: ProductionRule) -> bool:
    if rule is ProductionRule.C1:
        return p.first == 1
    if rule is ProductionRule.C2:
        return p.last == 1
    return True


def apply_rule(p: Composition | Iterable[int], rule: ProductionRule | str) -> Composition:
    p = as_composition(p)
    rule = ProductionRule(rule)
    _require_producer(p)
    if not rule_applies(p, rule):
        raise RuleNotApplicable(f"rule {rule} does not apply to {p}")
    parts = p.parts
    if rule is ProductionRule.A:
        return Composition((1, *parts, 1))
    if rule is ProductionRule.B:
        if len(parts) == 1:
            return Composition((parts[0] + 2,))
        return Composition((parts[0] + 1, *parts[1:-1], parts[-1] + 1))
    if rule is ProductionRule.C1:
        return Composition((*parts[:-1], parts[-1] + 2))
    return Composition((parts[0] + 2, *parts[1:]))


def produce(p: Composition | Iterable[int]) -> list[Production]:
    """All productions of ``p``, in rule order A, B, C1, C2."""
    p = as_composition(p)
    _require_producer(p)
    return [Production(p, r, apply_rule(p, r)) for r in RULE_ORDER if rule_applies(p, r)]


def parent_of(c: Composition | Iterable[int]) -> Production:
    """The unique production that yields ``c``, recovered from its type."""
    c = as_composition(c)
    if not is_ppc(c):
        raise NotAPpc(f"{c} is not a ppc")
    if c.total < 4:
        raise TotalTooSmall(f"{c} has total {c.total}; seeds (total < 4) have no parent")
    parts = c.parts
    kind = classify(c)
    if kind is PpcType.A:
        parent, rule = parts[1:-1], ProductionRule.A
    elif kind is PpcType.B:
        if len(parts) == 1:
            parent = (parts[0] - 2,)
        else:
            parent = (parts[0] - 1, *parts[1:-1], parts[-1] - 1)
        rule = ProductionRule.B
    elif parts[0] == 1:
        parent, rule = (*parts[:-1], parts[-1] - 2), ProductionRule.C1
    else:
        parent, rule = (parts[0] - 2, *parts[1:]), ProductionRule.C2
    return Production(Composition(parent), rule, c)


# -- forest -------------------------------------------------------------------


@dataclass
class ForestLevel:
    total: int
    members: tuple[Composition, ...]
    provenance: dict[Composition, tuple[Composition, ProductionRule]] = field(
        default_factory=dict
    )

    @property
    def is_seed(self) -> bool:
        return not self.provenance

    def __len__(self) -> int:
        return len(self.members)


def expand_level(level: ForestLevel) -> ForestLevel:
    provenance = {}
    for parent in level.members:
        for prod in produce(parent):
            if prod.child in provenance:
                raise AssertionError(f"{prod.child} produced twice")
            provenance[prod.child] = (prod.parent, prod.rule)
    members = tuple(sorted(provenance, key=sort_key))
    return ForestLevel(level.total + 2, members, {c: provenance[c] for c in members})


def build_forest(parity: str, max_total: int) -> list[ForestLevel]:
    """Levels of the production forest grown from the seeds of ``parity``.

    ``parity`` is ``"even"`` (seeds ``11`` and ``2``) or ``"odd"`` (seeds
    ``111`` and ``3``); levels ascend by 2 up to ``max_total``.
    """
    if parity not in SEEDS:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    start = 2 if parity == "even" else 3
    if max_total < start:
        raise TotalTooSmall(f"max_total must be at least {start} for {parity}")
    if max_total % 2 != start % 2:
        raise ParityMismatch(f"max_total={max_total} is not {parity}")
    levels = [ForestLevel(start, tuple(sorted(SEEDS[parity], key=sort_key)))]
    while levels[-1].total < max_total:
        levels.append(expand_level(levels[-1]))
    return levels


# -- verification -------------------------------------------------------------


@dataclass
class Check:
    """Outcome of one named assertion over one total."""

    name: str
    total: int
    passed: bool
    counterexample: str | None = None
    detail: str = ""


@dataclass
class BijectionReport:
    total: int
    checks: list[Check]
    children: int = 0

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)


def _check_range(total: int, cap: int, headroom: int = 0) -> None:
    if isinstance(total, bool) or not isinstance(total, int):
        raise NOutOfRange(f"total must be an integer, got {total!r}")
    if total < 2 or total > cap - headroom:
        raise NOutOfRange(f"total={total} outside [2, {cap - headroom}]")


def verify_bijection(total: int, cap: int = DEFAULT_CAP) -> BijectionReport:
    """Check that the ppcs of ``total`` produce every ppc of ``total + 2``
    exactly once, and that ``parent_of`` recovers each producer."""
    _check_range(total, cap, headroom=2)
    productions = [prod for p in enumerate_ppcs(total, cap) for prod in produce(p)]
    keys = [sort_key(prod.child) for prod in productions]

    seen = Counter(keys)
    repeated = sorted(k for k, v in seen.items() if v > 1)
    no_dups = Check("no-duplicates", total, not repeated, repeated[0] if repeated else None,
                    f"{len(keys)} children")

    expected = sorted(sort_key(c) for c in enumerate_ppcs(total + 2, cap))
    got = sorted(seen)
    if got == expected:
        cover = Check("covers-oracle", total, True, detail=f"{len(expected)} ppcs of {total + 2}")
    else:
        missing = sorted(set(expected) - set(seen))
        extra = sorted(set(seen) - set(expected))
        witness = missing[0] if missing else extra[0]
        cover = Check("covers-oracle", total, False, witness,
                      f"{len(missing)} missing, {len(extra)} extra")

    bad = next((prod for prod in productions if parent_of(prod.child) != prod), None)
    inverse = Check("parent-of", total, bad is None, None if bad is None else str(bad.child))
    return BijectionReport(total, [no_dups, cover, inverse], children=len(keys))


def type_census(total: int, cap: int = DEFAULT_CAP) -> dict[PpcType, int]:
    _check_range(total, cap)
    counts = Counter(classify(c) for c in enumerate_ppcs(total, cap))
    return {t: counts.get(t, 0) for t in PpcType}


def check_counts(total: int, cap: int = DEFAULT_CAP) -> Check:
    brute = count_ppcs_brute(total, cap)
    formula = count_ppcs_formula(total)
    return Check("counts", total, brute == formula, None, f"brute={brute} formula={formula}")


def check_thirds(total: int, cap: int = DEFAULT_CAP) -> Check:
    census = type_census(total, cap)
    n = sum(census.values())
    ok = n % 3 == 0 and all(v == n // 3 for v in census.values())
    counterexample = None
    if not ok:
        # any ppc of an over-represented type
        worst = max(census, key=census.__getitem__)
        counterexample = next(str(c) for c in enumerate_ppcs(total, cap) if classify(c) is worst)
    detail = " ".join(f"{t}={v}" for t, v in census.items())
    return Check("thirds", total, ok, counterexample, detail)


def check_fanout(total: int, cap: int = DEFAULT_CAP) -> Check:
    for p in enumerate_ppcs(total, cap):
        got = Counter(classify(prod.child) for prod in produce(p))
        if got != FANOUT[classify(p)]:
            return Check("fanout", total, False, str(p), f"children types {dict(got)}")
    return Check("fanout", total, True)


def check_round_trip(total: int, cap: int = DEFAULT_CAP) -> Check:
    """Every ppc of ``total`` inverts through ``parent_of``, and every sibling
    listed by ``produce(parent)`` maps back to the same parent."""
    for c in enumerate_ppcs(total, cap):
        if total >= 4:
            prod = parent_of(c)
            if apply_rule(prod.parent, prod.rule) != c:
                return Check("round-trip", total, False, str(c))
            siblings = produce(prod.parent)
        else:
            siblings = []
        for sib in siblings + produce(c):
            if parent_of(sib.child) != sib:
                return Check("round-trip", total, False, str(sib.child))
    return Check("round-trip", total, True)


def format_production(prod: Production, compact: bool = False) -> str:
    return f"{prod.rule} {format_composition(prod.child, compact)}"

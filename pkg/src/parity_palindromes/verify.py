"""The full verification suite behind ``ppc verify``.

Work is split into (family, total) tasks. With ``jobs > 1`` they run in a
process pool; results are merged in task order, so the report is the same
for any number of jobs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .core import sort_key
from .oracle import DEFAULT_CAP, count_ppcs_brute, count_ppcs_formula, enumerate_ppcs
from .production import (
    Check,
    build_forest,
    check_counts,
    check_fanout,
    check_round_trip,
    check_thirds,
    verify_bijection,
)

MIN_TOTAL = 4
FAMILIES = ("counts", "bijection", "thirds", "fanout", "round-trip", "forest")


@dataclass
class SuiteEntry:
    name: str
    parity: str
    first: int
    last: int
    passed: bool
    counterexample: str | None = None
    failed_total: int | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name:<11} {self.parity:<4} totals {self.first}..{self.last}"
        if not self.passed:
            text += f"  total={self.failed_total} counterexample={self.counterexample}"
            if self.detail:
                text += f" ({self.detail})"
        return text


@dataclass
class VerifyReport:
    max_total: int
    checks: list[SuiteEntry]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.checks)

    def text(self) -> str:
        lines = [e.line() for e in self.checks]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "max_total": self.max_total,
            "overall": self.passed,
            "checks": [asdict(e) for e in self.checks],
        }


def _totals(family: str, max_total: int) -> range:
    if family == "counts":
        return range(2, max_total + 1)
    if family in ("bijection", "fanout"):
        return range(2, max_total - 1)
    return range(4, max_total + 1)


def check_forest(parity: str, max_total: int, cap: int = DEFAULT_CAP) -> Check:
    """Forest levels equal the oracle's ppc sets and triple in size."""
    top = max_total if (max_total % 2 == 0) == (parity == "even") else max_total - 1
    levels = build_forest(parity, top)
    for prev, level in zip([None, *levels], levels):
        expected = sorted(sort_key(c) for c in enumerate_ppcs(level.total, cap))
        got = [sort_key(c) for c in level.members]
        if got != expected:
            witness = sorted(set(got) ^ set(expected))[0]
            return Check("forest", level.total, False, witness, "level differs from oracle")
        if prev is not None and len(level) != 3 * len(prev):
            return Check("forest", level.total, False, got[0],
                         f"{len(prev)} -> {len(level)} is not tripling")
    return Check("forest", top, True)


def _run_task(task: tuple[str, int, int]) -> Check:
    family, total, cap = task
    if family == "counts":
        return check_counts(total, cap)
    if family == "bijection":
        report = verify_bijection(total, cap)
        bad = next((c for c in report.checks if not c.passed), None)
        return bad or Check("bijection", total, True)
    if family == "thirds":
        return check_thirds(total, cap)
    if family == "fanout":
        return check_fanout(total, cap)
    if family == "round-trip":
        return check_round_trip(total, cap)
    raise ValueError(family)


def run_verification(max_total: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> VerifyReport:
    if max_total < MIN_TOTAL or max_total > cap:
        raise ValueError(f"max_total must lie in [{MIN_TOTAL}, {cap}]")

    tasks = [(f, t, cap) for f in FAMILIES[:-1] for t in _totals(f, max_total)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=1))
            forests = list(pool.map(check_forest, ("even", "odd"), (max_total,) * 2, (cap,) * 2))
    else:
        results = [_run_task(t) for t in tasks]
        forests = [check_forest(p, max_total, cap) for p in ("even", "odd")]

    by_key = {(task[0], task[1]): res for task, res in zip(tasks, results)}
    entries = []

    one_ok = count_ppcs_brute(1, cap) == count_ppcs_formula(1) == 1
    entries.append(SuiteEntry("total-one", "odd", 1, 1, one_ok,
                              None if one_ok else "1", None if one_ok else 1))

    for family in FAMILIES[:-1]:
        for parity in ("even", "odd"):
            totals = [t for t in _totals(family, max_total) if (t % 2 == 0) == (parity == "even")]
            if not totals:
                continue
            bad = next((by_key[family, t] for t in totals if not by_key[family, t].passed), None)
            entries.append(SuiteEntry(
                family, parity, totals[0], totals[-1], bad is None,
                None if bad is None else bad.counterexample,
                None if bad is None else bad.total,
                "" if bad is None else bad.detail,
            ))

    for parity, res in zip(("even", "odd"), forests):
        first = 2 if parity == "even" else 3
        last = max_total if (max_total % 2 == 0) == (parity == "even") else max_total - 1
        entries.append(SuiteEntry(
            "forest", parity, first, last, res.passed,
            res.counterexample, None if res.passed else res.total, "" if res.passed else res.detail,
        ))
    return VerifyReport(max_total, entries)

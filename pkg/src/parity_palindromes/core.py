"""Compositions, parity words, and the A/B/C classification of parity
palindrome compositions (ppcs).

A composition of ``n`` is an ordered tuple of positive parts summing to ``n``.
It is a ppc when its parts, reduced mod 2, read the same in both directions::

    >>> c = parse_composition("32141")
    >>> c.parts, is_ppc(c), classify(c)
    ((3, 2, 1, 4, 1), True, <PpcType.C: 'C'>)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable

UINT64_MAX = 2**64 - 1


class PpcError(ValueError):
    """Base class for errors raised by this package."""


class InvalidComposition(PpcError):
    pass


class NotAPpc(PpcError):
    pass


@dataclass(frozen=True)
class Composition:
    """An immutable composition.

    ``parts`` is stored as a tuple; ``total`` is derived and, if given
    explicitly, checked against the sum.
    """

    parts: tuple[int, ...]
    total: int = field(default=None, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise InvalidComposition("composition must have at least one part")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InvalidComposition(f"part {p!r} is not an integer")
            if p < 1 or p > UINT64_MAX:
                raise InvalidComposition(f"part {p} out of range [1, 2^64-1]")
        total = sum(parts)
        if self.total is not None and self.total != total:
            raise InvalidComposition(f"parts sum to {total}, not {self.total}")
        if total > UINT64_MAX:
            raise InvalidComposition("total exceeds 2^64-1")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "total", total)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return format_composition(self)

    def __repr__(self) -> str:
        return f"Composition({list(self.parts)!r})"

    @property
    def first(self) -> int:
        return self.parts[0]

    @property
    def last(self) -> int:
        return self.parts[-1]

    def reversed(self) -> Composition:
        return Composition(self.parts[::-1])


def as_composition(c: Composition | Iterable[int]) -> Composition:
    return c if isinstance(c, Composition) else Composition(tuple(c))


class PpcType(str, enum.Enum):
    A = "A"  # both end parts are 1
    B = "B"  # both end parts are >= 2
    C = "C"  # exactly one end part is 1

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ParityWord:
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def reversed(self) -> ParityWord:
        return ParityWord(self.bits[::-1])

    def is_palindrome(self) -> bool:
        return self.bits == self.bits[::-1]


def parity_word(c: Composition | Iterable[int]) -> ParityWord:
    c = as_composition(c)
    return ParityWord(tuple(p & 1 for p in c.parts))


def is_ppc(c: Composition | Iterable[int]) -> bool:
    return parity_word(c).is_palindrome()


def classify(c: Composition | Iterable[int]) -> PpcType:
    """Return the type of a ppc.

    A single part counts as both first and last part, so ``[1]`` is type A
    and ``[k]`` with ``k >= 2`` is type B.
    """
    c = as_composition(c)
    if not is_ppc(c):
        raise NotAPpc(f"{c} is not a ppc")
    first_one = c.first == 1
    last_one = c.last == 1
    if first_one and last_one:
        return PpcType.A
    if not first_one and not last_one:
        return PpcType.B
    return PpcType.C


# -- text format ------------------------------------------------------------

_CANONICAL = re.compile(r"[1-9][0-9]*(,[1-9][0-9]*)*")
_COMPACT = re.compile(r"[1-9]+")
_BRACKETED = re.compile(r"\[([0-9,\s]*)\]")


def parse_composition(text: str) -> Composition:
    """Parse canonical (``3,2,1,4,1``) or compact (``32141``) text.

    A comma-free string of digits 1-9 is always read in compact form, one
    part per digit. A comma-free string containing a ``0`` (``10``, ``204``)
    is a single part. ``[12]`` may be used to force a single multi-digit part.
    """
    text = text.strip()
    m = _BRACKETED.fullmatch(text)
    if m:
        body = re.sub(r"\s+", "", m.group(1))
        if not _CANONICAL.fullmatch(body):
            raise InvalidComposition(f"cannot parse composition {text!r}")
        return Composition(tuple(int(s) for s in body.split(",")))
    if _COMPACT.fullmatch(text):
        return Composition(tuple(int(ch) for ch in text))
    if _CANONICAL.fullmatch(text):
        return Composition(tuple(int(s) for s in text.split(",")))
    raise InvalidComposition(f"cannot parse composition {text!r}")


def format_composition(c: Composition, compact: bool = False) -> str:
    """Canonical text, or compact text when asked and every part is <= 9."""
    if compact and all(p <= 9 for p in c.parts):
        return "".join(map(str, c.parts))
    return ",".join(map(str, c.parts))


def sort_key(c: Composition) -> str:
    """Canonical serialization, used as the ordering and identity key."""
    return format_composition(c)

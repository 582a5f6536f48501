"""Brute-force enumeration of compositions and ppcs, and the closed-form count.

Compositions of ``n`` correspond to subsets of the ``n - 1`` gaps between
unit cells: bit ``k`` of the gap mask set means a cut after the ``k+1``-th
unit. Enumeration walks masks ``0 .. 2**(n-1) - 1`` in increasing order, so
the least significant bit is the leftmost gap. For ``n = 3``::

    mask 0b00 -> 3
    mask 0b01 -> 1,2
    mask 0b10 -> 2,1
    mask 0b11 -> 1,1,1

The ppc filter here is deliberately independent of :mod:`.core` and
:mod:`.production`: it works on whole blocks of masks with numpy and never
calls ``is_ppc``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

import numpy as np

from .core import UINT64_MAX, Composition, PpcError

DEFAULT_CAP = 30
CHUNK = 1 << 18


class NOutOfRange(PpcError):
    pass


class FormulaOverflow(PpcError, OverflowError):
    pass


def check_n(n: int, cap: int = DEFAULT_CAP) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise NOutOfRange(f"n must be an integer, got {n!r}")
    if n < 1 or n > cap:
        raise NOutOfRange(f"n={n} outside [1, {cap}]")


def parts_from_mask(n: int, mask: int) -> tuple[int, ...]:
    parts = []
    run = 1
    for k in range(n - 1):
        if (mask >> k) & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def _mask_ranges(n: int, chunk: int | None = None):
    chunk = chunk or CHUNK
    size = 1 << (n - 1)
    for lo in range(0, size, chunk):
        yield lo, min(lo + chunk, size)


def ppc_flags(n: int, lo: int, hi: int) -> np.ndarray:
    """Boolean array: is the composition with gap mask ``lo + i`` a ppc?

    Builds each composition's parity word as a bit string, then compares
    bit ``i`` with bit ``len - 1 - i`` across the whole block at once.
    """
    masks = np.arange(lo, hi, dtype=np.uint64)
    one = np.uint64(1)
    word = np.zeros_like(masks)
    length = np.zeros_like(masks)
    cur = np.zeros_like(masks)
    for k in range(n - 1):
        cur ^= one
        cut = (masks >> np.uint64(k)) & one
        word |= (cur & cut) << length
        length += cut
        cur &= cut ^ one
    cur ^= one
    word |= cur << length
    length += one

    ok = np.ones(masks.shape, dtype=bool)
    for i in range((n + 1) // 2):
        ii = np.uint64(i)
        active = ii < length
        mirror = np.where(active, length - one - ii, np.uint64(0))
        same = ((word >> ii) & one) == ((word >> mirror) & one)
        ok &= ~active | same
    return ok


def enumerate_compositions(n: int, cap: int = DEFAULT_CAP) -> Iterator[Composition]:
    check_n(n, cap)
    for mask in range(1 << (n - 1)):
        yield Composition(parts_from_mask(n, mask))


def enumerate_ppcs(n: int, cap: int = DEFAULT_CAP) -> Iterator[Composition]:
    check_n(n, cap)
    for lo, hi in _mask_ranges(n):
        for offset in np.flatnonzero(ppc_flags(n, lo, hi)):
            yield Composition(parts_from_mask(n, lo + int(offset)))


def _count_block(args: tuple[int, int, int]) -> int:
    n, lo, hi = args
    return int(np.count_nonzero(ppc_flags(n, lo, hi)))


def count_ppcs_brute(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> int:
    """Count ppcs of ``n`` by testing every composition.

    With ``jobs > 1`` the mask range is split into disjoint blocks counted
    in worker processes; the sum does not depend on the split.
    """
    check_n(n, cap)
    blocks = [(n, lo, hi) for lo, hi in _mask_ranges(n)]
    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_block, blocks))
    return sum(map(_count_block, blocks))


def count_ppcs_formula(n: int) -> int:
    """Closed form: ``1`` for ``n = 1``, else ``2 * 3**(n // 2 - 1)``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NOutOfRange(f"n must be a positive integer, got {n!r}")
    if n == 1:
        return 1
    value = 2 * 3 ** (n // 2 - 1)
    if value > UINT64_MAX:
        raise FormulaOverflow(f"count for n={n} exceeds 2^64-1")
    return value

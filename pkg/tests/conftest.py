"""Reference helpers that share no code with the package under test."""

import itertools

import pytest


def all_compositions(n):
    """Every composition of n as a tuple, via cut positions 1..n-1."""
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0, *cuts, n)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def ends_match(parts):
    """Parity palindrome test written pairwise: part i and its mirror sum to even."""
    return all((parts[i] + parts[-1 - i]) % 2 == 0 for i in range(len(parts)))


def all_ppcs(n):
    return {c for c in all_compositions(n) if ends_match(c)}


@pytest.fixture(scope="session")
def ppc_sets():
    return {n: all_ppcs(n) for n in range(1, 21)}

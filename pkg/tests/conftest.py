"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own search code:
containment is checked straight from the definition by scanning index
tuples, Bell numbers come from the Bell triangle, Catalan numbers from
the binomial formula, Stirling numbers from their recurrence.
"""

from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import settings

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")


def ref_contains(perm, letters, glue) -> bool:
    """Containment straight from the definition: scan all index tuples."""
    n, m = len(perm), len(letters)
    for idx in itertools.combinations(range(n), m):
        if any(glue[j] and idx[j + 1] != idx[j] + 1 for j in range(m - 1)):
            continue
        vals = [perm[i] for i in idx]
        if all(
            (vals[a] < vals[b]) == (letters[a] < letters[b])
            for a in range(m)
            for b in range(a + 1, m)
        ):
            return True
    return False


def ref_occurrences(perm, letters, glue) -> list[tuple[int, ...]]:
    """All occurrences as 1-based index tuples, lexicographic order."""
    n, m = len(perm), len(letters)
    out = []
    for idx in itertools.combinations(range(n), m):
        if any(glue[j] and idx[j + 1] != idx[j] + 1 for j in range(m - 1)):
            continue
        vals = [perm[i] for i in idx]
        if all(
            (vals[a] < vals[b]) == (letters[a] < letters[b])
            for a in range(m)
            for b in range(a + 1, m)
        ):
            out.append(tuple(i + 1 for i in idx))
    return out


def ref_count_avoiders(letters, glue, n) -> int:
    return sum(
        1
        for p in itertools.permutations(range(1, n + 1))
        if not ref_contains(p, letters, glue)
    )


def bell_numbers(n_max: int) -> list[int]:
    row = [1]
    out = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


def catalan_numbers(n_max: int) -> list[int]:
    return [comb(2 * n, n) // (n + 1) for n in range(n_max + 1)]


def stirling2_table(n_max: int) -> list[list[int]]:
    """S(n, k) for 0 <= k <= n <= n_max."""
    table = [[1]]
    for n in range(1, n_max + 1):
        row = [0]
        for k in range(1, n + 1):
            above = table[n - 1]
            row.append((above[k] if k < len(above) else 0) * k + above[k - 1])
        table.append(row)
    return table


@pytest.fixture(scope="session")
def s6_avoider_sets():
    """pattern text -> frozenset of permutations of S_6 avoiding it,
    for every dash pattern with at most 4 letters (by the oracle)."""
    from gpavoid.patterns import all_patterns

    perms = list(itertools.permutations(range(1, 7)))
    sets = {}
    for length in (1, 2, 3, 4):
        for pat in all_patterns(length):
            letters, glue = pat.letters.ranks, pat.glue
            sets[str(pat)] = frozenset(
                p for p in perms if not ref_contains(p, letters, glue)
            )
    return sets

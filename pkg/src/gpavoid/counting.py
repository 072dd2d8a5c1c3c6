"""Exact counts of pattern-avoiding permutations.

Two independent routes:

* ``count_avoiders`` / ``count_sequence``: pruned depth-first search over
  all permutations, valid for any dash pattern.  A word that already
  contains the pattern keeps containing it under every extension, so
  whole subtrees are abandoned at the first occurrence; the test at each
  step only looks for occurrences ending at the newest position.  The
  inner loop is the compiled kernel when available, with a pure-Python
  fallback selected at import time.

* ``count_consecutive_dp``: a transfer dynamic program for patterns
  without dashes, reaching n in the hundreds.  The state is the rank
  tuple of the last k-1 entries within the prefix placed so far; a new
  entry is inserted at each of the n+1 possible ranks and a transition is
  rejected when the new length-k window reduces to the pattern.  Ranks
  relative to the whole prefix (rather than the bare k-1 window shape)
  are what make the transition counts well defined.

One DFS run at depth n counts pattern-free injective words of every
length t at once, and those relate to avoider counts by
words(t) = C(n, t) * alpha_t, so a single run yields the whole sequence.
"""

from __future__ import annotations

import os
from bisect import bisect_left, bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import accumulate
from math import comb
from typing import Sequence

from .patterns import GeneralizedPattern, Permutation, _ranks

if os.environ.get("GPAVOID_PURE"):
    from . import _pykernel as _kernel

    KERNEL_BACKEND = "python"
else:
    try:
        from . import _ckernel as _kernel  # type: ignore[no-redef]

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import _pykernel as _kernel  # type: ignore[no-redef]

        KERNEL_BACKEND = "python"

DEFAULT_CAP = 13  # brute force beyond this takes hours; lift with force=True

METHOD_BACKTRACKING = "backtracking"
METHOD_TRANSFER_DP = "transfer_dp"

# transfer DP guard: the state space is roughly n**(k-1) tuples
_DP_MAX_STATES = 50_000_000
_DP_MAX_K = 6


class CapExceededError(RuntimeError):
    """Raised when a brute-force request exceeds the resource guard."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n={n} exceeds the brute-force cap {cap}; pass force=True "
            f"(--force on the command line) to lift it"
        )
        self.n = n
        self.cap = cap


@dataclass
class CountSequence:
    """alpha_0..alpha_{n_max} for one pattern, plus how they were computed."""

    pattern: GeneralizedPattern
    counts: list[int]
    method: str

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)


def _words_per_depth(pat: GeneralizedPattern, n: int, threads: int) -> list[int]:
    letters = pat.letters.ranks
    glue = tuple(bool(g) for g in pat.glue)
    kernel = _kernel
    if KERNEL_BACKEND == "cython" and n > _kernel.MAX_N:
        # unbounded Python integers instead of the kernel's 64-bit counts
        from . import _pykernel

        kernel = _pykernel
    if threads <= 1 or n <= 1:
        return kernel.count_words_per_depth(n, letters, glue)
    # the forest splits at the choice of the first value into independent
    # subtrees; int sums are order-independent, so the result stays
    # deterministic
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(
            pool.map(
                lambda v: kernel.count_words_per_depth(n, letters, glue, v),
                range(1, n + 1),
            )
        )
    totals = [0] * (n + 1)
    totals[0] = 1
    for part in parts:
        for t in range(1, n + 1):
            totals[t] += part[t]
    return totals


def _check_cap(n: int, force: bool) -> None:
    if n > DEFAULT_CAP and not force:
        raise CapExceededError(n, DEFAULT_CAP)


def count_avoiders(pat: GeneralizedPattern, n: int, *, force: bool = False,
                   threads: int = 1) -> int:
    """Exact number of permutations of 1..n avoiding ``pat``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, force)
    return _words_per_depth(pat, n, threads)[n]


def count_sequence(pat: GeneralizedPattern, n_max: int, *, force: bool = False,
                   threads: int = 1) -> CountSequence:
    """alpha_0..alpha_{n_max} from a single search at depth n_max.

    Avoidance depends only on relative order, so the pattern-free
    injective words of length t over 1..n_max are exactly the C(n_max, t)
    value choices times the alpha_t avoiding orders.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    _check_cap(n_max, force)
    words = _words_per_depth(pat, n_max, threads)
    counts = []
    for t, w in enumerate(words):
        q, r = divmod(w, comb(n_max, t))
        if r:
            raise AssertionError(
                f"word count {w} at depth {t} is not divisible by "
                f"C({n_max},{t}); enumeration is inconsistent"
            )
        counts.append(q)
    return CountSequence(pat, counts, METHOD_BACKTRACKING)


def _dp_level_grow(level: dict, t: int) -> dict:
    # window not yet full: extend the rank tuple, no occurrence possible
    new: dict = {}
    get = new.get
    for state, c in level.items():
        for v in range(1, t + 2):
            ns = tuple(r + (r >= v) for r in state) + (v,)
            new[ns] = get(ns, 0) + c
    return new


def _dp_level_step(level: dict, t: int, letters: tuple[int, ...]) -> dict:
    # full window: group states by tail, prefix-sum over the dropped head
    k = len(letters)
    s1 = letters[0]
    rest = letters[1:]
    rest_pairs = [
        (a, b, rest[a] < rest[b])
        for a in range(k - 1)
        for b in range(a + 1, k - 1)
    ]
    below = [l for l in range(k - 1) if rest[l] < s1]
    above = [l for l in range(k - 1) if rest[l] > s1]
    tails: dict = {}
    for state, c in level.items():
        tails.setdefault(state[1:], {})[state[0]] = c
    new: dict = {}
    get = new.get
    for tail, heads in tails.items():
        ps = sorted(heads)
        cum = list(accumulate(heads[p] for p in ps))
        total = cum[-1]

        for v in range(1, t + 2):
            w_rest = tuple(r + (r >= v) for r in tail) + (v,)
            allowed = total
            if all((w_rest[a] < w_rest[b]) == lt for a, b, lt in rest_pairs):
                # the dropped head completes a forbidden window exactly
                # when its bumped rank falls strictly between the window
                # values playing smaller and larger roles than letter 1
                lo = max((w_rest[l] for l in below), default=0) + 1
                hi = min((w_rest[l] for l in above), default=t + 2) - 1
                # un-bump the rank interval around v (head ranks are
                # pre-insertion, the interval is post-insertion)
                if hi < v:
                    plo, phi = lo, hi
                elif lo > v:
                    plo, phi = lo - 1, hi - 1
                else:
                    plo, phi = lo, hi - 1
                if plo <= phi:
                    j0 = bisect_left(ps, plo)
                    j1 = bisect_right(ps, phi) - 1
                    if j1 >= j0:
                        allowed -= cum[j1] - (cum[j0 - 1] if j0 else 0)
            if allowed:
                new[w_rest] = get(w_rest, 0) + allowed
    return new


def count_consecutive_dp(pat: GeneralizedPattern, n_max: int) -> CountSequence:
    """Exact avoider counts for a dashless pattern via the transfer DP."""
    if not pat.is_consecutive:
        raise ValueError(f"{pat} has dashes; the transfer DP needs a consecutive pattern")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    letters = pat.letters.ranks
    k = len(letters)
    if k > _DP_MAX_K:
        raise ValueError(f"pattern length {k} exceeds the DP limit {_DP_MAX_K}")
    if k > 2 and n_max ** (k - 1) > _DP_MAX_STATES:
        raise ValueError(
            f"state space ~{n_max}^{k - 1} too large for the transfer DP"
        )
    counts = [1]
    if n_max >= 1:
        counts.append(0 if k == 1 else 1)
    if k == 1:
        counts.extend([0] * max(0, n_max - 1))
        return CountSequence(pat, counts[: n_max + 1], METHOD_TRANSFER_DP)
    level = {(1,): 1}
    for t in range(1, n_max):
        if t < k - 1:
            level = _dp_level_grow(level, t)
        else:
            level = _dp_level_step(level, t, letters)
        counts.append(sum(level.values()))
    return CountSequence(pat, counts[: n_max + 1], METHOD_TRANSFER_DP)


def ltr_minima(perm: Permutation | Sequence[int]) -> list[int]:
    """1-based positions of the left-to-right minima."""
    ranks = _ranks(perm)
    out = []
    cur = len(ranks) + 1
    for i, v in enumerate(ranks, start=1):
        if v < cur:
            out.append(i)
            cur = v
    return out


def rtl_maxima(perm: Permutation | Sequence[int]) -> list[int]:
    """1-based positions of the right-to-left maxima."""
    ranks = _ranks(perm)
    out = []
    cur = 0
    for i in range(len(ranks), 0, -1):
        if ranks[i - 1] > cur:
            out.append(i)
            cur = ranks[i - 1]
    return out[::-1]


def check_submultiplicative(seq: CountSequence, m: int, n: int) -> bool:
    """alpha_{m+n} <= alpha_m * alpha_n * C(m+n, n) for a consecutive pattern.

    A pattern-free permutation of length m+n splits at position m into
    two pattern-free pieces, which is where the inequality comes from; it
    needs every occurrence to be contiguous, hence the consecutive
    requirement.
    """
    if not seq.pattern.is_consecutive:
        raise ValueError("submultiplicativity is stated for consecutive patterns")
    if m + n > seq.n_max:
        raise ValueError(f"sequence only reaches n={seq.n_max}, need {m + n}")
    return seq[m + n] <= seq[m] * seq[n] * comb(m + n, n)

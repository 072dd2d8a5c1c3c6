"""Pure-Python fallback for the enumeration kernel.

Same contract as the compiled module ``_ckernel``: depth-first
construction of injective words over 1..n, abandoning any word whose
newest element completes an occurrence of the pattern.  Occurrences
survive every extension of a word, so pruning on the first occurrence is
exhaustive, and a new occurrence must use the newest position (indices
increase, so it is the final pattern letter).

Counts use Python integers, so there is no overflow ceiling here, only
patience.
"""

from __future__ import annotations


def count_words_per_depth(n: int, letters: tuple[int, ...],
                          glue: tuple[int, ...], first_value: int = 0) -> list[int]:
    """counts[t] = number of pattern-free injective words of length t.

    With ``first_value`` > 0 only the subtree of words starting with that
    value is explored (and counts[0] is reported as 0 for summability).
    """
    m = len(letters)
    counts = [0] * (n + 1)
    counts[0] = 0 if first_value else 1
    if n == 0:
        return counts
    vals = [0] * n
    used = [False] * (n + 1)

    def ends_occurrence(t: int) -> bool:
        # is there an occurrence with final letter at position t (0-based)?
        if t + 1 < m:
            return False
        idx = [0] * m
        idx[m - 1] = t

        def down(j: int) -> bool:
            if j < 0:
                return True
            if glue[j]:
                candidates = (idx[j + 1] - 1,)
            else:
                candidates = range(idx[j + 1] - 1, j - 1, -1)
            lj = letters[j]
            for i in candidates:
                if i < j:  # j earlier letters still need positions below
                    break
                v = vals[i]
                ok = True
                for l in range(j + 1, m):
                    if (v < vals[idx[l]]) != (lj < letters[l]):
                        ok = False
                        break
                if ok:
                    idx[j] = i
                    if down(j - 1):
                        return True
            return False

        return down(m - 2)

    def dfs(t: int) -> None:
        for v in range(1, n + 1):
            if used[v]:
                continue
            vals[t] = v
            if ends_occurrence(t):
                continue
            counts[t + 1] += 1
            if t + 1 < n:
                used[v] = True
                dfs(t + 1)
                used[v] = False

    if first_value:
        vals[0] = first_value
        if not ends_occurrence(0):
            counts[1] += 1
            if n > 1:
                used[first_value] = True
                dfs(1)
    else:
        dfs(0)
    return counts

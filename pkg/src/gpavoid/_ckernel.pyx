# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Depth-first construction of injective words over 1..n with pruning on
the first pattern occurrence; the incremental containment test only
searches occurrences ending at the newest position.  Counts are kept in
64-bit integers, which is safe for the supported range n <= MAX_N (the
worst case, a never-occurring pattern, visits sum_t n!/(n-t)! < e*n!
words).  The search itself runs without the GIL so independent subtrees
can be counted from multiple Python threads.
"""

from libc.string cimport memset

MAX_N = 19          # e*19! ~ 3.3e17 fits comfortably in int64
MAX_M = 9

ctypedef long long i64


cdef bint _ends_occurrence(const int* vals, int t, const int* letters,
                           const int* glue, int m, int* idx, int j) noexcept nogil:
    # choose idx[j] given idx[j+1..m-1]; positions descend so index order
    # stays strict; j earlier letters still need positions below idx[j]
    cdef int i, l, v, lj, lo, hi
    cdef bint ok
    if j < 0:
        return True
    lj = letters[j]
    if glue[j]:
        lo = idx[j + 1] - 1
        hi = lo
    else:
        hi = idx[j + 1] - 1
        lo = j
    i = hi
    while i >= lo and i >= j:
        v = vals[i]
        ok = True
        for l in range(j + 1, m):
            if (v < vals[idx[l]]) != (lj < letters[l]):
                ok = False
                break
        if ok:
            idx[j] = i
            if _ends_occurrence(vals, t, letters, glue, m, idx, j - 1):
                return True
        i -= 1
    return False


cdef void _dfs(int t, int n, int m, int* vals, bint* used, const int* letters,
               const int* glue, i64* counts, int* idx) noexcept nogil:
    cdef int v
    for v in range(1, n + 1):
        if used[v]:
            continue
        vals[t] = v
        if t + 1 >= m:
            idx[m - 1] = t
            if _ends_occurrence(vals, t, letters, glue, m, idx, m - 2):
                continue
        counts[t + 1] += 1
        if t + 1 < n:
            used[v] = True
            _dfs(t + 1, n, m, vals, used, letters, glue, counts, idx)
            used[v] = False


def count_words_per_depth(int n, tuple letters, tuple glue, int first_value=0):
    """counts[t] = number of pattern-free injective words of length t.

    With ``first_value`` > 0 only words starting with that value are
    explored and counts[0] is reported as 0, so per-subtree results sum
    to the full run.
    """
    cdef int m = len(letters)
    if n > MAX_N:
        raise OverflowError(f"compiled kernel supports n <= {MAX_N}, got {n}")
    if m > MAX_M:
        raise ValueError(f"pattern too long for kernel: {m} > {MAX_M}")
    cdef int c_letters[9]
    cdef int c_glue[9]
    cdef int vals[32]
    cdef bint used[33]
    cdef int idx[9]
    cdef i64 counts[33]
    cdef int j
    for j in range(m):
        c_letters[j] = letters[j]
    for j in range(m - 1):
        c_glue[j] = 1 if glue[j] else 0
    memset(vals, 0, sizeof(vals))
    memset(used, 0, sizeof(used))
    memset(counts, 0, sizeof(counts))
    counts[0] = 0 if first_value else 1
    cdef int fv = first_value
    cdef bint blocked
    if n > 0:
        with nogil:
            if fv:
                vals[0] = fv
                blocked = False
                if m <= 1:
                    idx[m - 1] = 0
                    blocked = _ends_occurrence(vals, 0, c_letters, c_glue, m, idx, m - 2)
                if not blocked:
                    counts[1] += 1
                    if n > 1:
                        used[fv] = True
                        _dfs(1, n, m, vals, used, c_letters, c_glue, counts, idx)
            else:
                _dfs(0, n, m, vals, used, c_letters, c_glue, counts, idx)
    return [counts[t] for t in range(n + 1)]

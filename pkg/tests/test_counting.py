"""Enumeration: pruned search, transfer DP, structural helpers."""

import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from gpavoid.counting import (
    CapExceededError,
    DEFAULT_CAP,
    check_submultiplicative,
    count_avoiders,
    count_consecutive_dp,
    count_sequence,
    ltr_minima,
    rtl_maxima,
)
from gpavoid.patterns import (
    GeneralizedPattern,
    Permutation,
    all_patterns,
    avoids,
    parse_pattern,
    reduce,
)

from conftest import bell_numbers, catalan_numbers, ref_count_avoiders


# ---------------------------------------------------------------------------
# brute-force counts against the oracle and known values


def test_count_examples_against_oracle():
    cases = [("1-23", 5, 52), ("2-13", 5, 42), ("123", 4, 17), ("132", 4, 16)]
    for text, n, frozen in cases:
        pat = parse_pattern(text)
        got = count_avoiders(pat, n)
        assert got == ref_count_avoiders(pat.letters.ranks, pat.glue, n)
        assert got == frozen


def test_bell_and_catalan_sequences():
    assert count_sequence(parse_pattern("1-23"), 6).counts == [1, 1, 2, 5, 15, 52, 203]
    assert count_sequence(parse_pattern("1-23"), 6).counts == bell_numbers(6)
    assert count_sequence(parse_pattern("1-2-3"), 6).counts == [1, 1, 2, 5, 14, 42, 132]
    assert count_sequence(parse_pattern("1-2-3"), 6).counts == catalan_numbers(6)


def test_short_hosts_count_everything():
    for text in ["12-34", "1234", "1-2-3-4", "13-24"]:
        assert count_sequence(parse_pattern(text), 3).counts == [1, 1, 2, 6]


@given(st.sampled_from(["12-34", "1-23", "132", "3-14-2", "1-23-4"]))
@settings(max_examples=10)
def test_factorial_prefix_property(text):
    pat = parse_pattern(text)
    seq = count_sequence(pat, len(pat) - 1)
    assert seq.counts == [factorial(n) for n in range(len(pat))]


def test_sequence_matches_pointwise_counts():
    pat = parse_pattern("12-4-3")
    seq = count_sequence(pat, 7)
    for n in (0, 3, 5, 7):
        assert seq[n] == count_avoiders(pat, n)


def test_cap_guard():
    pat = parse_pattern("12-34")
    with pytest.raises(CapExceededError):
        count_avoiders(pat, DEFAULT_CAP + 1)
    with pytest.raises(CapExceededError):
        count_sequence(pat, DEFAULT_CAP + 1)
    # force lifts the cap; a cheap pattern keeps this instant
    assert count_avoiders(parse_pattern("1-2"), DEFAULT_CAP + 1, force=True) == 1


def test_threads_match_serial():
    pat = parse_pattern("12-34")
    assert (
        count_sequence(pat, 7, threads=2).counts
        == count_sequence(pat, 7).counts
    )


# ---------------------------------------------------------------------------
# transfer DP


def test_dp_requires_consecutive():
    with pytest.raises(ValueError):
        count_consecutive_dp(parse_pattern("1-23"), 5)


def test_dp_single_letter():
    assert count_consecutive_dp(parse_pattern("1"), 4).counts == [1, 0, 0, 0, 0]


def test_dp_length_two():
    for n in (0, 1, 5, 30):
        assert count_consecutive_dp(parse_pattern("12"), n).counts[-1] == 1
    assert count_consecutive_dp(parse_pattern("21"), 12).counts == [1] * 13


def test_dp_known_values():
    assert count_consecutive_dp(parse_pattern("123"), 6).counts == [1, 1, 2, 5, 17, 70, 349]
    assert count_consecutive_dp(parse_pattern("132"), 6).counts == [1, 1, 2, 5, 16, 63, 296]


def test_dp_agrees_with_backtracking_all_k3_k4():
    n_max = 10
    for k in (3, 4):
        for letters in itertools.permutations(range(1, k + 1)):
            pat = GeneralizedPattern(Permutation(letters), (True,) * (k - 1))
            dp = count_consecutive_dp(pat, n_max).counts
            bt = count_sequence(pat, n_max).counts
            assert dp == bt, f"mismatch for {pat}"


def test_dp_k5_spot_check():
    pat = parse_pattern("12345")
    dp = count_consecutive_dp(pat, 8).counts
    bt = count_sequence(pat, 8).counts
    assert dp == bt


def test_dp_state_space_guard():
    with pytest.raises(ValueError):
        count_consecutive_dp(parse_pattern("123456"), 200)


def test_theorem_strictness_123_vs_132():
    a123 = count_consecutive_dp(parse_pattern("123"), 14).counts
    a132 = count_consecutive_dp(parse_pattern("132"), 14).counts
    for n in range(4, 15):
        assert a123[n] > a132[n]
    for n in range(4):
        assert a123[n] == a132[n]


# ---------------------------------------------------------------------------
# structural helpers


def test_ltr_minima_worked_example():
    perm = Permutation.from_text("3542716")
    pos = ltr_minima(perm)
    assert pos == [1, 4, 6]
    assert [perm[i - 1] for i in pos] == [3, 2, 1]


def test_extreme_monotone_cases():
    inc = Permutation(tuple(range(1, 8)))
    dec = Permutation(tuple(range(7, 0, -1)))
    assert ltr_minima(inc) == [1]
    assert rtl_maxima(inc) == [7]
    assert ltr_minima(dec) == list(range(1, 8))
    assert rtl_maxima(dec) == list(range(1, 8))


@given(st.permutations(range(1, 9)))
def test_minima_maxima_definitions(perm):
    pos_min = set(ltr_minima(perm))
    pos_max = set(rtl_maxima(perm))
    for i in range(1, len(perm) + 1):
        is_min = all(perm[j] > perm[i - 1] for j in range(i - 1))
        is_max = all(perm[j] < perm[i - 1] for j in range(i, len(perm)))
        assert (i in pos_min) == is_min
        assert (i in pos_max) == is_max


def _blocks_between_minima(perm):
    ranks = tuple(perm)
    pos = ltr_minima(ranks)
    blocks = []
    for idx, p in enumerate(pos):
        end = pos[idx + 1] - 1 if idx + 1 < len(pos) else len(ranks)
        blocks.append(ranks[p:end])
    return blocks


@pytest.mark.parametrize("sigma", ["12", "21", "132", "123"])
def test_ltr_minima_characterization(sigma):
    # a permutation avoids the front-extended pattern exactly when each
    # block strictly between consecutive left-to-right minima, reduced,
    # avoids the dashless core
    core = parse_pattern(sigma)
    shifted = "".join(str(int(c) + 1) for c in sigma)
    extended = parse_pattern(f"1-{shifted}")
    for n in range(1, 8):
        for perm in itertools.permutations(range(1, n + 1)):
            lhs = avoids(perm, extended)
            rhs = all(
                avoids(reduce(b), core) for b in _blocks_between_minima(perm) if b
            )
            assert lhs == rhs, (perm, sigma)


# ---------------------------------------------------------------------------
# inequalities and equalities


def test_submultiplicative_examples():
    seq = count_consecutive_dp(parse_pattern("123"), 6)
    assert seq[6] == 349 and seq[3] == 5
    assert 349 <= 5 * 5 * comb(6, 3)
    assert check_submultiplicative(seq, 3, 3)
    assert check_submultiplicative(seq, 0, 6)  # equality case
    seq132 = count_consecutive_dp(parse_pattern("132"), 6)
    assert check_submultiplicative(seq132, 2, 2)


def test_submultiplicative_needs_consecutive():
    with pytest.raises(ValueError):
        check_submultiplicative(count_sequence(parse_pattern("1-23"), 6), 3, 3)


def test_submultiplicative_all_short_consecutive():
    for k in (3, 4):
        for letters in itertools.permutations(range(1, k + 1)):
            pat = GeneralizedPattern(Permutation(letters), (True,) * (k - 1))
            seq = count_consecutive_dp(pat, 12)
            for m in range(13):
                for n in range(13 - m):
                    assert check_submultiplicative(seq, m, n)


def test_removing_one_dash_never_decreases_counts():
    # flipping any single slot from dashed to glued only shrinks the set
    # of occurrences, so the avoider counts can only grow
    n_max = 7
    for length in (2, 3, 4):
        for pat in all_patterns(length):
            base = count_sequence(pat, n_max).counts
            for j, g in enumerate(pat.glue):
                if g:
                    continue
                tighter = GeneralizedPattern(
                    pat.letters,
                    pat.glue[:j] + (True,) + pat.glue[j + 1 :],
                )
                assert count_sequence(tighter, n_max).counts >= base


def test_reverse_preserves_counts():
    pat = parse_pattern("12-34")
    rev = pat.reverse()
    assert str(rev) == "43-21"
    assert count_sequence(pat, 8).counts == count_sequence(rev, 8).counts


def test_equality_families_small():
    for a, b, cap in [("12-345", "21-345", 7), ("1-23-4", "1-32-4", 7)]:
        sa = count_sequence(parse_pattern(a), cap).counts
        sb = count_sequence(parse_pattern(b), cap).counts
        assert sa == sb, (a, b)
    family = ["12-354", "12-453", "12-534", "12-435"]
    seqs = [count_sequence(parse_pattern(t), 7).counts for t in family]
    assert all(s == seqs[0] for s in seqs[1:])

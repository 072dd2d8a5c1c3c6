"""Dash patterns on permutations: parsing, containment, symmetries.

A pattern such as ``12-4-3`` is a permutation of 1..m written with
optional dashes between adjacent letters.  Two letters with no dash
between them must occupy adjacent positions in any occurrence; a dash
allows an arbitrary gap.  ``1-2-3`` (dashes everywhere) is classical
subsequence containment, ``132`` (no dashes) must occur as a contiguous
factor.  The permutation 3542716 contains ``12-4-3`` exactly once (the
subsequence 3576 at positions 1,2,5,7) and avoids ``12-43``.

Positions and values are 1-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_PATTERN_LENGTH = 9  # single-digit letters keep the text form unambiguous


class PatternSyntaxError(ValueError):
    """Malformed pattern or permutation text.

    ``position`` is the 0-based index of the offending character, or None
    when the problem is global (e.g. a missing digit).
    """

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Permutation:
    """A sequence of distinct ranks 1..n."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.ranks}")

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse single-digit one-line notation, e.g. ``3542716``."""
        if not text:
            raise PatternSyntaxError("empty permutation text")
        ranks = []
        for pos, ch in enumerate(text):
            if ch not in "123456789":
                raise PatternSyntaxError(f"invalid character {ch!r}", pos)
            ranks.append(int(ch))
        return cls(tuple(ranks))

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks)

    def __getitem__(self, i: int) -> int:
        return self.ranks[i]

    def __str__(self) -> str:
        return "".join(str(r) for r in self.ranks)

    def reverse(self) -> "Permutation":
        return Permutation(self.ranks[::-1])

    def complement(self) -> "Permutation":
        n = len(self.ranks)
        return Permutation(tuple(n + 1 - r for r in self.ranks))


@dataclass(frozen=True)
class GeneralizedPattern:
    """Pattern letters plus per-slot adjacency flags.

    ``glue[j]`` is True when there is NO dash between letters j and j+1,
    i.e. the two letters must be adjacent in an occurrence.
    """

    letters: Permutation
    glue: tuple[bool, ...]

    def __post_init__(self):
        if len(self.letters) < 1:
            raise ValueError("pattern needs at least one letter")
        if len(self.glue) != len(self.letters) - 1:
            raise ValueError(
                f"glue length {len(self.glue)} does not match "
                f"{len(self.letters)} letters"
            )

    @property
    def is_classical(self) -> bool:
        """Dashes everywhere: plain subsequence containment."""
        return not any(self.glue)

    @property
    def is_consecutive(self) -> bool:
        """No dashes: occurrences are contiguous factors."""
        return all(self.glue)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        out = [str(self.letters[0])]
        for j, g in enumerate(self.glue):
            if not g:
                out.append("-")
            out.append(str(self.letters[j + 1]))
        return "".join(out)

    @property
    def text(self) -> str:
        return str(self)

    def reverse(self) -> "GeneralizedPattern":
        """Reverse the letters; the slot flags reverse along with them."""
        return GeneralizedPattern(self.letters.reverse(), self.glue[::-1])

    def complement(self) -> "GeneralizedPattern":
        """Flip values x -> m+1-x; slots keep their flags."""
        return GeneralizedPattern(self.letters.complement(), self.glue)

    def strip_dashes(self) -> "GeneralizedPattern":
        """The consecutive pattern with the same letters."""
        return GeneralizedPattern(self.letters, (True,) * len(self.glue))

    def dash_everywhere(self) -> "GeneralizedPattern":
        """The classical pattern with the same letters."""
        return GeneralizedPattern(self.letters, (False,) * len(self.glue))


@dataclass(frozen=True)
class Occurrence:
    """Strictly increasing 1-based positions witnessing containment."""

    indices: tuple[int, ...]

    def values(self, perm: Permutation | Sequence[int]) -> tuple[int, ...]:
        ranks = _ranks(perm)
        return tuple(ranks[i - 1] for i in self.indices)


def parse_pattern(text: str) -> GeneralizedPattern:
    """Parse dash notation like ``12-4-3`` into a GeneralizedPattern.

    Grammar: blocks of digits 1..9 separated by single dashes; the digits
    must form a permutation of 1..m, with m at most 9.
    """
    if not text:
        raise PatternSyntaxError("empty pattern text")
    letters: list[int] = []
    glue: list[bool] = []
    prev_was_digit = False
    for pos, ch in enumerate(text):
        if ch == "-":
            if not prev_was_digit:
                which = "leading" if pos == 0 else "double"
                raise PatternSyntaxError(f"{which} dash", pos)
            prev_was_digit = False
        elif ch in "123456789":
            if letters:
                # adjacent digits share a slot without a dash
                glue.append(prev_was_digit)
            letters.append(int(ch))
            prev_was_digit = True
        else:
            raise PatternSyntaxError(f"invalid character {ch!r}", pos)
    if not prev_was_digit:
        raise PatternSyntaxError("trailing dash", len(text) - 1)
    m = len(letters)
    if m > MAX_PATTERN_LENGTH:
        raise PatternSyntaxError(f"pattern longer than {MAX_PATTERN_LENGTH}")
    seen = set(letters)
    if len(seen) != m:
        dup = next(x for x in letters if letters.count(x) > 1)
        raise PatternSyntaxError(f"repeated digit {dup}", text.index(str(dup)))
    if seen != set(range(1, m + 1)):
        missing = min(set(range(1, m + 1)) - seen)
        raise PatternSyntaxError(f"digits are not a permutation of 1..{m}: missing {missing}")
    return GeneralizedPattern(Permutation(tuple(letters)), tuple(glue))


def reduce(word: Iterable[int]) -> Permutation:
    """Relabel a word with distinct entries to ranks 1..n, order preserved."""
    w = tuple(word)
    if len(set(w)) != len(w):
        raise ValueError(f"duplicate entries in {w}")
    order = sorted(range(len(w)), key=lambda i: w[i])
    ranks = [0] * len(w)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return Permutation(tuple(ranks))


def _ranks(perm: Permutation | Sequence[int]) -> tuple[int, ...]:
    if isinstance(perm, Permutation):
        return perm.ranks
    return tuple(perm)


def _matches_so_far(vals: Sequence[int], chosen: list[int], i: int,
                    letters: tuple[int, ...], j: int) -> bool:
    # order-consistency of candidate position i (pattern slot j) against
    # the already chosen slots 0..j-1
    v = vals[i]
    for l in range(j):
        if (vals[chosen[l]] < v) != (letters[l] < letters[j]):
            return False
    return True


def find_occurrences(perm: Permutation | Sequence[int],
                     pat: GeneralizedPattern,
                     limit: Optional[int] = None) -> list[Occurrence]:
    """All occurrences of ``pat`` in ``perm`` in lexicographic index order.

    ``limit`` stops the search early once that many have been found.
    """
    vals = _ranks(perm)
    letters = pat.letters.ranks
    glue = pat.glue
    n, m = len(vals), len(letters)
    found: list[Occurrence] = []
    if m > n or (limit is not None and limit <= 0):
        return found
    chosen = [0] * m

    def extend(j: int, start: int) -> bool:
        # returns True when the limit has been reached
        if j == m:
            found.append(Occurrence(tuple(i + 1 for i in chosen)))
            return limit is not None and len(found) >= limit
        if j > 0 and glue[j - 1]:
            candidates = range(chosen[j - 1] + 1, chosen[j - 1] + 2)
        else:
            candidates = range(start, n - (m - 1 - j))
        for i in candidates:
            if i >= n:
                break
            if _matches_so_far(vals, chosen, i, letters, j):
                chosen[j] = i
                if extend(j + 1, i + 1):
                    return True
        return False

    extend(0, 0)
    return found


def contains(perm: Permutation | Sequence[int], pat: GeneralizedPattern) -> bool:
    return bool(find_occurrences(perm, pat, limit=1))


def avoids(perm: Permutation | Sequence[int], pat: GeneralizedPattern) -> bool:
    return not contains(perm, pat)


def all_patterns(length: int) -> Iterator[GeneralizedPattern]:
    """Every dash pattern with the given number of letters."""
    for letters in itertools.permutations(range(1, length + 1)):
        for mask in itertools.product((False, True), repeat=length - 1):
            yield GeneralizedPattern(Permutation(letters), mask)

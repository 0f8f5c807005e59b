"""Two-change Gray codes for fixed-weight m-ary words.

Orders all length-n words over {0..m-1} with digit sum k so that consecutive
words differ in exactly two positions: one digit rises by some amount and
another falls by the same amount (a single-position change would break the
weight).  The scheme is reflective: words are grouped by leading digit in
increasing order, and each group recursively orders its tails, emitted
forward or backward depending on the parity of the digits already fixed.
That parity rule is what makes every group boundary a two-position change.

Two independent realizations are provided: ``gray_list`` builds the full
list via direction-flag recursion, while ``gray_stream`` walks an explicit
frame stack and yields one word at a time in O(n) memory.  They produce
identical sequences and are tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .words import (
    DEFAULT_MATERIALIZATION_CAP,
    MaterializationLimitError,
    Word,
    count_fixed_weight,
    format_word,
    weight,
    weight_decomposition,
)

__all__ = [
    "GrayList",
    "GrayReport",
    "gray_list",
    "gray_stream",
    "first_word",
    "last_word",
    "hamming_distance",
    "verify_gray",
]


@dataclass(frozen=True)
class GrayList:
    """An ordering of the weight-k words for parameters (m, n, k)."""

    m: int
    n: int
    k: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)


@dataclass(frozen=True)
class GrayReport:
    """Verifier verdict; ``first_violation`` is (index, description).

    The index points at the offending word or adjacent pair; -1 marks a
    whole-list violation such as a cardinality mismatch.
    """

    ok: bool
    first_violation: tuple[int, str] | None = None


def gray_list(
    m: int, n: int, k: int, *, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> GrayList:
    """The full two-change ordering of the weight-k words of length n.

    Parameters outside 0 <= k <= (m-1)*n yield an empty list (the set is
    empty); m < 1 or n < 0 raise.  Lists longer than ``cap`` raise
    MaterializationLimitError; use gray_stream for those.
    """
    total = count_fixed_weight(m, n, k)  # also validates m, n
    if total > cap:
        raise MaterializationLimitError(
            f"ordering holds {total} words, cap is {cap}"
        )
    out: list[Word] = []
    if total:
        _extend(m, n, k, False, (), out)
    return GrayList(m, n, k, tuple(out))


def _extend(
    m: int, n: int, k: int, backwards: bool, prefix: Word, out: list[Word]
) -> None:
    # Reversal is realized by flipping the iteration direction, never by
    # materializing a sublist and reversing it.
    if k < 0 or k > (m - 1) * n:
        return
    if n == 0:
        out.append(prefix)
        return
    hi = min(m - 1, k)
    digits = range(hi, -1, -1) if backwards else range(hi + 1)
    for i in digits:
        # An odd leading digit flips its group; under reversal the flip
        # applies to the complement, hence the xor.
        _extend(m, n - 1, k - i, backwards ^ (i % 2 == 1), prefix + (i,), out)


def gray_stream(m: int, n: int, k: int) -> Iterator[Word]:
    """Yield gray_list(m, n, k) one word at a time without building the list.

    Keeps a stack of (digit, direction) frames of depth n; the direction at
    each level is the parity of the digits chosen above it.  Memory is O(n)
    regardless of how many words the parameters generate.
    """
    if m < 1:
        raise ValueError(f"alphabet size m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"word length n must be >= 0, got {n}")
    if k < 0 or k > (m - 1) * n:
        return
    if n == 0:
        yield ()
        return

    # Frame fields: digit, backwards flag, digit bounds, weight left at entry.
    frames: list[tuple[int, bool, int, int, int]] = []

    def descend(backwards: bool, rem: int) -> None:
        while len(frames) < n:
            left = n - len(frames)
            lo = max(0, rem - (m - 1) * (left - 1))
            hi = min(m - 1, rem)
            digit = hi if backwards else lo
            frames.append((digit, backwards, lo, hi, rem))
            rem -= digit
            backwards ^= digit % 2 == 1

    descend(False, k)
    while True:
        yield tuple(frame[0] for frame in frames)
        while frames:
            digit, backwards, lo, hi, rem = frames.pop()
            if backwards and digit > lo:
                digit -= 1
            elif not backwards and digit < hi:
                digit += 1
            else:
                continue
            frames.append((digit, backwards, lo, hi, rem))
            descend(backwards ^ (digit % 2 == 1), rem - digit)
            break
        if not frames:
            return


def _require_nonempty(m: int, n: int, k: int) -> None:
    if m < 1 or n < 1 or not 0 <= k <= (m - 1) * n:
        raise ValueError(
            f"no weight-{k} words of length {n} over an alphabet of size {m}"
        )


def first_word(m: int, n: int, k: int) -> Word:
    """Head of the ordering, in closed form: 0...0 r (m-1)...(m-1).

    With k = q*(m-1) + r, 0 <= r < m-1: the weight is packed into q trailing
    maximal digits plus one remainder digit.  This is the lexicographic
    minimum of the set.
    """
    _require_nonempty(m, n, k)
    dec = weight_decomposition(k, m)
    if dec.q == n:  # k == (m-1)*n, no room for a remainder digit
        return (m - 1,) * n
    return (0,) * (n - dec.q - 1) + (dec.r,) + (m - 1,) * dec.q


def last_word(m: int, n: int, k: int) -> Word:
    """Tail of the ordering, in closed form.

    Let u = min(m-1, k) be the leading digit and split k - u as
    q'*(m-1) + r'.  The tail of the final group is its last element when u
    is even and, because odd groups run backward, its first element when u
    is odd:

        u (m-1)...(m-1) r' 0...0    (u even)
        u 0...0 r' (m-1)...(m-1)    (u odd)
    """
    _require_nonempty(m, n, k)
    if n == 1:
        return (k,)
    u = min(m - 1, k)
    dec = weight_decomposition(k - u, m)
    if dec.q == n - 1:  # tail weight saturates every remaining digit
        return (u,) + (m - 1,) * (n - 1)
    middle = (m - 1,) * dec.q + (dec.r,) + (0,) * (n - 2 - dec.q)
    if u % 2 == 1:
        middle = middle[::-1]
    return (u,) + middle


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of positions where the two words differ (equal lengths only)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def verify_gray(words: Sequence[Word], m: int, n: int, k: int) -> GrayReport:
    """Check a claimed ordering of the weight-k words.

    Passes iff the list is a permutation of the full set and every adjacent
    pair differs in exactly two positions.  Cyclic closure is not required.
    The first failing word or pair is reported; distance 0 or 1 between
    neighbours is impossible for distinct fixed-weight words, so "exactly
    two" is the right test.
    """
    seen: set[Word] = set()
    for i, w in enumerate(words):
        if not (len(w) == n and all(0 <= d <= m - 1 for d in w)):
            return GrayReport(
                False, (i, f"word {format_word(w)} is not a length-{n} word over 0..{m - 1}")
            )
        if weight(w) != k:
            return GrayReport(
                False, (i, f"word {format_word(w, m)} has weight {weight(w)}, expected {k}")
            )
        if w in seen:
            return GrayReport(False, (i, f"duplicate word {format_word(w, m)}"))
        seen.add(w)
    expected = count_fixed_weight(m, n, k)
    if len(words) != expected:
        return GrayReport(
            False, (-1, f"{len(words)} words listed, but the set has {expected}")
        )
    for i in range(len(words) - 1):
        dist = hamming_distance(words[i], words[i + 1])
        if dist != 2:
            return GrayReport(
                False,
                (i, f"adjacent words {format_word(words[i], m)} and "
                    f"{format_word(words[i + 1], m)} differ in {dist} positions, expected 2"),
            )
    return GrayReport(True)

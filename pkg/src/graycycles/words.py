"""Words over {0, ..., m-1}: enumeration, counting, slicing, block machinery.

A word is a plain tuple of ints, leftmost digit first, so lexicographic
order is just tuple order.  All enumeration here is exact and brute-force
friendly: these functions are the ground truth that the fancier generators
in the rest of the package are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]

# Full-list operations refuse to materialize more words than this unless the
# caller raises the cap explicitly.  Streaming generators are exempt.
DEFAULT_MATERIALIZATION_CAP = 10**6

__all__ = [
    "Word",
    "DEFAULT_MATERIALIZATION_CAP",
    "MaterializationLimitError",
    "WeightDecomposition",
    "BlockProfile",
    "weight",
    "is_word",
    "iter_fixed_weight",
    "enumerate_fixed_weight",
    "count_fixed_weight",
    "iter_weight_range",
    "enumerate_weight_range",
    "count_weight_range",
    "s_prefix",
    "s_suffix",
    "weight_decomposition",
    "block_profile",
    "is_cyclic_rotation",
    "witness_non_rotation",
    "format_word",
    "parse_word",
]


class MaterializationLimitError(Exception):
    """A full-list operation would exceed the configured word cap."""


def _check_params(m: int, n: int) -> None:
    if m < 1:
        raise ValueError(f"alphabet size m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"word length n must be >= 0, got {n}")


def weight(word: Sequence[int]) -> int:
    """Sum of the word's digits."""
    return sum(word)


def is_word(word: Sequence[int], m: int, n: int) -> bool:
    """True iff ``word`` has length n and every digit lies in [0, m-1]."""
    return len(word) == n and all(0 <= d <= m - 1 for d in word)


def iter_fixed_weight(m: int, n: int, k: int) -> Iterator[Word]:
    """Yield every length-n word over {0..m-1} with digit sum k.

    Ascending lexicographic order.  Streams with O(n) memory, so it is not
    subject to the materialization cap.  Out-of-range k yields nothing.
    """
    _check_params(m, n)
    if k < 0 or k > (m - 1) * n:
        return
    digits = [0] * n

    def fill(pos: int, rem: int) -> Iterator[Word]:
        if pos == n:
            yield tuple(digits)
            return
        # Digits that leave a completable remainder for the tail positions.
        tail = (m - 1) * (n - pos - 1)
        for d in range(max(0, rem - tail), min(m - 1, rem) + 1):
            digits[pos] = d
            yield from fill(pos + 1, rem - d)

    yield from fill(0, k)


def enumerate_fixed_weight(
    m: int, n: int, k: int, *, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> list[Word]:
    """All weight-k words of length n over {0..m-1}, lexicographically ascending.

    Raises MaterializationLimitError if the set holds more than ``cap`` words.
    """
    total = count_fixed_weight(m, n, k)
    if total > cap:
        raise MaterializationLimitError(
            f"set of weight-{k} words has {total} elements, cap is {cap}"
        )
    return list(iter_fixed_weight(m, n, k))


def count_fixed_weight(m: int, n: int, k: int) -> int:
    """Number of length-n words over {0..m-1} with digit sum k, exactly.

    Computed by the length recurrence (append one digit at a time) with a
    sliding-window prefix sum; plain Python ints, so no overflow.
    """
    _check_params(m, n)
    if k < 0 or k > (m - 1) * n:
        return 0
    row = [1]  # counts by weight for length 0
    for length in range(1, n + 1):
        prefix = [0] * (len(row) + 1)
        for i, c in enumerate(row):
            prefix[i + 1] = prefix[i] + c
        row = [
            prefix[min(kk, len(row) - 1) + 1] - prefix[max(0, kk - (m - 1))]
            for kk in range((m - 1) * length + 1)
        ]
    return row[k]


def iter_weight_range(m: int, n: int, p: int, q: int) -> Iterator[Word]:
    """Yield every length-n word whose weight lies in [p, q], lexicographically.

    Requires 0 <= p < q <= (m-1)*n.
    """
    _check_params(m, n)
    if not 0 <= p < q <= (m - 1) * n:
        raise ValueError(
            f"weight range requires 0 <= p < q <= (m-1)*n, got p={p}, q={q}"
        )
    digits = [0] * n

    def fill(pos: int, acc: int) -> Iterator[Word]:
        if pos == n:
            yield tuple(digits)
            return
        tail = (m - 1) * (n - pos - 1)
        for d in range(m):
            # Can the remaining positions still land the total inside [p, q]?
            if acc + d > q or acc + d + tail < p:
                continue
            digits[pos] = d
            yield from fill(pos + 1, acc + d)

    yield from fill(0, 0)


def enumerate_weight_range(
    m: int, n: int, p: int, q: int, *, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> list[Word]:
    """All words with weight in [p, q], ascending; capped like the fixed case."""
    total = count_weight_range(m, n, p, q)
    if total > cap:
        raise MaterializationLimitError(
            f"set of weight-[{p},{q}] words has {total} elements, cap is {cap}"
        )
    return list(iter_weight_range(m, n, p, q))


def count_weight_range(m: int, n: int, p: int, q: int) -> int:
    """Number of length-n words with weight in [p, q], exactly."""
    _check_params(m, n)
    if not 0 <= p < q <= (m - 1) * n:
        raise ValueError(
            f"weight range requires 0 <= p < q <= (m-1)*n, got p={p}, q={q}"
        )
    return sum(count_fixed_weight(m, n, k) for k in range(p, q + 1))


def s_prefix(word: Sequence[int], s: int) -> Word:
    """First s digits of the word; s may run from 0 to the full length."""
    if not 0 <= s <= len(word):
        raise ValueError(f"prefix length {s} out of range for word of length {len(word)}")
    return tuple(word[:s])


def s_suffix(word: Sequence[int], s: int) -> Word:
    """Last s digits of the word; s may run from 0 to the full length."""
    if not 0 <= s <= len(word):
        raise ValueError(f"suffix length {s} out of range for word of length {len(word)}")
    return tuple(word[len(word) - s:])


@dataclass(frozen=True)
class WeightDecomposition:
    """k written as q*(m-1) + r with 0 <= r < m-1."""

    q: int
    r: int


def weight_decomposition(k: int, m: int) -> WeightDecomposition:
    """Split k as q*(m-1) + r with 0 <= r < m-1.

    For m == 1 there is no remainder range; only k == 0 decomposes, as (0, 0).
    """
    if m < 1:
        raise ValueError(f"alphabet size m must be >= 1, got {m}")
    if k < 0:
        raise ValueError(f"weight must be nonnegative, got {k}")
    if m == 1:
        if k != 0:
            raise ValueError(f"weight {k} impossible over a one-letter alphabet")
        return WeightDecomposition(0, 0)
    return WeightDecomposition(k // (m - 1), k % (m - 1))


@dataclass(frozen=True)
class BlockProfile:
    """Block weights of a word cut into consecutive blocks of length d."""

    d: int
    weights: tuple[int, ...]


def block_profile(word: Sequence[int], s: int) -> BlockProfile:
    """Cut the word into n/gcd(n,s) blocks of length gcd(n,s) and sum each.

    Rotating a word by s steps permutes digits only within this block
    structure, so the multiset of block weights (up to rotation of the block
    sequence) is invariant under s-rotations.  That invariant is what the
    non-existence witness below exploits.
    """
    n = len(word)
    if not 1 <= s <= n - 1:
        raise ValueError(f"overlap length s={s} out of range for n={n}")
    d = math.gcd(n, s)
    weights = tuple(sum(word[i:i + d]) for i in range(0, n, d))
    return BlockProfile(d, weights)


def is_cyclic_rotation(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff b equals a rotated by some offset.

    Sequences of different lengths are never rotations; two empty sequences
    are rotations of each other.
    """
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        return False
    if not ta:
        return True
    return any(tb == ta[i:] + ta[:i] for i in range(len(ta)))


def witness_non_rotation(m: int, n: int, k: int, s: int) -> tuple[Word, Word]:
    """Two weight-k words whose block profiles are not rotations of each other.

    Defined when n - s = gcd(n, s) and 1 < k < (m-1)*n - 1.  The first word
    packs its weight to the right (zeros, the remainder digit, then maximal
    digits); the second moves one unit of weight from the last digit to the
    first.  That shifts the first and last block weights by +1/-1, and within
    the stated weight window the two profiles can never be aligned by a
    rotation.  Since s-rotations preserve the profile up to rotation, the two
    words can never reach each other in the transition digraph.
    """
    if not 1 <= s <= n - 1:
        raise ValueError(f"overlap length s={s} out of range for n={n}")
    if n - s != math.gcd(n, s):
        raise ValueError(f"witness requires n-s = gcd(n,s); got n={n}, s={s}")
    if not 1 < k < (m - 1) * n - 1:
        raise ValueError(f"witness requires 1 < k < (m-1)*n - 1; got k={k}")
    dec = weight_decomposition(k, m)
    first = [0] * (n - dec.q - 1) + [dec.r] + [m - 1] * dec.q
    second = list(first)
    second[0] += 1
    second[-1] -= 1
    return tuple(first), tuple(second)


def format_word(word: Sequence[int], m: int | None = None) -> str:
    """Text form of a word: digits concatenated, or comma-separated values.

    Alphabets of size at most 10 concatenate single digits ("0122"); larger
    alphabets separate decimal values with commas ("0,1,11,2").  When m is
    not supplied the form is inferred from the digits present.
    """
    wide = (m > 10) if m is not None else any(d > 9 for d in word)
    if wide:
        return ",".join(str(d) for d in word)
    return "".join(str(d) for d in word)


def parse_word(text: str) -> Word:
    """Inverse of format_word; accepts both text forms."""
    stripped = text.strip()
    if not stripped:
        return ()
    if "," in stripped:
        parts = [p.strip() for p in stripped.split(",")]
    else:
        parts = list(stripped)
    try:
        digits = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse word from {text!r}") from None
    if any(d < 0 for d in digits):
        raise ValueError(f"cannot parse word from {text!r}")
    return digits

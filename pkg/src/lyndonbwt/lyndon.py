"""Lyndon words, Duval's factorization and least rotations.

Positions in :class:`FactorSpan` are 1-based and inclusive, matching the
positional conventions used throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class FactorSpan:
    start: int
    end: int

    def __len__(self):
        return self.end - self.start + 1

    def of(self, text: bytes) -> bytes:
        return text[self.start - 1:self.end]


@dataclass(frozen=True)
class Factorization:
    spans: tuple[FactorSpan, ...]

    @property
    def k(self) -> int:
        return len(self.spans)

    def __iter__(self):
        return iter(self.spans)

    def __len__(self):
        return len(self.spans)

    def __getitem__(self, i):
        return self.spans[i]

    def words(self, text: bytes) -> list[bytes]:
        return [s.of(text) for s in self.spans]

    @property
    def max_len(self) -> int:
        return max((len(s) for s in self.spans), default=0)


class Counter:
    """Tally of symbol comparisons, passed to instrumented routines."""

    def __init__(self):
        self.comparisons = 0


def iter_factors(text: Sequence[int], counter: Counter | None = None) -> Iterator[FactorSpan]:
    """Yield the Lyndon factors of ``text`` left to right as they are fixed.

    Duval's three-variable algorithm. Each factor is emitted as soon as the
    scan proves it final, so a consumer can start working on ``L_1`` before
    the rest of the text has been examined.
    """
    n = len(text)
    k = 0
    while k < n:
        # text[k:j] is a prefix of (u^r)u' with u Lyndon, |u| = j - i
        i, j = k, k + 1
        while j < n:
            a, b = text[i], text[j]
            if counter is not None:
                counter.comparisons += 1
            if a < b:
                i = k
            elif a == b:
                i += 1
            else:
                break
            j += 1
        period = j - i
        while k <= i:
            yield FactorSpan(k + 1, k + period)
            k += period


def duval_factorize(text: Sequence[int], counter: Counter | None = None) -> Factorization:
    return Factorization(tuple(iter_factors(text, counter)))


def is_lyndon(word: Sequence[int]) -> bool:
    """True iff ``word`` is strictly smaller than each of its proper suffixes.

    For nonempty words this is equivalent to being primitive and strictly
    smaller than every proper rotation.
    """
    word = bytes(word)
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def least_rotation(word: Sequence[int]) -> tuple[bytes, int]:
    """Return ``(rotation, shift)`` for the lexicographically least rotation.

    Booth's failure-function scan over the doubled word. On ties (periodic
    words) the smallest shift is reported.
    """
    word = bytes(word)
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no rotation")
    s = word + word
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = s[j]
        i = fail[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != s[k + i + 1]:  # i == -1
            if c < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    # Booth may land on a later copy of the same rotation in periodic words
    k %= n
    p = _period(word)
    if n % p == 0:
        k %= p
    return word[k:] + word[:k], k


def _period(word: bytes) -> int:
    # smallest p with word[i] == word[i + p] (KMP border)
    n = len(word)
    border = [0] * (n + 1)
    border[0] = -1
    b = -1
    for i in range(n):
        while b >= 0 and word[b] != word[i]:
            b = border[b]
        b += 1
        border[i + 1] = b
    return n - border[n]

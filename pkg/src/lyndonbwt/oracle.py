"""Brute-force references: direct suffix sorting, rotation BWT, inversion.

Everything here is quadratic or worse on purpose. These functions are the
ground truth the fast path is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass

from .text import SENTINEL


class MalformedBwt(ValueError):
    pass


@dataclass(frozen=True)
class RotationBwt:
    l: bytes
    i: int  # 1-based row of the original word


def naive_sa(text: bytes) -> list:
    text = bytes(text)
    n = len(text)
    # slicing past the end gives b"", which sorts first: the "$" suffix
    return [i + 1 for i in sorted(range(n + 1), key=lambda i: text[i:])]


def naive_bwt(text: bytes) -> bytes:
    text = bytes(text)
    return bytes(text[p - 2] if p > 1 else SENTINEL for p in naive_sa(text))


def rotation_bwt(word: bytes) -> RotationBwt:
    word = bytes(word)
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no rotation")
    order = sorted(range(n), key=lambda i: (word[i:] + word[:i], i))
    return RotationBwt(bytes(word[i - 1] for i in order), order.index(0) + 1)


def sorted_rotation_starts(word: bytes) -> list:
    """1-based start positions of the rotations of ``word`` in sorted order."""
    word = bytes(word)
    n = len(word)
    return [i + 1 for i in sorted(range(n), key=lambda i: (word[i:] + word[:i], i))]


def sorted_suffix_starts(word: bytes) -> list:
    """1-based starts of the nonempty suffixes of ``word + $`` in sorted order."""
    return naive_sa(word)[1:]


def inverse_bwt(bwt: bytes) -> bytes:
    """Recover the text from its sentinel-terminated BWT by the LF walk."""
    bwt = bytes(bwt)
    if bwt.count(SENTINEL) != 1:
        raise MalformedBwt("not a sentinel-terminated bwt")
    n = len(bwt)
    counts = [0] * 256
    occ = [0] * n
    for r, c in enumerate(bwt):
        occ[r] = counts[c]
        counts[c] += 1
    smaller = [0] * 256
    acc = 0
    for c in range(256):
        smaller[c] = acc
        acc += counts[c]
    out = bytearray()
    row = 0  # row 0 holds the "$" suffix
    seen = 0
    while bwt[row] != SENTINEL:
        c = bwt[row]
        out.append(c)
        row = smaller[c] + occ[row]
        seen += 1
        if seen >= n:
            break
    if seen != n - 1 or bwt[row] != SENTINEL:
        raise MalformedBwt("malformed bwt")
    out.reverse()
    return bytes(out)


def local_order(text: bytes, first: int, last: int, i: int, j: int) -> int:
    """Sign of the comparison of the local suffixes at ``i`` and ``j``."""
    u, v = text[i - 1:last], text[j - 1:last]
    return (u > v) - (u < v)


def global_order(text: bytes, i: int, j: int) -> int:
    u, v = text[i - 1:], text[j - 1:]
    return (u > v) - (u < v)


def compatibility_check(text: bytes, first: int, last: int) -> bool:
    """Does sorting the suffixes of ``text[first..last]`` agree with sorting
    the corresponding suffixes of the whole text? Positions are 1-based.

    Both orders are strict total orders on the window's positions, so it is
    enough to sort by local suffix and compare neighbours globally.
    """
    text = bytes(text)
    by_local = sorted(range(first, last + 1), key=lambda i: text[i - 1:last])
    return all(text[i - 1:] < text[j - 1:] for i, j in zip(by_local, by_local[1:]))


def compatibility_check_pairs(text: bytes, first: int, last: int) -> bool:
    """All-pairs form of :func:`compatibility_check`."""
    text = bytes(text)
    for i in range(first, last + 1):
        for j in range(i + 1, last + 1):
            if local_order(text, first, last, i, j) != global_order(text, i, j):
                return False
    return True

"""Suffix array and BWT of a single block followed by the sentinel.

The sentinel is virtual: a block ``text[span]`` is sorted as if ``$`` were
appended, and the bare-``$`` suffix is encoded by position ``span.end + 1``.
All positions are 1-based and already shifted to text coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .lyndon import FactorSpan
from .text import SENTINEL

# Below this length a plain comparison sort beats the numpy setup cost.
DOUBLING_THRESHOLD = 512

SuffixSorter = Callable[[bytes], list]


@dataclass(frozen=True)
class BlockSort:
    span: FactorSpan
    sa: list
    bwt: bytes
    sentinel_row: int  # 0-based row whose bwt symbol is the sentinel

    def __len__(self):
        return len(self.sa)


def comparison_sort(block: bytes) -> list:
    """0-based suffix order of ``block + $``; the last entry is never compared."""
    m = len(block)
    order = sorted(range(m), key=lambda i: block[i:])
    return [m] + order


def doubling_sort(block: bytes) -> list:
    """Prefix-doubling suffix sort of ``block + $`` in O(m log m) numpy passes."""
    m = len(block)
    n = m + 1
    rank = np.zeros(n, dtype=np.int64)
    rank[:m] = np.frombuffer(block, dtype=np.uint8)
    h = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - h] = rank[h:]
        order = np.lexsort((second, rank))
        r, s = rank[order], second[order]
        bump = np.empty(n, dtype=np.int64)
        bump[0] = 0
        bump[1:] = (r[1:] != r[:-1]) | (s[1:] != s[:-1])
        new = np.empty(n, dtype=np.int64)
        new[order] = np.cumsum(bump)
        rank = new
        if rank[order[-1]] == n - 1:
            break
        h *= 2
    return order.tolist()


def default_sorter(block: bytes) -> list:
    if len(block) < DOUBLING_THRESHOLD:
        return comparison_sort(block)
    return doubling_sort(block)


def sort_block(text: bytes, span: FactorSpan, sorter: SuffixSorter | None = None) -> BlockSort:
    block = span.of(text)
    local = (sorter or default_sorter)(block)
    shift = span.start
    sa = [p + shift for p in local]
    bwt = block_bwt_from_sa(text, span, sa)
    return BlockSort(span, sa, bwt, bwt.index(SENTINEL))


def block_bwt_from_sa(text: bytes, span: FactorSpan, sa: list) -> bytes:
    m = len(span)
    if len(sa) != m + 1 or set(sa) != set(range(span.start, span.end + 2)):
        raise ValueError("invalid suffix array")
    out = bytearray(m + 1)
    for row, p in enumerate(sa):
        out[row] = text[p - 2] if p > span.start else SENTINEL
    return bytes(out)

"""Gap arrays and the merge of a block transform into the accumulated one.

Arrays here are 0-based Python lists. ``a[j]`` belongs to the block suffix
at local position ``j + 1`` (position-indexed), ``g[r]`` to the block row
``r`` (rank-indexed).

Row 0 of the previous transform is its bare ``$`` suffix. In the longer
text that row stands for the suffix starting at the block's first symbol,
so it is fused with the block row holding the block's full suffix: the
fused row keeps the previous symbol and the previous position.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lyndon import FactorSpan
from .rankdict import RankDict
from .text import SENTINEL


class MergeError(ValueError):
    pass


class Tally:
    """Work units: symbols read or written, plus one per rank query."""

    def __init__(self):
        self.count = 0

    def add(self, n: int):
        self.count += n


@dataclass(frozen=True)
class MergedTransform:
    bwt: bytes
    sa: list | None = None
    start: int = 1  # text position of the first symbol covered

    @property
    def length(self) -> int:
        return len(self.bwt)

    @property
    def sentinel_row(self) -> int:
        return self.bwt.index(SENTINEL)

    @property
    def span(self) -> FactorSpan:
        """Covered text positions; ``end < start`` when nothing is covered."""
        return FactorSpan(self.start, self.start + len(self.bwt) - 2)

    @classmethod
    def empty(cls, start: int = 1, with_sa: bool = True) -> "MergedTransform":
        return cls(bytes([SENTINEL]), [start] if with_sa else None, start)

    @classmethod
    def from_block(cls, block, with_sa: bool = True) -> "MergedTransform":
        return cls(block.bwt, list(block.sa) if with_sa else None, block.span.start)


def rows_by_position(bwt: bytes, step: int = 64) -> list:
    """Row of every suffix, indexed by local position - 1, via the LF walk.

    Works from the BWT alone, so it also serves transforms kept without SA.
    """
    d = RankDict(bwt, step)
    n = len(bwt)
    rows = [0] * n
    row = 0  # the bare "$" suffix, local position n
    for pos in range(n - 1, -1, -1):
        rows[pos] = row
        c = bwt[row]
        if c == SENTINEL:
            if pos != 0:
                raise MergeError("malformed bwt")
            break
        row = d.count_smaller(c) + d.rank(c, row)
    return rows


def compute_a(prev: RankDict, text: bytes, span: FactorSpan, rows: list | None = None,
              tally: Tally | None = None) -> list:
    """Counts of previous suffixes below each block suffix, by position.

    ``rows`` (from :func:`rows_by_position` or the block SA) is needed only
    when the block spans more than one Lyndon factor: then some block
    suffixes sort below the block's full suffix, and those precede every
    previous suffix, so their count is 0 just like for the bare ``$``.
    Without ``rows`` the block is taken to be a single Lyndon word.
    """
    m = len(span)
    a = [0] * (m + 1)
    if rows is not None and len(rows) != m + 1:
        raise MergeError("A/SA length mismatch")
    first_row = rows[0] if rows is not None else None
    off = span.start - 1
    nxt = 0
    for j in range(m - 1, 0, -1):
        if first_row is not None and rows[j] < first_row:
            nxt = 0
        else:
            c = text[off + j]
            nxt = prev.count_smaller(c) + prev.rank(c, nxt)
            if tally is not None:
                tally.add(1)
        a[j] = nxt
    return a


def compute_g(a: list, block) -> list:
    """Reorder ``a`` into block row order: ``g[r] = a[sa[r] - start]``."""
    sa = block.sa
    if sa is None:
        rows = rows_by_position(block.bwt)
        if len(rows) != len(a):
            raise MergeError("A/SA length mismatch")
        g = [0] * len(a)
        for pos, r in enumerate(rows):
            g[r] = a[pos]
        return g
    if len(sa) != len(a):
        raise MergeError("A/SA length mismatch")
    start = block.span.start
    return [a[p - start] for p in sa]


def merge_transforms(prev: MergedTransform, block, g: list,
                     tally: Tally | None = None) -> MergedTransform:
    """Interleave the block rows into ``prev``.

    Block row ``r`` is preceded by exactly ``g[r]`` rows of ``prev``, counting
    the fused row; both sides keep their internal order.
    """
    n_prev = len(prev.bwt)
    rows = len(block.bwt)
    if len(g) != rows:
        raise MergeError("inconsistent gap counts")
    if prev.start + n_prev - 1 != block.span.start:
        raise MergeError("block does not follow the accumulated text")
    with_sa = prev.sa is not None
    if with_sa and block.sa is None:
        raise MergeError("block has no suffix array")
    fuse = block.sentinel_row

    bwt_parts = []
    sa_parts = []
    p = 0  # prev rows consumed
    last = 0
    for r in range(rows):
        want = g[r]
        if want < last or want > n_prev:
            raise MergeError("inconsistent gap counts")
        last = want
        if r == fuse:
            if p != 0 or want != 0:
                raise MergeError("inconsistent gap counts")
            bwt_parts.append(prev.bwt[:1])
            if with_sa:
                sa_parts.append(prev.sa[:1])
            p = 1
            continue
        if want > p:
            if p == 0:
                # the sentinel row of prev may only enter fused
                raise MergeError("inconsistent gap counts")
            bwt_parts.append(prev.bwt[p:want])
            if with_sa:
                sa_parts.append(prev.sa[p:want])
            p = want
        bwt_parts.append(block.bwt[r:r + 1])
        if with_sa:
            sa_parts.append(block.sa[r:r + 1])
    bwt_parts.append(prev.bwt[p:])
    bwt = b"".join(bwt_parts)
    sa = None
    if with_sa:
        sa_parts.append(prev.sa[p:])
        sa = [x for part in sa_parts for x in part]
    if tally is not None:
        tally.add(len(bwt))
    return MergedTransform(bwt, sa, prev.start)

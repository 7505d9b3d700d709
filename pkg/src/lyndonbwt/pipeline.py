"""Incremental SA/BWT construction over the Lyndon factorization.

Each step sorts one block (one or more consecutive Lyndon factors) on its
own, counts how many already-sorted suffixes fall below each block suffix,
and interleaves the block into the accumulated transform. Blocks never need
re-sorting once merged, which is what makes the online and group-parallel
modes possible.
"""
from __future__ import annotations

import functools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .blocksort import BlockSort, SuffixSorter, sort_block
from .lyndon import FactorSpan, Factorization, duval_factorize
from .merge import (
    MergedTransform,
    MergeError,
    Tally,
    compute_a,
    compute_g,
    merge_transforms,
    rows_by_position,
)
from .rankdict import RankDict
from .text import as_text


@dataclass(frozen=True)
class PipelineConfig:
    chunk_factors: int = 1
    emit_sa: bool = True
    parallel_groups: int = 1
    rank_checkpoint: int = 64
    sorter: SuffixSorter | None = None

    def __post_init__(self):
        for name in ("chunk_factors", "parallel_groups", "rank_checkpoint"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass
class PipelineStats:
    k: int = 0
    max_factor_len: int = 0
    iterations: int = 0
    block_lengths: list = field(default_factory=list)
    per_iteration_work: list = field(default_factory=list)
    elapsed_ns: int = 0

    @property
    def total_work(self) -> int:
        return sum(self.per_iteration_work)

    @property
    def prefix_lengths(self) -> list:
        out, acc = [], 0
        for m in self.block_lengths:
            acc += m
            out.append(acc)
        return out


@dataclass(frozen=True)
class Run:
    """A finished pipeline run together with its instrumentation."""

    transform: MergedTransform
    factorization: Factorization
    stats: PipelineStats


DEFAULT = PipelineConfig()


def chunk(factors: Factorization | Iterable[FactorSpan], size: int) -> list:
    """Group consecutive factors into blocks of ``size`` factors."""
    spans = list(factors)
    return [FactorSpan(spans[i].start, spans[min(i + size, len(spans)) - 1].end)
            for i in range(0, len(spans), size)]


def extend(acc: MergedTransform, text: bytes, block: BlockSort, config: PipelineConfig = DEFAULT,
           tally: Tally | None = None, single_factor: bool = True) -> MergedTransform:
    """One iteration: merge ``block`` into ``acc``."""
    prev = RankDict(acc.bwt, config.rank_checkpoint)
    if tally is not None:
        tally.add(len(acc.bwt))
    rows = None
    if not single_factor:
        rows = [0] * len(block.sa)
        for r, p in enumerate(block.sa):
            rows[p - block.span.start] = r
    a = compute_a(prev, text, block.span, rows, tally)
    if tally is not None:
        tally.add(len(a))
    g = compute_g(a, block)
    return merge_transforms(acc, block, g, tally)


def bwt_lynd(text, config: PipelineConfig = DEFAULT) -> MergedTransform:
    return run(text, config).transform


def run(text, config: PipelineConfig = DEFAULT) -> Run:
    """Build the transform of ``text + $`` and record per-iteration work."""
    text = as_text(text)
    t0 = time.perf_counter_ns()
    fact = duval_factorize(text)
    stats = PipelineStats(k=fact.k, max_factor_len=fact.max_len)
    if config.parallel_groups > 1 and fact.k > 1:
        acc = _run_groups(text, fact, config, stats)
    else:
        acc = _fold(text, chunk(fact, config.chunk_factors), config, stats,
                    MergedTransform.empty(1, config.emit_sa))
    stats.elapsed_ns = time.perf_counter_ns() - t0
    return Run(acc, fact, stats)


def _fold(text, blocks, config, stats, acc, sorted_blocks=None):
    single = config.chunk_factors == 1
    for i, span in enumerate(blocks):
        block = sorted_blocks[i] if sorted_blocks else sort_block(text, span, config.sorter)
        tally = Tally()
        tally.add(len(span))
        acc = extend(acc, text, block, config, tally, single_factor=single)
        stats.iterations += 1
        stats.block_lengths.append(len(span))
        stats.per_iteration_work.append(tally.count)
    return acc


@functools.lru_cache(maxsize=None)
def _pool(workers: int) -> ThreadPoolExecutor:
    return ThreadPoolExecutor(max_workers=workers, thread_name_prefix="lyndonbwt")


def _run_groups(text, fact, config, stats):
    # split the factors into contiguous groups and build each group's
    # transform independently; groups are then combined pairwise
    k = fact.k
    n_groups = min(config.parallel_groups, k)
    bounds = [round(i * k / n_groups) for i in range(n_groups + 1)]
    groups = [fact.spans[bounds[i]:bounds[i + 1]] for i in range(n_groups)]

    def build(spans):
        local = PipelineStats()
        blocks = chunk(spans, config.chunk_factors)
        sorted_blocks = [sort_block(text, b, config.sorter) for b in blocks]
        acc = MergedTransform.empty(spans[0].start, config.emit_sa)
        return _fold(text, blocks, config, local, acc, sorted_blocks), local

    results = list(_pool(n_groups).map(build, groups))
    for _, local in results:
        stats.iterations += local.iterations
        stats.block_lengths += local.block_lengths
        stats.per_iteration_work += local.per_iteration_work

    boundaries = {s.start for s in fact.spans}
    level = [t for t, _ in results]
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            tally = Tally()
            nxt.append(merge_groups(text, level[i], level[i + 1], config, boundaries, tally))
            stats.per_iteration_work.append(tally.count)
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def merge_groups(text, left: MergedTransform, right: MergedTransform,
                 config: PipelineConfig = DEFAULT, boundaries=None,
                 tally: Tally | None = None) -> MergedTransform:
    """Merge the transforms of two adjacent runs of Lyndon factors.

    ``right`` is the transform of its own run followed by ``$`` (positions in
    text coordinates). ``boundaries`` is the set of factor start positions;
    it is recomputed from ``text`` when not given.
    """
    text = as_text(text)
    rspan = right.span
    if len(right.bwt) == 1:
        return left
    if left.start + len(left.bwt) - 1 != rspan.start:
        raise MergeError("groups are not adjacent")
    if boundaries is None:
        boundaries = {s.start for s in duval_factorize(text)}
    if rspan.start not in boundaries or (rspan.end < len(text) and rspan.end + 1 not in boundaries):
        raise MergeError("group cut inside a Lyndon factor")
    if left.sa is not None and right.sa is None:
        raise MergeError("block has no suffix array")
    if right.sa is not None:
        rows = [0] * len(right.sa)
        for r, p in enumerate(right.sa):
            rows[p - rspan.start] = r
    else:
        rows = rows_by_position(right.bwt, config.rank_checkpoint)
    prev = RankDict(left.bwt, config.rank_checkpoint)
    a = compute_a(prev, text, rspan, rows, tally)
    g = [0] * len(a)
    for pos, r in enumerate(rows):
        g[r] = a[pos]
    sa = right.sa if left.sa is not None else None
    block = _AsBlock(right.bwt, sa, rspan, right.sentinel_row)
    return merge_transforms(left, block, g, tally)


@dataclass(frozen=True)
class _AsBlock:
    bwt: bytes
    sa: list | None
    span: FactorSpan
    sentinel_row: int


def bwt_lynd_online(factors: Iterable[FactorSpan], text, config: PipelineConfig = DEFAULT
                    ) -> Iterator[MergedTransform]:
    """Consume factors one at a time, yielding the transform after each.

    The snapshot after factor ``i`` is the transform of ``L_1 ... L_i + $``.
    ``text`` only needs to cover the factors received so far.
    """
    text = as_text(text)
    acc = MergedTransform.empty(1, config.emit_sa)
    expected = 1
    for span in factors:
        if span.start != expected or span.end < span.start:
            raise MergeError("non-contiguous factor stream")
        expected = span.end + 1
        block = sort_block(text, span, config.sorter)
        acc = extend(acc, text, block, config)
        yield acc


def collect_stats(run_: Run) -> PipelineStats:
    return run_.stats

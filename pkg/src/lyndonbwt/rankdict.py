"""Occurrence counting over a BWT sequence: the ``C`` and ``rank`` functions.

Counts are sampled every ``step`` positions; a query adds the sample to a
``bytes.count`` over the remainder of the block, so a query touches at most
``step`` symbols.
"""
from __future__ import annotations

import numpy as np

from .text import SENTINEL

ALPHABET = 256  # the sentinel occupies slot 0


class RankDict:
    def __init__(self, sequence: bytes = b"", step: int = 64):
        if step < 1:
            raise ValueError("checkpoint step must be >= 1")
        self.sequence = bytes(sequence)
        self.step = step
        self.checkpoints = _checkpoints(self.sequence, step)
        self._set_totals()

    def _set_totals(self):
        self.totals = _counts(self.sequence)
        self._smaller = np.concatenate(([0], np.cumsum(self.totals)[:-1]))

    def __len__(self):
        return len(self.sequence)

    def count_smaller(self, x: int) -> int:
        """Number of symbols in the sequence strictly smaller than ``x``."""
        return int(self._smaller[x])

    def rank(self, x: int, t: int) -> int:
        """Occurrences of ``x`` among the first ``t`` symbols."""
        if not 0 <= t <= len(self.sequence):
            raise IndexError("rank position out of bounds")
        b = t // self.step
        base = b * self.step
        return int(self.checkpoints[b, x]) + self.sequence.count(x, base, t)

    def append(self, suffix: bytes) -> "RankDict":
        """A new dictionary over ``sequence + suffix``; ``self`` is unchanged."""
        if not suffix:
            return self
        old = len(self.sequence)
        seq = self.sequence + bytes(suffix)
        new = RankDict.__new__(RankDict)
        new.sequence = seq
        new.step = self.step
        # reuse every checkpoint that lies fully inside the old sequence
        keep = old // self.step
        base = self.checkpoints[keep]
        tail = _checkpoints(seq[keep * self.step:], self.step)
        new.checkpoints = np.vstack((self.checkpoints[:keep], tail + base))
        new._set_totals()
        return new


def build(sequence: bytes, step: int = 64) -> RankDict:
    return RankDict(sequence, step)


def _counts(seq: bytes) -> np.ndarray:
    return np.bincount(np.frombuffer(seq, dtype=np.uint8), minlength=ALPHABET).astype(np.int64)


def _checkpoints(seq: bytes, step: int) -> np.ndarray:
    # row b holds the counts of seq[:b * step]
    nblocks = len(seq) // step
    out = np.zeros((nblocks + 1, ALPHABET), dtype=np.int64)
    if nblocks:
        body = np.frombuffer(seq, dtype=np.uint8, count=nblocks * step).astype(np.int64)
        idx = np.repeat(np.arange(nblocks, dtype=np.int64), step) * ALPHABET + body
        per = np.bincount(idx, minlength=nblocks * ALPHABET).reshape(nblocks, ALPHABET)
        np.cumsum(per, axis=0, out=out[1:])
    return out


__all__ = ["RankDict", "build", "SENTINEL"]

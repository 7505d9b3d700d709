"""Suffix array and Burrows-Wheeler transform built incrementally over the
Lyndon factorization of a byte text."""
from .blocksort import BlockSort, block_bwt_from_sa, sort_block
from .lyndon import FactorSpan, Factorization, duval_factorize, is_lyndon, iter_factors, least_rotation
from .merge import MergedTransform, compute_a, compute_g, merge_transforms
from .oracle import compatibility_check, inverse_bwt, naive_bwt, naive_sa, rotation_bwt
from .pipeline import PipelineConfig, PipelineStats, bwt_lynd, bwt_lynd_online, collect_stats, merge_groups, run
from .rankdict import RankDict
from .text import SENTINEL, parse, render

__all__ = [
    "BlockSort", "FactorSpan", "Factorization", "MergedTransform", "PipelineConfig",
    "PipelineStats", "RankDict", "SENTINEL", "block_bwt_from_sa", "bwt_lynd", "bwt_lynd_online",
    "collect_stats", "compatibility_check", "compute_a", "compute_g", "duval_factorize",
    "inverse_bwt", "is_lyndon", "iter_factors", "least_rotation", "merge_groups",
    "merge_transforms", "naive_bwt", "naive_sa", "parse", "render", "rotation_bwt", "run",
    "sort_block",
]

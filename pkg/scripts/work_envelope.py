"""Measure pipeline work against k^2 M on adversarial and random inputs.

Usage: python scripts/work_envelope.py [--sizes 256,512,1024,2048]
"""
import argparse
import random

from lyndonbwt.pipeline import PipelineConfig, run


def non_increasing(n):
    return bytes(255 - i * 255 // n for i in range(n))


def periodic(n):
    return (b"ab" * n)[:n]


def uniform(n, seed=0):
    rng = random.Random(seed)
    return bytes(rng.randint(1, 255) for _ in range(n))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="256,512,1024,2048")
    ap.add_argument("--chunk-factors", type=int, default=1)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    config = PipelineConfig(chunk_factors=args.chunk_factors, emit_sa=False)
    print("input,n,k,M,total_work,work/k^2M,max work/prefix,time_ms")
    for name, gen in [("non-increasing", non_increasing), ("periodic", periodic), ("uniform", uniform)]:
        for n in sizes:
            s = run(gen(n), config).stats
            ratio = s.total_work / (s.k ** 2 * s.max_factor_len)
            per = max(w / p for w, p in zip(s.per_iteration_work, s.prefix_lengths))
            print(f"{name},{n},{s.k},{s.max_factor_len},{s.total_work},{ratio:.3f},{per:.2f},"
                  f"{s.elapsed_ns / 1e6:.1f}")


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 malformed transform.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass

from . import oracle
from .lyndon import duval_factorize
from .pipeline import PipelineConfig, run
from .text import SENTINEL, TextError, as_text

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_MALFORMED = 0, 1, 2, 3


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class OutputEncoding:
    mode: str = "raw"  # raw | ascii | hex
    sentinel_policy: str = "indexed"  # escaped | indexed

    def __post_init__(self):
        if self.mode not in ("raw", "ascii", "hex"):
            raise ValueError(f"unknown encoding {self.mode!r}")
        if self.sentinel_policy not in ("escaped", "indexed"):
            raise ValueError(f"unknown sentinel policy {self.sentinel_policy!r}")

    def encode(self, bwt: bytes) -> bytes:
        if self.sentinel_policy == "indexed":
            row = bwt.index(SENTINEL)
            header = f"sentinel_row={row + 1}\n".encode()
            body = bwt[:row] + bwt[row + 1:]
        else:
            header, body = b"", bwt
        if self.mode == "ascii":
            if b"$" in bwt:
                raise EncodingError("ascii encoding needs input without '$'")
            body = body.replace(b"\x00", b"$")
        elif self.mode == "hex":
            body = body.hex().encode()
        return header + body

    def decode(self, data: bytes) -> bytes:
        row = None
        if self.sentinel_policy == "indexed":
            head, sep, data = data.partition(b"\n")
            if not sep or not head.startswith(b"sentinel_row="):
                raise oracle.MalformedBwt("missing sentinel_row header")
            try:
                row = int(head[len(b"sentinel_row="):]) - 1
            except ValueError:
                raise oracle.MalformedBwt("bad sentinel_row header") from None
        if self.mode == "hex":
            try:
                data = bytes.fromhex(data.decode("ascii").strip())
            except ValueError:
                raise oracle.MalformedBwt("bad hex payload") from None
        elif self.mode == "ascii":
            if self.sentinel_policy == "escaped":
                data = data.replace(b"$", b"\x00")
        if row is not None:
            if SENTINEL in data or not 0 <= row <= len(data):
                raise oracle.MalformedBwt("not a sentinel-terminated bwt")
            data = data[:row] + b"\x00" + data[row:]
        return data


def read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _fail(code: int, msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _encoding(args) -> OutputEncoding:
    policy = args.sentinel or ("escaped" if args.encoding == "ascii" else "indexed")
    return OutputEncoding(args.encoding, policy)


def cmd_factorize(args) -> int:
    text = read_input(args.file)
    out = []
    for span in duval_factorize(text):
        out.append(f"{span.start}\t{span.end}\t".encode() + span.of(text) + b"\n")
    _write(b"".join(out))
    return EXIT_OK


def transform(text: bytes, method: str, config: PipelineConfig):
    if method == "naive":
        return oracle.naive_bwt(text), (oracle.naive_sa(text) if config.emit_sa else None)
    t = run(text, config).transform
    return t.bwt, t.sa


def cmd_bwt(args) -> int:
    enc = _encoding(args)
    text = as_text(read_input(args.file))
    config = PipelineConfig(chunk_factors=args.chunk_factors, parallel_groups=args.parallel,
                            emit_sa=args.emit_sa or args.sa_out is not None)
    bwt, sa = transform(text, args.method, config)
    payload = enc.encode(bwt)
    if sa is not None:
        lines = "".join(f"{p}\n" for p in sa).encode()
        if args.sa_out:
            with open(args.sa_out, "wb") as fh:
                fh.write(lines)
        else:
            payload += b"\n" + lines
    _write(payload)
    return EXIT_OK


def cmd_unbwt(args) -> int:
    enc = _encoding(args)
    bwt = enc.decode(read_input(args.file))
    _write(oracle.inverse_bwt(bwt))
    return EXIT_OK


# replaced by tests to exercise the mismatch path
BWT_IMPL = transform


def _disagrees(text: bytes, config: PipelineConfig) -> bool:
    got = BWT_IMPL(text, "lyndon", config)
    return got != (oracle.naive_bwt(text), oracle.naive_sa(text))


def _shrink(text: bytes, config: PipelineConfig) -> bytes:
    # greedy single-byte deletion while the mismatch persists
    changed = True
    while changed:
        changed = False
        for i in range(len(text)):
            cand = text[:i] + text[i + 1:]
            if _disagrees(cand, config):
                text, changed = cand, True
                break
    return text


def mutations(text: bytes, samples: int, seed: int = 0):
    rng = random.Random(seed)
    alphabet = sorted(set(text)) or [ord("a")]
    for _ in range(samples):
        t = bytearray(text)
        for _ in range(rng.randint(1, 3)):
            op = rng.randrange(3) if t else 1
            if op == 0:
                t[rng.randrange(len(t))] = rng.choice(alphabet)
            elif op == 1:
                t.insert(rng.randrange(len(t) + 1), rng.choice(alphabet))
            else:
                del t[rng.randrange(len(t))]
        yield bytes(t)


def verify(text: bytes, samples: int = 16, seed: int = 0, configs=None):
    """Return the first input on which the two methods disagree, shrunk, or None."""
    configs = configs or [PipelineConfig(chunk_factors=c, parallel_groups=p)
                          for c in (1, 2, 5) for p in (1, 2, 4)]
    for t in [text, *mutations(text, samples, seed)]:
        for config in configs:
            if _disagrees(t, config):
                return _shrink(t, config), config
    return None


def cmd_verify(args) -> int:
    text = as_text(read_input(args.file))
    bad = verify(text, args.samples, args.seed)
    if bad is None:
        print(f"ok: {args.samples + 1} inputs agree")
        return EXIT_OK
    t, config = bad
    print(f"mismatch: config={config!r}", file=sys.stderr)
    print(f"input (hex): {t.hex()}", file=sys.stderr)
    print(f"input (repr): {t!r}", file=sys.stderr)
    return EXIT_MISMATCH


def bench_rows(text: bytes, chunk_factors, repeat: int, parallel: int = 1, emit_sa: bool = False):
    for c in chunk_factors:
        config = PipelineConfig(chunk_factors=c, parallel_groups=parallel, emit_sa=emit_sa)
        for _ in range(repeat):
            t0 = time.perf_counter_ns()
            r = run(text, config)
            elapsed = time.perf_counter_ns() - t0
            s = r.stats
            yield f"chunk={c}", s.k, s.max_factor_len, elapsed, s.total_work


def cmd_bench(args) -> int:
    text = as_text(read_input(args.file))
    chunks = [int(x) for x in args.chunk_factors.split(",") if x]
    lines = ["config,k,M,time_ns,total_work"]
    for row in bench_rows(text, chunks, args.repeat, args.parallel, args.emit_sa):
        lines.append(",".join(str(x) for x in row))
    print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lyndonbwt",
                                     description="BWT and suffix array via Lyndon factorization")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", help="print the Lyndon factorization")
    p.add_argument("file", help="input file, or - for stdin")
    p.set_defaults(func=cmd_factorize)

    def encoding_flags(p):
        p.add_argument("--encoding", choices=["raw", "ascii", "hex"], default="raw")
        p.add_argument("--sentinel", choices=["escaped", "indexed"], default=None,
                       help="default: escaped for ascii, indexed otherwise")

    p = sub.add_parser("bwt", help="compute the BWT (and optionally the SA)")
    p.add_argument("file")
    p.add_argument("--method", choices=["lyndon", "naive"], default="lyndon")
    p.add_argument("--chunk-factors", type=int, default=1)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--emit-sa", action="store_true", help="append the SA after a newline")
    p.add_argument("--sa-out", default=None, help="write the SA to this file instead")
    encoding_flags(p)
    p.set_defaults(func=cmd_bwt)

    p = sub.add_parser("unbwt", help="invert a BWT produced by the bwt command")
    p.add_argument("file")
    encoding_flags(p)
    p.set_defaults(func=cmd_unbwt)

    p = sub.add_parser("verify", help="compare the lyndon and naive methods")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the pipeline, CSV to stdout")
    p.add_argument("file")
    p.add_argument("--chunk-factors", default="1")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--emit-sa", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        return _fail(EXIT_INPUT, f"cannot read {e.filename}: {e.strerror}")
    except (TextError, EncodingError) as e:
        return _fail(EXIT_INPUT, str(e))
    except oracle.MalformedBwt as e:
        return _fail(EXIT_MALFORMED, str(e))
    except ValueError as e:
        return _fail(EXIT_INPUT, str(e))


if __name__ == "__main__":
    sys.exit(main())

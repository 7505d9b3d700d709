import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from lyndonbwt import cli
from lyndonbwt.cli import OutputEncoding, main
from lyndonbwt.oracle import naive_bwt

from conftest import byte_text

W = b"aabcabbaabaabdabbaaabbdc"


class Out:
    def __init__(self, capsysbinary):
        self.cap = capsysbinary

    def run(self, *argv):
        code = main(list(argv))
        out, err = self.cap.readouterr()
        return code, out, err


@pytest.fixture
def sh(capsysbinary):
    return Out(capsysbinary)


@pytest.fixture
def infile(tmp_path):
    def make(data: bytes, name="in.bin"):
        p = tmp_path / name
        p.write_bytes(data)
        return str(p)
    return make


def test_factorize_example(sh, infile):
    code, out, _ = sh.run("factorize", infile(W))
    assert code == 0
    assert out.splitlines() == [b"1\t7\taabcabb", b"8\t17\taabaabdabb", b"18\t24\taaabbdc"]


def test_factorize_empty_and_single(sh, infile):
    assert sh.run("factorize", infile(b""))[:2] == (0, b"")
    assert sh.run("factorize", infile(b"a"))[:2] == (0, b"1\t1\ta\n")


def test_missing_file(sh, tmp_path):
    code, _, err = sh.run("factorize", str(tmp_path / "nope"))
    assert code == 2
    assert b"cannot read" in err


def test_bwt_ascii_mathematics(sh, infile):
    path = infile(b"mathematics")
    code, out, _ = sh.run("bwt", "--method", "lyndon", "--encoding", "ascii", path)
    assert (code, out) == (0, b"smmihtt$ecaa")
    assert sh.run("bwt", "--method", "naive", "--encoding", "ascii", path)[1] == out


def test_bwt_empty_input(sh, infile):
    assert sh.run("bwt", "--encoding", "ascii", infile(b""))[:2] == (0, b"$")


def test_bwt_default_encoding_is_indexed_raw(sh, infile):
    code, out, _ = sh.run("bwt", infile(b"mathematics"))
    assert code == 0
    assert out == b"sentinel_row=8\nsmmihttecaa"


def test_bwt_hex(sh, infile):
    code, out, _ = sh.run("bwt", "--encoding", "hex", "--sentinel", "escaped", infile(b"ab"))
    assert out == naive_bwt(b"ab").hex().encode()


def test_bwt_nul_input(sh, infile):
    code, _, err = sh.run("bwt", infile(b"a\x00b"))
    assert code == 2
    assert b"NUL byte in input" in err


def test_bwt_ascii_rejects_dollar(sh, infile):
    assert sh.run("bwt", "--encoding", "ascii", infile(b"a$b"))[0] == 2


def test_bwt_emit_sa(sh, infile):
    code, out, _ = sh.run("bwt", "--encoding", "ascii", "--emit-sa", infile(b"mathematics"))
    bwt, _, sa = out.partition(b"\n")
    assert bwt == b"smmihtt$ecaa"
    assert [int(x) for x in sa.split(b"\n") if x] == [12, 2, 7, 10, 5, 4, 9, 1, 6, 11, 3, 8]


def test_bwt_sa_file(sh, infile, tmp_path):
    sa_path = tmp_path / "sa.txt"
    code, out, _ = sh.run("bwt", "--encoding", "ascii", "--chunk-factors", "2", "--parallel", "2",
                          "--sa-out", str(sa_path), infile(W))
    assert out == naive_bwt(W).replace(b"\x00", b"$")
    assert sa_path.read_bytes().endswith(b"\n")
    assert len(sa_path.read_bytes().split(b"\n")) == len(W) + 2


def test_unbwt_examples(sh, infile):
    assert sh.run("unbwt", "--encoding", "ascii", infile(b"smmihtt$ecaa"))[:2] == (0, b"mathematics")
    assert sh.run("unbwt", "--encoding", "ascii", infile(b"$"))[:2] == (0, b"")


@pytest.mark.parametrize("data, args", [
    (b"abc", ["--encoding", "ascii"]),
    (b"a$$", ["--encoding", "ascii"]),
    (b"aa$b", ["--encoding", "ascii"]),
    (b"no header", []),
    (b"sentinel_row=9\nab", []),
    (b"zz", ["--encoding", "hex", "--sentinel", "escaped"]),
])
def test_unbwt_malformed(sh, infile, data, args):
    code, _, err = sh.run("unbwt", *args, infile(data))
    assert code == 3
    assert err.startswith(b"error:")


@pytest.mark.parametrize("encoding, sentinel", [
    ("raw", "indexed"), ("raw", "escaped"), ("hex", "indexed"), ("hex", "escaped"),
    ("ascii", "indexed"), ("ascii", "escaped"),
])
def test_round_trip_through_files(sh, infile, encoding, sentinel):
    rng = random.Random(f"{encoding}-{sentinel}")
    for _ in range(20):
        text = bytes(rng.choice(b"abc\n\xff") for _ in range(rng.randint(0, 60)))
        code, out, _ = sh.run("bwt", "--encoding", encoding, "--sentinel", sentinel, infile(text))
        assert code == 0
        code, back, _ = sh.run("unbwt", "--encoding", encoding, "--sentinel", sentinel,
                               infile(out, "t.bwt"))
        assert (code, back) == (0, text)


no_dollar = st.lists(st.integers(1, 255).filter(lambda b: b != 0x24), max_size=64).map(bytes)


@given(st.sampled_from(["raw", "hex"]), st.sampled_from(["indexed", "escaped"]), byte_text())
def test_encoding_round_trip(mode, policy, text):
    enc = OutputEncoding(mode, policy)
    bwt = naive_bwt(text)
    assert enc.decode(enc.encode(bwt)) == bwt


@given(st.sampled_from(["indexed", "escaped"]), no_dollar)
def test_ascii_encoding_round_trip(policy, text):
    enc = OutputEncoding("ascii", policy)
    bwt = naive_bwt(text)
    assert enc.decode(enc.encode(bwt)) == bwt


@pytest.mark.parametrize("text", [W, b"mathematics"])
def test_verify_agrees(sh, infile, text):
    code, out, _ = sh.run("verify", "--samples", "8", infile(text))
    assert code == 0
    assert out.startswith(b"ok")


def test_verify_reports_corrupted_pipeline(sh, infile, monkeypatch):
    def corrupted(text, method, config):
        bwt, sa = cli.transform(text, method, config)
        if b"b" in text:
            bwt = bwt[::-1]
        return bwt, sa
    monkeypatch.setattr(cli, "BWT_IMPL", corrupted)
    code, _, err = sh.run("verify", "--samples", "2", infile(b"mathematics" + b"b"))
    assert code == 1
    # the counterexample is shrunk to a single "b"
    assert b"input (hex): 62\n" in err


def test_bench_csv(sh, infile):
    code, out, _ = sh.run("bench", "--chunk-factors", "1,2", "--repeat", "2", infile(W))
    lines = out.decode().splitlines()
    assert lines[0] == "config,k,M,time_ns,total_work"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4
    assert {(r[1], r[2]) for r in rows} == {("3", "10")}
    # only the timing column may vary between repeats
    assert rows[0][4] == rows[1][4] and rows[2][4] == rows[3][4]


def test_bench_decreasing_input_grows_quadratically(sh, infile):
    def total(n):
        text = bytes(255 - i // 4 for i in range(n))
        _, out, _ = sh.run("bench", infile(text, f"d{n}"))
        return int(out.decode().splitlines()[1].split(",")[4])
    small, large = total(256), total(512)
    assert 3.5 < large / small < 4.5


def test_stdin_dash():
    proc = subprocess.run([sys.executable, "-m", "lyndonbwt", "bwt", "--encoding", "ascii", "-"],
                          input=b"mathematics", capture_output=True, check=True)
    assert proc.stdout == b"smmihtt$ecaa"

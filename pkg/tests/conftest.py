import random

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ALPHABET = b"abcd"


def small_alphabet_text(max_size=64, max_alpha=4):
    return st.integers(1, max_alpha).flatmap(
        lambda a: st.binary(min_size=0, max_size=max_size).map(
            lambda raw: bytes(ALPHABET[b % a] for b in raw)))


def byte_text(max_size=64):
    """Arbitrary bytes without NUL."""
    return st.lists(st.integers(1, 255), max_size=max_size).map(bytes)


def random_texts(count, max_len, seed, min_len=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = rng.randint(1, 4)
        n = rng.randint(min_len, max_len)
        out.append(bytes(rng.choice(ALPHABET[:a]) for _ in range(n)))
    return out


def adversarial_texts():
    out = []
    for n in (1, 2, 7, 64, 128):
        out.append(b"a" * n)
        out.append(bytes(range(255, 255 - min(n, 255), -1)))
        out.append((b"ab" * n)[:n])
        out.append((b"aab" * n)[:n])
        out.append((b"abb" * n)[:n])
        # Lyndon prefix patterns cut off before they close
        out.append((b"aabab" * n)[:n])
        out.append((b"abcabd" * n)[: max(1, n - 1)])
    out.append(bytes(range(200, 0, -1)))
    out.append(b"ba" * 40 + b"b")
    out.append(b"abab" * 20 + b"aba")
    return out


_acceptance = []


@pytest.fixture
def report():
    def record(criterion, ok, detail=""):
        _acceptance.append((criterion, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in _acceptance:
        line = f"{'PASS' if ok else 'FAIL'}  {criterion}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

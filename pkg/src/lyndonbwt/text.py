"""Byte texts and the virtual end sentinel.

Texts are plain ``bytes``. A transformed sequence (a BWT column) is also
``bytes``; inside it the value 0x00 stands for the sentinel, which is why
input texts may not contain NUL. Because 0x00 is the smallest byte value,
ordinary ``bytes`` comparison already orders the sentinel below every symbol.
"""

SENTINEL = 0
SENTINEL_BYTE = b"\x00"


class TextError(ValueError):
    pass


def as_text(data) -> bytes:
    """Coerce ``data`` to ``bytes``, rejecting the reserved NUL byte."""
    if isinstance(data, str):
        data = data.encode("latin-1")
    data = bytes(data)
    if SENTINEL_BYTE in data:
        raise TextError("NUL byte in input")
    return data


def render(seq: bytes, sentinel: str = "$") -> str:
    """Readable form of a transformed sequence, for tests and debugging."""
    return seq.decode("latin-1").replace("\x00", sentinel)


def parse(s: str, sentinel: str = "$") -> bytes:
    """Inverse of :func:`render`."""
    return s.replace(sentinel, "\x00").encode("latin-1")

"""Bit-exact graph6 codec.

Layout: a size header (one byte ``n + 63`` for ``n <= 62``, otherwise ``~``
followed by three bytes carrying 18 bits of ``n``), then the upper triangle
packed column-major (pair ``(i, j)`` with ``i < j`` ordered by ``j`` then
``i``), six bits per byte most-significant first, zero-padded, each byte
offset by 63.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HeaderError(Graph6Error):
    pass


class InvalidByteError(Graph6Error):
    pass


class TruncatedError(Graph6Error):
    pass


class TrailingDataError(Graph6Error):
    pass


class PaddingError(Graph6Error):
    pass


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def _parse_header(data: bytes) -> tuple[int, int]:
    if not data:
        raise HeaderError("empty input", 0)
    first = data[0]
    if first == 126:
        if len(data) >= 2 and data[1] == 126:
            raise HeaderError("8-byte size header unsupported (order > 64)", 1)
        if len(data) < 4:
            raise TruncatedError("short long-form size header", len(data))
        n = 0
        for pos in range(1, 4):
            b = data[pos]
            if not 63 <= b <= 126:
                raise InvalidByteError(f"byte {b} outside 63..126", pos)
            n = (n << 6) | (b - 63)
        if n > MAX_ORDER:
            raise HeaderError(f"order {n} exceeds {MAX_ORDER}", 0)
        return n, 4
    if not 63 <= first <= 125:
        raise HeaderError(f"header byte {first} is not a graph6 size", 0)
    return first - 63, 1


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (an optional trailing newline is allowed)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    data = data.rstrip(b"\r\n")
    n, pos = _parse_header(data)
    if n == 0:
        raise HeaderError("graph of order 0 is not supported", 0)
    need = _body_length(n)
    body = data[pos:pos + need]
    if len(body) < need:
        raise TruncatedError(f"body needs {need} bytes, got {len(body)}", len(data))
    if len(data) > pos + need:
        raise TrailingDataError("unexpected bytes after graph body", pos + need)

    rows = [0] * n
    m = 0
    bit = 0
    total = n * (n - 1) // 2
    i, j = 0, 1
    for off, b in enumerate(body, start=pos):
        if not 63 <= b <= 126:
            raise InvalidByteError(f"byte {b} outside 63..126", off)
        chunk = b - 63
        for shift in range(5, -1, -1):
            set_ = chunk >> shift & 1
            if bit >= total:
                if set_:
                    raise PaddingError("nonzero padding bit", off)
            elif set_:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                m += 1
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(rows), m)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    chunk = 0
    filled = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            chunk = (chunk << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)

"""Bit-exact graph6 text codec.

One graph per line: size byte chr(n+63) for n <= 62, then the upper
triangle packed column-major (x(0,1), x(0,2), x(1,2), x(0,3), ...),
zero-padded to a multiple of 6, each 6-bit group emitted as
chr(value+63). The optional ">>graph6<<" header is tolerated on input.
Multi-byte sizes (lead byte '~') are out of the supported range and are
rejected with an explicit message.
"""

from .graphs import Graph

HEADER = ">>graph6<<"
MAX_VERTICES = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text, name=None):
    """Decode one graph6 record (a single line) into a Graph."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 record", base)
    size = ord(line[0])
    if size == 126:
        raise Graph6Error(
            "multi-byte vertex counts ('~' prefix) are not supported; "
            f"this codec is capped at n <= {MAX_VERTICES}", base)
    if not 63 <= size <= 125:
        raise Graph6Error(f"malformed size byte {line[0]!r}", base)
    n = size - 63
    need = (n * (n - 1) // 2 + 5) // 6
    payload = line[1:]
    if len(payload) < need:
        raise Graph6Error(
            f"record truncated: need {need} payload bytes, found {len(payload)}",
            base + len(line))
    if len(payload) > need:
        raise Graph6Error("trailing garbage after payload", base + 1 + need)
    edges = []
    idx = 0
    i, j = 0, 1
    for pos, ch in enumerate(payload):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"non-printable payload byte {ch!r}", base + 1 + pos)
        for shift in range(5, -1, -1):
            if idx >= n * (n - 1) // 2:
                break
            if (val >> shift) & 1:
                edges.append((i, j))
            idx += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, edges, name=name)


def encode_graph6(g):
    """Encode a Graph as a one-line graph6 record (no trailing newline)."""
    if g.n > MAX_VERTICES:
        raise ValueError(
            f"graph6 encoding is capped at n <= {MAX_VERTICES}, got n={g.n}")
    out = [chr(g.n + 63)]
    val = 0
    filled = 0
    for j in range(1, g.n):
        col = g.neighbor_masks[j]
        for i in range(j):
            val = (val << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(val + 63))
                val = 0
                filled = 0
    if filled:
        out.append(chr((val << (6 - filled)) + 63))
    return "".join(out)


def iter_graph6_lines(lines):
    """Yield (line_number, graph_or_error) over an iterable of text lines.

    Blank lines are skipped. Parse failures come back as the Graph6Error
    instead of raising, so stream consumers can record and continue.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc

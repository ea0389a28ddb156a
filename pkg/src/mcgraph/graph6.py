"""graph6 encoding for simple graphs."""

from __future__ import annotations

from .graph import GraphError, Multigraph


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] < 63 or data[0] > 126:
        raise Graph6Error("invalid header byte", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise Graph6Error("truncated size field", len(data))
    n = 0
    for i, byte in enumerate(chunk):
        if byte < 63 or byte > 126:
            raise Graph6Error("invalid size byte", start + i)
        n = (n << 6) | (byte - 63)
    return n, start + width


def from_graph6(text: str | bytes) -> Multigraph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error("truncated adjacency bit vector", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency", pos + need)
    bits = []
    for i, byte in enumerate(body):
        if byte < 63 or byte > 126:
            raise Graph6Error("invalid adjacency byte", pos + i)
        v = byte - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Multigraph.from_edges(n, edges)


def to_graph6(g: Multigraph) -> str:
    """Encode a simple graph; vertices are taken in increasing id order."""
    if not g.is_simple():
        raise GraphError("graph6 cannot encode parallel edges")
    order = {v: i for i, v in enumerate(g.sorted_vertices())}
    n = g.n
    adj = {(min(order[u], order[v]), max(order[u], order[v])) for u, v in g.edges.values()}
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def read_graph6_file(path) -> list[Multigraph]:
    graphs = []
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(from_graph6(line))
    return graphs

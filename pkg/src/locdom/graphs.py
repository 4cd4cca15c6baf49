"""Bit-packed simple undirected graphs.

Vertices are dense integers 0..n-1.  A vertex set is a plain Python int
used as a bitmask (bit v set <=> vertex v is a member), which makes
set algebra single machine operations for the small orders this package
targets.  Graphs are immutable: ``adj[v]`` is the bitmask of the open
neighborhood N(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    InvalidEdge,
    InvalidParameter,
    LoopRejected,
    MalformedGraph6,
    MissingOrder,
    ParseError,
    RefusedScale,
    Unsupported,
)

GRAPH6_MAX_ORDER = 258047
ENUM_MAX_ORDER = 7  # 2^21 graphs at n=7 is the practical full-enumeration ceiling

_M64 = (1 << 64) - 1


def bit(v: int) -> int:
    return 1 << v


def members(s: int) -> Iterator[int]:
    """Vertices of a bitmask set, in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def set_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with bit-packed adjacency rows."""

    n: int
    adj: tuple[int, ...]

    @property
    def full_set(self) -> int:
        """The vertex set V as a bitmask."""
        return (1 << self.n) - 1

    def complement_set(self, s: int) -> int:
        """V \\ s."""
        return self.full_set ^ s

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in members(self.adj[v] & ((1 << v) - 1)):
                yield (u, v)


@dataclass(frozen=True)
class TwinPair:
    u: int
    v: int
    kind: str  # "open" or "closed"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are errors."""
    if n < 0:
        raise InvalidParameter(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) outside range 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 codec.  Standard format: order as N(n), then the upper triangle
# read column-major -- (0,1),(0,2),(1,2),(0,3),... -- packed big-endian into
# 6-bit chunks, each chunk emitted as chr(value + 63); trailing pad bits zero.

_G6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= GRAPH6_MAX_ORDER:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Unsupported(f"graph6 order {n} exceeds {GRAPH6_MAX_ORDER}")


def encode_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    chunk = 0
    nbits = 0
    for j in range(g.n):
        col = g.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                nbits = 0
    if nbits:
        out.append(chr((chunk << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in line:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"character {ch!r} outside graph6 alphabet")
        vals.append(c - 63)
    if vals[0] == 63:  # '~': extended order
        if len(vals) >= 2 and vals[1] == 63:
            raise MalformedGraph6("8-byte order form not supported")
        if len(vals) < 4:
            raise MalformedGraph6("truncated extended order")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    nchunks = (nbits + 5) // 6
    if len(body) < nchunks:
        raise MalformedGraph6(f"truncated bit stream: {len(body)} < {nchunks} chunks")
    if len(body) > nchunks:
        raise MalformedGraph6("trailing characters after adjacency bits")
    adj = [0] * n
    stream = 0
    for v in body:
        stream = stream << 6 | v
    shift = nchunks * 6
    for j in range(n):
        for i in range(j):
            shift -= 1
            if stream >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if shift and stream & ((1 << shift) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Edge-list text format: first non-comment line "n <count>", then "u v" lines;
# '#' starts a comment line.


def parse_edge_list(text: str) -> Graph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise MissingOrder(f"line {lineno}: expected 'n <count>' header")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {tokens[1]!r}")
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {line!r}")
        pairs.append((u, v))
    if n is None:
        raise MissingOrder("no 'n <count>' header found")
    return new_graph(n, pairs)


# ---------------------------------------------------------------------------
# Deterministic generators.  The gnp generator draws from splitmix64, a
# 64-bit mixing PRNG pinned here by its constants so that seeded corpora
# reproduce bit-identically across implementations:
#   state += 0x9E3779B97F4A7C15
#   z = state
#   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
#   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
#   output = z ^ (z >> 31)
# (all arithmetic mod 2^64).  Pairs (u, v), u < v, are visited in
# lexicographic order and the edge is present iff output < p * 2^64.


def splitmix64(state: int) -> tuple[int, int]:
    """One step of splitmix64; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return state, z ^ (z >> 31)


GENERATOR_KINDS = ("path", "cycle", "complete", "gnp")


def generate(kind: str, n: int, p: float | None = None, seed: int | None = None) -> Graph:
    """Deterministic graph generators: path, cycle, complete, gnp."""
    if kind not in GENERATOR_KINDS:
        raise InvalidParameter(f"unknown generator kind {kind!r}")
    if n < 0:
        raise InvalidParameter(f"negative vertex count {n}")
    if kind == "path":
        return new_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n <= 2:
            return new_graph(n, [(i, i + 1) for i in range(n - 1)])
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return new_graph(n, [(i, j) for j in range(n) for i in range(j)])
    # gnp
    if p is None or not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"gnp requires p in [0, 1], got {p!r}")
    if seed is None:
        raise InvalidParameter("gnp requires a seed")
    threshold = int(p * (1 << 64))
    state = seed & _M64
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            state, out = splitmix64(state)
            if out < threshold:
                pairs.append((u, v))
    return new_graph(n, pairs)


def all_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices.

    Yielded in increasing order of the triangle bit pattern, where bit t of
    the pattern is the t-th pair in the column-major order
    (0,1),(0,2),(1,2),(0,3),...
    """
    if n > ENUM_MAX_ORDER and not allow_large:
        raise RefusedScale(f"full enumeration refused for n={n} > {ENUM_MAX_ORDER}")
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for m in range(1 << len(pairs)):
        adj = [0] * n
        for t, (i, j) in enumerate(pairs):
            if m >> t & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Twins.


def find_twins(g: Graph) -> list[TwinPair]:
    """All twin pairs: open (N(u) = N(v)) or closed (N[u] = N[v])."""
    out = []
    for v in range(g.n):
        for u in range(v):
            if g.adj[u] == g.adj[v]:
                out.append(TwinPair(u, v, "open"))
            elif g.adj[u] | 1 << u == g.adj[v] | 1 << v:
                out.append(TwinPair(u, v, "closed"))
    return out


def is_twin_free(g: Graph) -> bool:
    for v in range(g.n):
        for u in range(v):
            if g.adj[u] == g.adj[v] or g.adj[u] | 1 << u == g.adj[v] | 1 << v:
                return False
    return True

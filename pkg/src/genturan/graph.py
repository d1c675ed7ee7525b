"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

Vertex ``v`` is adjacent to ``u`` iff bit ``u`` of ``adj[v]`` is set.  Graphs
are immutable and hashable, so they can key memo tables directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import MalformedEncoding, SizeCap

MAX_N = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if not 0 <= n <= MAX_N:
            raise SizeCap(f"graph order {n} outside 0..{MAX_N}")
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise ValueError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # hot-path constructor: caller guarantees a valid symmetric tuple
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_N:
            raise SizeCap(f"graph order {n} outside 0..{MAX_N}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    # -- queries ---------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, row in enumerate(self.adj) for u in bits(row >> (v + 1) << (v + 1))]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``, as vertex masks.

        Components are ordered by their smallest vertex.
        """
        rest = self.vertex_mask if within is None else within
        adj = self.adj
        out = []
        while rest:
            frontier = rest & -rest
            comp = frontier
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_forest(self) -> bool:
        return self.num_edges() == self.n - len(self.components())

    # -- derived graphs ----------------------------------------------------

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced by the vertex set ``mask``, relabelled 0..k-1 in order."""
        verts = list(bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph._trusted(len(verts), tuple(adj))

    def delete_vertices(self, *vs: int) -> "Graph":
        mask = self.vertex_mask
        for v in vs:
            mask &= ~(1 << v)
        return self.induced(mask)

    def delete_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph._trusted(self.n, tuple(adj))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_isolated(self, k: int) -> "Graph":
        if self.n + k > MAX_N:
            raise SizeCap(f"order {self.n + k} exceeds {MAX_N}")
        return Graph._trusted(self.n + k, self.adj + (0,) * k)

    # -- graph6 ------------------------------------------------------------

    def to_graph6(self) -> str:
        return serialize_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return parse_graph6(text)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Block-diagonal union: ``g1`` keeps labels 0..n1-1, ``g2`` is shifted by n1."""
    if g1.n + g2.n > MAX_N:
        raise SizeCap(f"union order {g1.n + g2.n} exceeds {MAX_N}")
    shift = g1.n
    return Graph._trusted(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    if g1.n + g2.n > MAX_N:
        raise SizeCap(f"join order {g1.n + g2.n} exceeds {MAX_N}")
    n1 = g1.n
    left = g1.vertex_mask
    right = g2.vertex_mask << n1
    adj = tuple(row | right for row in g1.adj) + tuple((row << n1) | left for row in g2.adj)
    return Graph._trusted(n1 + g2.n, adj)


# graph6: header byte(s) for n, then the upper triangle column by column
# (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups + 63.

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    n = g.n
    adj = g.adj
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedEncoding("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise MalformedEncoding(f"invalid graph6 character {ch!r}")
        vals.append(c)
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedEncoding("truncated 8-byte graph6 header")
        n = 0
        for c in vals[2:8]:
            n = (n << 6) | c
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise MalformedEncoding("truncated 4-byte graph6 header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    if n > MAX_N:
        raise SizeCap(f"graph6 order {n} exceeds {MAX_N}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedEncoding(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedEncoding("nonzero padding bits")
    return Graph._trusted(n, tuple(adj))

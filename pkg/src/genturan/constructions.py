"""Named extremal constructions and graph combinators.

Every spec builds a graph with a fixed vertex labeling, so tests and callers
can refer to vertices by index:

* blocks of composite constructions are laid out left to right;
* ``Star(r)`` has centre 0 and leaves 1..r;
* ``Matching(k)`` pairs ``2i`` with ``2i + 1``;
* ``TuranGraph(n, k)`` uses consecutive parts, the first ``n % k`` parts one larger;
* ``SplitH(n, k, a)`` places A, then C, then B;
* ``FaudreeSchelpG(n, k, l)`` places the ``l`` cliques, then the small clique,
  then the independent set;
* ``Friendship(n)`` has centre 0 and matching edges ``(1, 2), (3, 4), ...``;
* ``PartialBlowup`` replaces vertex ``u`` in place by ``m`` consecutive copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .errors import InvalidSpec
from .graph import MAX_N, Graph, bits, disjoint_union, join


@dataclass(frozen=True)
class Complete:
    n: int

    def __str__(self):
        return f"K{self.n}"


@dataclass(frozen=True)
class Empty:
    n: int

    def __str__(self):
        return f"E{self.n}"


@dataclass(frozen=True)
class Path:
    k: int

    def __str__(self):
        return f"P{self.k}"


@dataclass(frozen=True)
class Star:
    """S_r: a centre joined to ``r`` leaves."""

    r: int

    def __str__(self):
        return f"S{self.r}"


@dataclass(frozen=True)
class Matching:
    k: int

    def __str__(self):
        return f"M{self.k}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __str__(self):
        return f"C{self.n}"


@dataclass(frozen=True)
class TuranGraph:
    n: int
    k: int

    def __str__(self):
        return f"T({self.n},{self.k})"


@dataclass(frozen=True)
class SplitH:
    """H(n,k,a): A (order a) complete to B (order n-k+a); A and C (order k-2a) form a clique."""

    n: int
    k: int
    a: int

    def __str__(self):
        return f"H({self.n},{self.k},{self.a})"


@dataclass(frozen=True)
class FaudreeSchelpG:
    """G_{n,k,l}: l copies of K_{k-1}, plus K_{(k-2)/2} joined to an independent set."""

    n: int
    k: int
    l: int

    def __str__(self):
        return f"G({self.n},{self.k},{self.l})"


@dataclass(frozen=True)
class Friendship:
    n: int

    def __str__(self):
        return f"F{self.n}"


@dataclass(frozen=True)
class CliqueUnion:
    """a copies of K_{k-1} together with one K_b."""

    a: int
    k: int
    b: int

    def __str__(self):
        return f"CU({self.a},{self.k},{self.b})"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple

    def __init__(self, *parts):
        if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
            parts = tuple(parts[0])
        object.__setattr__(self, "parts", tuple(parts))

    def __str__(self):
        return "(" + " + ".join(str(p) for p in self.parts) + ")" if self.parts else "E0"


@dataclass(frozen=True)
class Join:
    left: "ConstructionSpec"
    right: "ConstructionSpec"

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Complement:
    inner: "ConstructionSpec"

    def __str__(self):
        return f"~{self.inner}"


@dataclass(frozen=True)
class PartialBlowup:
    base: "ConstructionSpec | Graph"
    U: tuple
    m: int

    def __str__(self):
        base = self.base.to_graph6() if isinstance(self.base, Graph) else str(self.base)
        return f"Blowup({base},{list(self.U)},{self.m})"


ConstructionSpec = Union[
    Complete, Empty, Path, Star, Matching, Cycle, TuranGraph, SplitH, FaudreeSchelpG,
    Friendship, CliqueUnion, DisjointUnion, Join, Complement, PartialBlowup,
]


def _need(cond: bool, spec, why: str) -> None:
    if not cond:
        raise InvalidSpec(f"{spec}: {why}")


def _check_order(spec, n: int) -> None:
    _need(0 <= n <= MAX_N, spec, f"order {n} outside 0..{MAX_N}")


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def _clique_union(sizes) -> Graph:
    return reduce(disjoint_union, (complete(s) for s in sizes), Graph(0))


def partial_blowup(h: Graph, U, m: int) -> Graph:
    """Replace every vertex of ``U`` by ``m`` independent copies; edges become complete bipartite."""
    U = set(U)
    start = []
    n = 0
    for v in range(h.n):
        start.append(n)
        n += m if v in U else 1
    if n > MAX_N:
        raise InvalidSpec(f"blowup order {n} exceeds {MAX_N}")
    block = [((1 << (m if v in U else 1)) - 1) << start[v] for v in range(h.n)]
    adj = [0] * n
    for v in range(h.n):
        row = 0
        for u in bits(h.adj[v]):
            row |= block[u]
        for x in bits(block[v]):
            adj[x] = row
    return Graph._trusted(n, tuple(adj))


def build(spec) -> Graph:
    """Build the labelled graph described by ``spec``.  A bare ``Graph`` passes through."""
    if isinstance(spec, Graph):
        return spec
    if isinstance(spec, Complete):
        _check_order(spec, spec.n)
        return complete(spec.n)
    if isinstance(spec, Empty):
        _check_order(spec, spec.n)
        return Graph(spec.n)
    if isinstance(spec, Path):
        _check_order(spec, spec.k)
        return Graph.from_edges(spec.k, ((i, i + 1) for i in range(spec.k - 1)))
    if isinstance(spec, Star):
        _need(spec.r >= 0, spec, "negative leaf count")
        _check_order(spec, spec.r + 1)
        return Graph.from_edges(spec.r + 1, ((0, i) for i in range(1, spec.r + 1)))
    if isinstance(spec, Matching):
        _need(spec.k >= 0, spec, "negative size")
        _check_order(spec, 2 * spec.k)
        return Graph.from_edges(2 * spec.k, ((2 * i, 2 * i + 1) for i in range(spec.k)))
    if isinstance(spec, Cycle):
        _need(spec.n >= 3, spec, "a cycle needs at least 3 vertices")
        _check_order(spec, spec.n)
        return Graph.from_edges(spec.n, ((i, (i + 1) % spec.n) for i in range(spec.n)))
    if isinstance(spec, TuranGraph):
        n, k = spec.n, spec.k
        _need(k >= 1, spec, "needs at least one part")
        _check_order(spec, n)
        sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
        return _clique_union(sizes).complement()
    if isinstance(spec, SplitH):
        n, k, a = spec.n, spec.k, spec.a
        _need(a >= 0, spec, "negative a")
        _need(k >= 2 * a, spec, "requires k >= 2a")
        _need(n >= k, spec, "requires n >= k")
        _check_order(spec, n)
        core = (1 << (k - a)) - 1  # A and C
        A = (1 << a) - 1
        B = ((1 << n) - 1) & ~core
        adj = []
        for v in range(n):
            if v < a:
                adj.append((core | B) & ~(1 << v))
            elif v < k - a:
                adj.append(core & ~(1 << v))
            else:
                adj.append(A)
        return Graph._trusted(n, tuple(adj))
    if isinstance(spec, FaudreeSchelpG):
        n, k, l = spec.n, spec.k, spec.l
        _need(k >= 2 and k % 2 == 0, spec, "requires k even")
        _need(l >= 0, spec, "negative l")
        h = (k - 2) // 2
        rest = n - l * (k - 1) - h
        _need(rest >= 0, spec, "requires n >= l(k-1) + (k-2)/2")
        _check_order(spec, n)
        return disjoint_union(_clique_union([k - 1] * l), join(complete(h), Graph(rest)))
    if isinstance(spec, Friendship):
        n = spec.n
        _need(n >= 1, spec, "needs a centre vertex")
        _check_order(spec, n)
        edges = [(0, i) for i in range(1, n)]
        edges += [(i, i + 1) for i in range(1, n - 1, 2)]
        return Graph.from_edges(n, edges)
    if isinstance(spec, CliqueUnion):
        a, k, b = spec.a, spec.k, spec.b
        _need(a >= 0 and k >= 2, spec, "requires a >= 0 and k >= 2")
        _need(0 <= b < k, spec, "requires 0 <= b < k")
        _check_order(spec, a * (k - 1) + b)
        return _clique_union([k - 1] * a + [b])
    if isinstance(spec, DisjointUnion):
        graphs = [build(p) for p in spec.parts]
        _check_order(spec, sum(g.n for g in graphs))
        return reduce(disjoint_union, graphs, Graph(0))
    if isinstance(spec, Join):
        g1, g2 = build(spec.left), build(spec.right)
        _check_order(spec, g1.n + g2.n)
        return join(g1, g2)
    if isinstance(spec, Complement):
        return build(spec.inner).complement()
    if isinstance(spec, PartialBlowup):
        h = build(spec.base)
        _need(spec.m >= 1, spec, "multiplicity must be positive")
        _need(all(0 <= u < h.n for u in spec.U), spec, "blowup set out of range")
        return partial_blowup(h, spec.U, spec.m)
    raise InvalidSpec(f"unknown construction {spec!r}")


def padded(spec, n: int) -> Graph:
    """Build ``spec`` and add isolated vertices up to order ``n``."""
    g = build(spec)
    if g.n > n:
        raise InvalidSpec(f"{spec} has {g.n} vertices, more than {n}")
    return g.add_isolated(n - g.n)


def is_almost_regular(g: Graph, d: int) -> bool:
    """All degrees equal ``d``, or all but one equal ``d`` and that one is ``d - 1``."""
    degs = g.degrees()
    off = [x for x in degs if x != d]
    return not off or (len(off) == 1 and off[0] == d - 1)


def is_complete_multipartite(g: Graph) -> bool:
    """True when non-adjacency is an equivalence relation (complement is a union of cliques)."""
    comp = g.complement()
    parts = comp.components()
    if len(parts) < 2:
        return False
    for c in parts:
        for v in bits(c):
            if (comp.adj[v] | (1 << v)) != c:
                return False
    return True

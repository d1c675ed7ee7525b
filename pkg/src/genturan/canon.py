"""Canonical labeling by equitable refinement plus individualization search.

The search tree is explored depth-first.  Leaves whose relabelled adjacency
matches the first or the best leaf yield automorphisms; these prune the tree
two ways: siblings in one orbit of the prefix stabiliser are skipped, and a
match jumps straight back to the common ancestor with the matched leaf.  The
automorphisms found generate the full group, so orbits computed from them are
exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


def refine(adj, cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Refine ``cells`` until every cell is uniform with respect to every cell.

    ``queue`` holds splitter masks.  Fragments of a split cell are ordered by
    neighbour count, which keeps the result invariant under relabeling.
    """
    cells = list(cells)
    n = sum(len(c) for c in cells)
    singles = sum(1 for c in cells if len(c) == 1)
    qi = 0
    while qi < len(queue) and singles < n:
        w = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            c0 = (adj[cell[0]] & w).bit_count()
            for v in cell:
                if (adj[v] & w).bit_count() != c0:
                    break
            else:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                k = (adj[v] & w).bit_count()
                if k in groups:
                    groups[k].append(v)
                else:
                    groups[k] = [v]
            frags = [groups[k] for k in sorted(groups)]
            cells[i:i + 1] = frags
            for f in frags:
                if len(f) == 1:
                    singles += 1
                    queue.append(1 << f[0])
                else:
                    m = 0
                    for v in f:
                        m |= 1 << v
                    queue.append(m)
            i += len(frags)
    return cells


@dataclass
class CanonResult:
    labeling: list[int]          # labeling[v] = canonical position of vertex v
    order: list[int]             # order[i] = vertex placed at canonical position i
    certificate: tuple[int, ...]
    generators: list[tuple[int, ...]]
    orbits: list[int]            # orbits[v] = smallest vertex in v's orbit

    def canonical_graph(self, n: int) -> Graph:
        return Graph._trusted(n, self.certificate)


def _orbits(n: int, perms) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = g.adj
        self.first = None   # (cert, order, path)
        self.best = None
        self.autos: list[tuple[int, ...]] = []

    def cert(self, order):
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        out = []
        for v in order:
            row = 0
            for u in bits(adj[v]):
                row |= 1 << pos[u]
            out.append(row)
        return tuple(out)

    def leaf(self, cells, path) -> int:
        order = [c[0] for c in cells]
        cert = self.cert(order)
        depth = len(path)
        if self.first is None:
            self.first = self.best = (cert, order, list(path))
            return depth - 1
        for ref in (self.first, self.best):
            if cert == ref[0]:
                perm = [0] * self.n
                for a, b in zip(ref[1], order):
                    perm[a] = b
                self.autos.append(tuple(perm))
                rp = ref[2]
                d = 0
                while d < depth and rp[d] == path[d]:
                    d += 1
                return d
        if cert > self.best[0]:
            self.best = (cert, order, list(path))
        return depth - 1

    def node(self, cells, path) -> int:
        depth = len(path)
        ti = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if ti is None:
            return self.leaf(cells, path)
        target = cells[ti]
        explored: list[int] = []
        seen_autos = -1
        orb = None
        for v in target:
            if explored:
                if len(self.autos) != seen_autos:
                    seen_autos = len(self.autos)
                    fixing = [p for p in self.autos if all(p[x] == x for x in path)]
                    orb = _orbits(self.n, fixing) if fixing else None
                if orb is not None and any(orb[v] == orb[w] for w in explored):
                    continue
            rest = [u for u in target if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            child = refine(self.adj, child, [1 << v])
            path.append(v)
            r = self.node(child, path)
            path.pop()
            explored.append(v)
            if r < depth:
                return r
        return depth - 1


def canonical(g: Graph) -> CanonResult:
    n = g.n
    if n == 0:
        return CanonResult([], [], (), [], [])
    s = _Search(g)
    cells = refine(g.adj, [list(range(n))], [(1 << n) - 1])
    s.node(cells, [])
    cert, order, _ = s.best
    labeling = [0] * n
    for i, v in enumerate(order):
        labeling[v] = i
    return CanonResult(labeling, order, cert, s.autos, _orbits(n, s.autos))


def canonical_form(g: Graph) -> Graph:
    return Graph._trusted(g.n, canonical(g).certificate)


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).to_graph6()


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical(g1).certificate == canonical(g2).certificate

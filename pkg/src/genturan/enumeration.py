"""Isomorph-free generation of graphs and the brute-force oracle for ex(n, H, F).

Generation is vertex-by-vertex canonical augmentation.  A child of parent P
is P plus a new vertex joined to a set S; S ranges over orbit representatives
of Aut(P) acting on subsets.  The child is kept only when the new vertex lies
in the automorphism orbit of a deletion vertex chosen by invariants, with the
canonical labeling breaking remaining ties.  Most children are settled by
degree data alone and only genuine ties reach the full search.

Deleting a vertex keeps a graph F-free, so pruning F-containing children at
every level still reaches every F-free class.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .canon import canonical, canonical_graph6, refine
from .constructions import padded
from .counting import contains, count_copies, matching_profile
from .errors import SizeCap
from .graph import Graph, bits, parse_graph6

DEFAULT_MAX_N = 9
HARD_MAX_N = 10
CACHE_ENV = "GENTURAN_CACHE_DIR"

_levels: dict[tuple[Optional[str], int], tuple[Graph, ...]] = {}


def check_order(n: int, allow_n10: bool = False) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = HARD_MAX_N if allow_n10 else DEFAULT_MAX_N
    if n > cap:
        hint = "" if allow_n10 or n > HARD_MAX_N else " (n = 10 needs allow_n10)"
        raise SizeCap(f"enumeration supports n <= {cap}, got {n}{hint}")


def _subset_images(perm: Sequence[int], m: int) -> list[int]:
    img = [0] * (1 << m)
    for S in range(1, 1 << m):
        low = S & -S
        img[S] = img[S ^ low] | (1 << perm[low.bit_length() - 1])
    return img


def _accept(child: Graph) -> bool:
    """Is the new vertex (the last one) in the orbit of the canonical deletion vertex?

    The deletion vertex is, among vertices maximising (degree, sorted neighbour
    degrees, cell of the equitable partition), the one placed last by the
    canonical labeling.
    """
    n = child.n
    v = n - 1
    adj = child.adj
    degs = [row.bit_count() for row in adj]
    top = degs[v]
    key = sorted(degs[u] for u in bits(adj[v]))
    ties = [v]
    for x in range(n - 1):
        if degs[x] != top:
            continue
        kx = sorted(degs[u] for u in bits(adj[x]))
        if kx > key:
            return False
        if kx == key:
            ties.append(x)
    if len(ties) == 1:
        return True
    # narrow the ties to the latest cell of the equitable partition
    cells = refine(adj, [list(range(n))], [(1 << n) - 1])
    cell_of = {}
    for i, cell in enumerate(cells):
        for x in cell:
            cell_of[x] = i
    late = max(cell_of[x] for x in ties)
    if cell_of[v] != late:
        return False
    ties = [x for x in ties if cell_of[x] == late]
    if len(ties) == 1:
        return True
    c = canonical(child)
    last = max(ties, key=lambda x: c.labeling[x])
    return c.orbits[v] == c.orbits[last]


def _children(parent: Graph, prune: Optional[Graph]) -> list[Graph]:
    m = parent.n
    n = m + 1
    padj = parent.adj
    degs = parent.degrees()
    top = max(degs, default=-1)
    topmask = sum(1 << v for v in range(m) if degs[v] == top)
    gens = canonical(parent).generators if m > 1 else []
    tables = [_subset_images(p, m) for p in gens]
    seen = bytearray(1 << m) if tables else None
    newbit = 1 << m
    out = []
    for S in range(1 << m):
        # the new vertex must end up with maximum degree
        if m and S.bit_count() < top + (1 if S & topmask else 0):
            continue
        if seen is not None:
            if seen[S]:
                continue
            seen[S] = 1
            stack = [S]
            while stack:
                x = stack.pop()
                for t in tables:
                    y = t[x]
                    if not seen[y]:
                        seen[y] = 1
                        stack.append(y)
        adj = tuple(row | newbit if S >> v & 1 else row for v, row in enumerate(padj)) + (S,)
        child = Graph._trusted(n, adj)
        if prune is not None and contains(prune, child):
            continue
        if _accept(child):
            out.append(child)
    return out


def _expand(args) -> list[tuple[int, ...]]:
    parents, prune_adj = args
    prune = Graph._trusted(len(prune_adj), prune_adj) if prune_adj is not None else None
    out = []
    for p in parents:
        out.extend(c.adj for c in _children(p, prune))
    return out


def _cache_path(key: Optional[str], n: int) -> Optional[Path]:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    tag = "all" if key is None else "free-" + "".join(f"{ord(ch):02x}" for ch in key)
    return Path(root) / f"classes-n{n}-{tag}.g6"


def _level(n: int, prune: Optional[Graph], key: Optional[str], workers: int) -> tuple[Graph, ...]:
    hit = _levels.get((key, n))
    if hit is not None:
        return hit
    path = _cache_path(key, n)
    if path is not None and path.exists():
        graphs = tuple(parse_graph6(line) for line in path.read_text().split())
        _levels[(key, n)] = graphs
        return graphs
    if n == 0:
        graphs = (Graph(0),)
    else:
        parents = _level(n - 1, prune, key, workers)
        prune_adj = prune.adj if prune is not None else None
        if workers > 1 and len(parents) > 1:
            size = -(-len(parents) // (4 * workers))
            chunks = [(parents[i:i + size], prune_adj) for i in range(0, len(parents), size)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_expand, chunks))
        else:
            parts = [_expand((parents, prune_adj))]
        graphs = tuple(Graph._trusted(n, adj) for part in parts for adj in part)
    _levels[(key, n)] = graphs
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("".join(g.to_graph6() + "\n" for g in graphs))
        tmp.replace(path)
    return graphs


def graph_classes(n: int, prune: Optional[Graph] = None, workers: int = 1,
                  allow_n10: bool = False) -> tuple[Graph, ...]:
    """One representative per isomorphism class of n-vertex graphs (F-free if ``prune``)."""
    check_order(n, allow_n10)
    if workers < 1:
        raise ValueError("workers must be at least 1")
    key = canonical_graph6(prune) if prune is not None else None
    if prune is not None and prune.n == 0:
        return ()
    return _level(n, prune, key, workers)


def enumerate_graphs(n: int, prune: Optional[Graph] = None, workers: int = 1,
                     allow_n10: bool = False) -> Iterator[Graph]:
    yield from graph_classes(n, prune, workers, allow_n10)


def clear_cache() -> None:
    _levels.clear()


def _is_matching(h: Graph) -> bool:
    return h.n > 0 and all(row.bit_count() == 1 for row in h.adj)


def copy_counter(h: Graph):
    """A function G -> N(h, G), using the matching profile when h is a matching."""
    if _is_matching(h):
        t = h.n // 2
        return lambda g: matching_profile(g)[t]
    return lambda g: count_copies(h, g)


@dataclass
class ExtremalResult:
    n: int
    h_spec: str
    f_spec: str
    value: int
    extremal: list[str] = field(default_factory=list)
    searched: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _label(x, given: Optional[str]) -> str:
    if given is not None:
        return given
    return x.to_graph6() if isinstance(x, Graph) else str(x)


def ex_brute(n: int, h, f, workers: int = 1, allow_n10: bool = False,
             h_label: Optional[str] = None, f_label: Optional[str] = None) -> ExtremalResult:
    """Exact ex(n, h, f) by scanning every f-free isomorphism class on n vertices."""
    from .constructions import build

    hg, fg = build(h), build(f)
    classes = graph_classes(n, fg, workers, allow_n10)
    count = copy_counter(hg)
    best = None
    arg: list[Graph] = []
    for g in classes:
        c = count(g)
        if best is None or c > best:
            best, arg = c, [g]
        elif c == best:
            arg.append(g)
    extremal = sorted(canonical_graph6(g) for g in arg)
    return ExtremalResult(n, _label(h, h_label), _label(f, f_label),
                          best if best is not None else 0, extremal, len(classes))


def ex_over_family(n: int, h, family: Sequence) -> tuple[int, object]:
    """max over the family of N(h, spec padded to n vertices); ties go to the first listed."""
    from .constructions import build

    if not family:
        raise ValueError("empty family")
    hg = build(h)
    count = copy_counter(hg)
    best, arg = None, None
    for spec in family:
        c = count(padded(spec, n))
        if best is None or c > best:
            best, arg = c, spec
    return best, arg


def extremal_graphs(n: int, h, f, workers: int = 1) -> list[Graph]:
    """The maximising classes of ``ex_brute`` as graphs (not canonically relabelled)."""
    from .constructions import build

    hg, fg = build(h), build(f)
    classes = graph_classes(n, fg, workers)
    count = copy_counter(hg)
    vals = [count(g) for g in classes]
    top = max(vals, default=0)
    return [g for g, v in zip(classes, vals) if v == top]


__all__ = [
    "ExtremalResult", "enumerate_graphs", "graph_classes", "ex_brute", "ex_over_family",
    "extremal_graphs", "copy_counter", "clear_cache", "check_order",
]

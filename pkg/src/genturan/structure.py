"""Matching number, Tutte-Berge deficiency, Berge-Tutte witnesses and b(H, s)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .constructions import partial_blowup
from .errors import SizeCap
from .graph import Graph, bits

DEFICIENCY_MAX_N = 24
PARAMS_MAX_N = 16
BLOWUP_MAX_N = 10


def max_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum cardinality matching by Edmonds' blossom algorithm.

    Returns ``(size, edges)`` with each edge as ``(u, v)``, ``u < v``.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        qh = 0
        while qh < len(queue):
            v = queue[qh]
            qh += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        x = to
                        while x != -1:
                            px = parent[x]
                            nxt = match[px]
                            match[x], match[px] = px, x
                            x = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for root in range(n):
        if match[root] == -1:
            augment_from(root)
    edges = sorted((v, u) for v, u in enumerate(match) if u > v)
    return len(edges), edges


def matching_number(g: Graph) -> int:
    return max_matching(g)[0]


def _odd_parts(g: Graph, removed: int) -> tuple[int, bool, list[int]]:
    comps = g.components(g.vertex_mask & ~removed)
    odd = sum(c.bit_count() & 1 for c in comps)
    return odd, odd == len(comps), comps


def deficiency(g: Graph) -> tuple[int, frozenset[int]]:
    """max over B of (odd components of G - B) - |B|, with a maximising B.

    Exhaustive over all 2^n sets; ties go to the smallest, then lexicographically
    first, B.  By Tutte-Berge, nu(G) = (n - deficiency) / 2.
    """
    if g.n > DEFICIENCY_MAX_N:
        raise SizeCap(f"deficiency supports n <= {DEFICIENCY_MAX_N}, got {g.n}")
    best, arg = None, ()
    for k in range(g.n + 1):
        for B in combinations(range(g.n), k):
            mask = sum(1 << v for v in B)
            odd, _, _ = _odd_parts(g, mask)
            d = odd - k
            if best is None or d > best:
                best, arg = d, B
    return best, frozenset(arg)


@dataclass(frozen=True)
class BergeTuttePartition:
    witness: frozenset[int]
    components: tuple[frozenset[int], ...]
    value: int

    def singletons(self) -> int:
        return sum(1 for c in self.components if len(c) == 1)


def berge_tutte_partitions(g: Graph):
    """Every B for which all components of G - B have odd order, with its value."""
    if g.n > DEFICIENCY_MAX_N:
        raise SizeCap(f"Berge-Tutte search supports n <= {DEFICIENCY_MAX_N}, got {g.n}")
    for k in range(g.n + 1):
        for B in combinations(range(g.n), k):
            mask = sum(1 << v for v in B)
            _, all_odd, comps = _odd_parts(g, mask)
            if not all_odd:
                continue
            value = k + sum((c.bit_count() - 1) // 2 for c in comps)
            yield B, comps, value


@lru_cache(maxsize=4096)
def _least_partition(g: Graph) -> Optional[BergeTuttePartition]:
    # the least-value partition does not depend on s, so it is shared across calls
    best = None
    for B, comps, value in berge_tutte_partitions(g):
        if best is None or value < best[2]:
            best = (B, comps, value)
    if best is None:
        return None
    B, comps, value = best
    return BergeTuttePartition(frozenset(B), tuple(frozenset(bits(c)) for c in comps), value)


def berge_tutte_witness(g: Graph, s: int) -> Optional[BergeTuttePartition]:
    """A partition of value <= s - 1 certifying that ``g`` has no M_s, else ``None``.

    Among valid partitions the one with the least value is returned, ties
    broken by smaller |B| and then lexicographic B.
    """
    if s < 1:
        raise ValueError("s must be positive")
    best = _least_partition(g)
    if best is None or best.value > s - 1:
        return None
    return best


@dataclass(frozen=True)
class StructureParams:
    tau: int
    alpha: int
    nu: int
    b: Optional[int]


def independence_number(h: Graph) -> int:
    best = 0
    adj = h.adj
    for mask in range(1 << h.n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(not (adj[v] & mask) for v in bits(mask)):
            best = size
    return best


def vertex_cover_number(h: Graph) -> int:
    edges = h.edges()
    for k in range(h.n + 1):
        for cover in combinations(range(h.n), k):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in edges):
                return k
    return h.n


def b_from_partitions(h: Graph, s: int) -> Optional[int]:
    """Largest number of singleton components over Berge-Tutte partitions of value <= s - 1."""
    best = None
    for _, comps, value in berge_tutte_partitions(h):
        if value <= s - 1:
            single = sum(1 for c in comps if c.bit_count() == 1)
            if best is None or single > best:
                best = single
    return best


def structure_params(h: Graph, s: int) -> StructureParams:
    if h.n > PARAMS_MAX_N:
        raise SizeCap(f"structure_params supports n <= {PARAMS_MAX_N}, got {h.n}")
    nu = matching_number(h)
    b = b_from_partitions(h, s) if nu <= s - 1 else None
    return StructureParams(vertex_cover_number(h), independence_number(h), nu, b)


def b_param_blowup(h: Graph, s: int, m_max: Optional[int] = None) -> Optional[int]:
    """Largest |U| whose partial (m_max, U)-blowup of ``h`` has no M_s.

    Returns ``None`` when even U = {} fails, i.e. ``h`` itself contains M_s.
    """
    if h.n > BLOWUP_MAX_N:
        raise SizeCap(f"b_param_blowup supports n <= {BLOWUP_MAX_N}, got {h.n}")
    m = 2 * s if m_max is None else m_max
    if m < s:
        raise ValueError("blowup multiplicity must be at least s")
    if matching_number(h) >= s:
        return None
    # M_s-freeness is inherited by subsets of U, so scan sizes downward
    for k in range(h.n, 0, -1):
        for U in combinations(range(h.n), k):
            if matching_number(partial_blowup(h, U, m)) < s:
                return k
    return 0

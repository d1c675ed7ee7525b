"""Exact copy counting: N(H, G) via injective embeddings, and matching profiles.

Copies are non-induced.  N(H, G) is the number of injective homomorphisms
H -> G divided by |Aut(H)|; Python integers keep every count exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import InternalInconsistency, SizeCap
from .graph import Graph, bits

AUT_MAX_N = 12


@dataclass(frozen=True)
class MatchingProfile:
    """counts[t] = N(M_t, G) for t = 0..nu(G)."""

    counts: tuple[int, ...]

    @property
    def nu(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, t: int) -> int:
        if t < 0:
            raise IndexError(t)
        return self.counts[t] if t < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _clique_profile(m: int) -> list[int]:
    return [factorial(m) // (factorial(t) * 2 ** t * factorial(m - 2 * t)) for t in range(m // 2 + 1)]


def _component_profile(adj, comp: int) -> list[int]:
    memo: dict[int, list[int]] = {}

    def rec(mask: int) -> list[int]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        # pivot on the lowest vertex that still has an edge
        m = mask
        v = -1
        while m:
            low = m & -m
            x = low.bit_length() - 1
            if adj[x] & mask:
                v = x
                break
            m ^= low
        if v < 0:
            res = [1]
        else:
            rest = mask & ~(1 << v)
            # deleting every edge at v in turn: G - v, plus one term per edge vu
            res = list(rec(rest))
            for u in bits(adj[v] & mask):
                sub = rec(rest & ~(1 << u))
                if len(res) < len(sub) + 1:
                    res.extend([0] * (len(sub) + 1 - len(res)))
                for t, c in enumerate(sub):
                    res[t + 1] += c
        memo[mask] = res
        return res

    return rec(comp)


@lru_cache(maxsize=1 << 16)
def matching_profile(g: Graph) -> MatchingProfile:
    """Exact N(M_t, G) for every t, via the edge-deletion recurrence.

    N(M_t, G) = N(M_t, G - uv) + N(M_{t-1}, G - u - v), applied to all edges at
    a pivot vertex at once and memoised on the remaining vertex set.  Connected
    components are handled separately and multiplied; cliques use the closed form.
    """
    counts = [1]
    for comp in g.components():
        size = comp.bit_count()
        if size == 1:
            continue
        edges = sum((g.adj[v] & comp).bit_count() for v in bits(comp)) // 2
        if edges == size * (size - 1) // 2:
            poly = _clique_profile(size)
        else:
            poly = _component_profile(g.adj, comp)
        counts = _polymul(counts, poly)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return MatchingProfile(tuple(counts))


# -- embedding engine -------------------------------------------------------

class _Pattern:
    """Pattern graph split into components, each with a connected placement order."""

    def __init__(self, h: Graph):
        comps = sorted(h.components(), key=lambda c: -c.bit_count())
        self.parts = []
        self.isolated = 0
        for comp in comps:
            if comp.bit_count() == 1:
                self.isolated += 1
                continue
            verts = list(bits(comp))
            start = max(verts, key=lambda v: (h.adj[v].bit_count(), -v))
            order = [start]
            placed = 1 << start
            while len(order) < len(verts):
                # next: most already-placed neighbours, then highest degree
                nxt = max(
                    (v for v in verts if not placed >> v & 1 and h.adj[v] & placed),
                    key=lambda v: ((h.adj[v] & placed).bit_count(), h.adj[v].bit_count(), -v),
                )
                order.append(nxt)
                placed |= 1 << nxt
            idx = {v: i for i, v in enumerate(order)}
            back = [[idx[u] for u in bits(h.adj[v]) if u in idx and idx[u] < i] for i, v in enumerate(order)]
            degs = [h.adj[v].bit_count() for v in order]
            self.parts.append((back, degs))


def _component_images(part, gadj, gdeg, avail: int) -> Counter:
    """Counter mapping image vertex mask -> number of embeddings of one component."""
    back, degs = part
    k = len(back)
    img = [0] * k
    out: Counter = Counter()

    def extend(i: int, used: int) -> None:
        if i == k:
            out[used] += 1
            return
        cand = avail & ~used
        for j in back[i]:
            cand &= gadj[img[j]]
        d = degs[i]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            if gdeg[x] < d:
                continue
            img[i] = x
            extend(i + 1, used | low)

    extend(0, 0)
    return out


def _falling(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
    return out


def embedding_count(h: Graph, g: Graph) -> int:
    """Number of injective homomorphisms from ``h`` into ``g``."""
    if h.n > g.n:
        return 0
    pat = _Pattern(h)
    gadj = g.adj
    gdeg = g.degrees()
    memo: dict[tuple[int, int], int] = {}

    def rec(ci: int, avail: int) -> int:
        if ci == len(pat.parts):
            return _falling(avail.bit_count(), pat.isolated)
        key = (ci, avail)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for image, mult in _component_images(pat.parts[ci], gadj, gdeg, avail).items():
            total += mult * rec(ci + 1, avail & ~image)
        memo[key] = total
        return total

    return rec(0, g.vertex_mask)


def contains(h: Graph, g: Graph) -> bool:
    """True iff ``g`` has a (not necessarily induced) subgraph isomorphic to ``h``."""
    if h.n > g.n:
        return False
    if h.num_edges() > g.num_edges():
        return False
    pat = _Pattern(h)
    gadj = g.adj
    gdeg = g.degrees()
    failed: set[tuple[int, int]] = set()

    def rec(ci: int, avail: int) -> bool:
        if ci == len(pat.parts):
            return avail.bit_count() >= pat.isolated
        if (ci, avail) in failed:
            return False
        back, degs = pat.parts[ci]
        k = len(back)
        img = [0] * k
        tried: set[int] = set()

        def extend(i: int, used: int) -> bool:
            if i == k:
                if used in tried:
                    return False
                tried.add(used)
                return rec(ci + 1, avail & ~used)
            cand = avail & ~used
            for j in back[i]:
                cand &= gadj[img[j]]
            d = degs[i]
            while cand:
                low = cand & -cand
                x = low.bit_length() - 1
                cand ^= low
                if gdeg[x] < d:
                    continue
                img[i] = x
                if extend(i + 1, used | low):
                    return True
            return False

        if extend(0, 0):
            return True
        failed.add((ci, avail))
        return False

    return rec(0, g.vertex_mask)


def _extends_to_automorphism(h: Graph, fixed: list[tuple[int, int]], degs: list[int]) -> bool:
    n = h.n
    adj = h.adj
    phi = [-1] * n
    used = 0
    for a, b in fixed:
        phi[a] = b
        used |= 1 << b
    for a, b in fixed:
        for c, d in fixed:
            if (adj[a] >> c & 1) != (adj[b] >> d & 1):
                return False

    def search(assigned: int) -> bool:
        nonlocal used
        if assigned == (1 << n) - 1:
            return True
        # most constrained unassigned vertex first
        free = [v for v in range(n) if not assigned >> v & 1]
        x = max(free, key=lambda v: ((adj[v] & assigned).bit_count(), degs[v]))
        for w in range(n):
            if used >> w & 1 or degs[w] != degs[x]:
                continue
            ok = True
            for a in bits(assigned):
                if (adj[x] >> a & 1) != (adj[w] >> phi[a] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[x] = w
            used |= 1 << w
            if search(assigned | 1 << x):
                return True
            used &= ~(1 << w)
            phi[x] = -1
        return False

    assigned = 0
    for a, _ in fixed:
        assigned |= 1 << a
    return search(assigned)


@lru_cache(maxsize=4096)
def automorphism_count(h: Graph) -> int:
    """|Aut(h)| by orbit-stabiliser: orbit sizes along a chain of point stabilisers."""
    if h.n > AUT_MAX_N:
        raise SizeCap(f"automorphism_count supports n <= {AUT_MAX_N}, got {h.n}")
    degs = h.degrees()
    fixed: list[tuple[int, int]] = []
    total = 1
    for v in range(h.n):
        orbit = 0
        for w in range(h.n):
            if degs[w] != degs[v] or any(w == b for _, b in fixed):
                continue
            if _extends_to_automorphism(h, fixed + [(v, w)], degs):
                orbit += 1
        total *= orbit
        fixed.append((v, v))
    return total


def count_copies(h: Graph, g: Graph) -> int:
    """N(h, g): the number of unlabelled (non-induced) copies of ``h`` in ``g``."""
    if h.n > g.n:
        return 0
    emb = embedding_count(h, g)
    aut = automorphism_count(h)
    q, r = divmod(emb, aut)
    if r:
        raise InternalInconsistency(f"{emb} embeddings not divisible by |Aut| = {aut}")
    return q


def matching_count(t: int, g: Graph) -> int:
    return matching_profile(g)[t]


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0

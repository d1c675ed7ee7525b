import itertools
import random

import networkx as nx

from genturan.canon import canonical, canonical_form, canonical_graph6, is_isomorphic
from genturan.constructions import Complete, Cycle, Path, Star, build
from genturan.graph import Graph

from conftest import random_graph


def _brute_orbits(g):
    autos = [p for p in itertools.permutations(range(g.n)) if g.relabel(p) == g]
    return [min(p[v] for p in autos) for v in range(g.n)]


def test_certificate_invariant_under_relabeling(rng):
    for _ in range(300):
        n = rng.randint(1, 10)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical(g).certificate == canonical(g.relabel(perm)).certificate


def test_canonical_form_is_isomorphic_copy(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9))
        c = canonical(g)
        assert g.relabel(c.labeling) == canonical_form(g)


def test_distinguishes_against_networkx(rng):
    # pairs with equal degree sequences are the interesting ones
    checked = 0
    for _ in range(2000):
        n = rng.randint(4, 8)
        p = rng.random()
        g1, g2 = random_graph(rng, n, p), random_graph(rng, n, p)
        if sorted(g1.degrees()) != sorted(g2.degrees()):
            continue
        checked += 1
        a, b = nx.Graph(), nx.Graph()
        a.add_nodes_from(range(n))
        a.add_edges_from(g1.edges())
        b.add_nodes_from(range(n))
        b.add_edges_from(g2.edges())
        ref = nx.is_isomorphic(a, b)
        assert is_isomorphic(g1, g2) == ref
    assert checked > 50


def test_orbits_match_brute_force():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        assert canonical(g).orbits == _brute_orbits(g)


def test_generators_are_automorphisms(rng):
    for spec in (Cycle(8), Complete(6), Star(5), Path(7)):
        g = build(spec)
        for p in canonical(g).generators:
            assert g.relabel(p) == g


def test_highly_symmetric_graphs():
    petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] +
                                [(5 + i, 5 + (i + 2) % 5) for i in range(5)] +
                                [(i, i + 5) for i in range(5)])
    assert canonical(petersen).orbits == [0] * 10
    assert canonical_graph6(build(Complete(7))) == build(Complete(7)).to_graph6()
    assert canonical_graph6(Graph(0)) == "?"

import json
from math import comb

import pytest

from genturan.canon import canonical_graph6
from genturan.constructions import (
    CliqueUnion, Complete, Cycle, DisjointUnion, FaudreeSchelpG, Matching, Path, SplitH, Star, build,
)
from genturan.counting import count_copies, matching_profile
from genturan.enumeration import ex_brute
from genturan.errors import InvalidParams, SizeCap
from genturan.graph import Graph
from genturan.theorems import (
    FAILS, HOLDS, HOLDS_FROM, THEOREM_IDS, VerificationReport, check_lemma2, check_prop1_upper,
    check_prop3_strict, faudree_schelp_literal, faudree_schelp_value, lemma2_sides, mindeg_case,
    path_split, plan_runs, prop3_margin, prop4_family, run_verification, verify_b_param,
    verify_faudree_schelp, verify_liu_zhang, verify_mindeg_prop, verify_path, verify_prop1,
    verify_prop3, verify_prop4, verify_star, verify_tau_prop,
)


def g(spec):
    return build(spec)


# -- closed forms ------------------------------------------------------------------

def test_path_split_keeps_b_below_k_minus_1():
    assert path_split(7, 4) == (2, 1)
    assert path_split(6, 4) == (2, 0)
    for n in range(1, 30):
        for k in range(3, 8):
            a, b = path_split(n, k)
            assert n == a * (k - 1) + b and 0 <= b <= k - 2


def test_faudree_schelp_examples():
    value, specs = faudree_schelp_value(7, 4)
    assert value == 6
    assert canonical_graph6(g(DisjointUnion(Complete(3), Complete(3), Complete(1)))) in \
        {canonical_graph6(g(s)) for s in specs}
    assert faudree_schelp_value(5, 4)[0] == 4
    for k in range(3, 8):
        value, specs = faudree_schelp_value(k - 1, k)
        assert value == comb(k - 1, 2)
        assert g(specs[0]) == g(Complete(k - 1))


def test_faudree_schelp_ties_have_full_edge_count():
    for k in (4, 6, 8):
        for n in range(1, 20):
            value, specs = faudree_schelp_value(n, k)
            for s in specs:
                assert g(s).num_edges() == value


def test_literal_tie_list_names_non_extremal_graphs():
    # b in {k/2, k/2 + 1} read literally lists G(6,4,0) with 5 edges while ex(6, P_4) = 6
    value, _ = faudree_schelp_value(6, 4)
    literal = faudree_schelp_literal(6, 4)
    assert FaudreeSchelpG(6, 4, 0) in literal
    assert g(FaudreeSchelpG(6, 4, 0)).num_edges() == 5 < value == ex_brute(6, Matching(1), Path(4)).value


def test_prop4_families():
    assert prop4_family(3, "i") == [Matching(1)]
    assert prop4_family(8, "i") == [Complete(4), Matching(4)]
    fam = prop4_family(7, "ii")
    assert [g(s).n for s in fam] == [7, 6, 7]   # padded with isolated vertices when counted
    assert g(fam[-1]).num_edges() == 9


# -- verifiers ----------------------------------------------------------------------

def test_prop4_i_holds_for_t_at_least_2():
    rep = verify_prop4(9, 3, "i")
    rows = [r for r in rep.details if r["t"] >= 2]
    assert all(r["ok"] for r in rows)
    wins = {(r["t"], r["n"]) for r in rows if r.get("k4_wins")}
    assert wins == {(2, 4), (2, 5)}
    # with single edges K_4 (6 edges) beats M_{n/2} at every n in range
    assert {r["n"] for r in rep.details if r["t"] == 1 and r.get("k4_wins")} == set(range(4, 10))


def test_prop4_i_fails_for_single_edges():
    # t = 1 asks for ex(n, K_2 + P_3); a triangle and large stars beat the two candidates
    rep = verify_prop4(9, 1, "i")
    assert rep.status == FAILS
    bad = {r["n"]: r for r in rep.details if not r["ok"]}
    assert sorted(bad) == [3, 8, 9]
    assert bad[3]["oracle"] == 3 and bad[3]["formula"] == 1
    assert bad[8]["oracle"] == 7 and bad[8]["formula"] == 6
    assert rep.witness == canonical_graph6(g(Complete(3)))


def test_prop4_examples():
    rep = verify_prop4(5, 2, "i")
    row = next(r for r in rep.details if (r["n"], r["t"]) == (5, 2))
    assert row["formula"] == row["oracle"] == 3
    rep = verify_prop4(8, 2, "i")
    row = next(r for r in rep.details if (r["n"], r["t"]) == (8, 2))
    assert row["formula"] == row["oracle"] == 6


def test_prop4_ii_holds():
    assert verify_prop4(9, 3, "ii").status == HOLDS


def test_star_examples():
    rep = verify_star(6, 3, 2)
    row = rep.details[-1]
    assert row["oracle"] == 9 == row["almost_regular_max"]
    assert count_copies(g(Matching(2)), g(Cycle(6))) == 9
    assert count_copies(g(Matching(2)), g(DisjointUnion(Complete(3), Complete(3)))) == 9
    rep = verify_star(8, 3, 1)
    assert all(r["oracle"] == (2 * r["n"]) // 2 for r in rep.details if r["n"] >= 3)


@pytest.mark.parametrize("r", [3, 4])
def test_star_thresholds_come_from_small_orders(r):
    for t in (1, 2, 3):
        rep = verify_star(8, r, t)
        assert rep.status == HOLDS_FROM and rep.n0 == r
        # below r vertices no almost (r-1)-regular graph exists
        assert all(r_["almost_regular_classes"] == 0 for r_ in rep.details if r_["n"] < r)


def test_star_remark_cycle_beats_triangles():
    assert matching_profile(g(Cycle(9)))[3] == 30
    assert matching_profile(g(DisjointUnion(Complete(3), Complete(3), Complete(3))))[3] == 27
    assert ex_brute(9, Matching(3), Star(3)).value == 30


def test_faudree_schelp_verification():
    for k in (3, 4, 5, 6):
        assert verify_faudree_schelp(9, k).status == HOLDS


def test_path_theorem():
    rep = verify_path(9, 4, 2)
    assert rep.status == HOLDS_FROM and rep.n0 == 5
    assert verify_path(9, 5, 2).status == HOLDS_FROM
    # P_3-free graphs are matchings
    rep = verify_path(9, 3, 2)
    assert rep.n0 == 1
    assert all(r["oracle"] == comb(r["n"] // 2, 2) for r in rep.details)
    # t = 1 is the edge count
    rep = verify_path(9, 4, 1)
    assert all(r["formula"] == faudree_schelp_value(r["n"], 4)[0] for r in rep.details)


def test_tau_prop():
    assert count_copies(g(Star(3)), g(SplitH(6, 3, 1))) == 10
    assert ex_brute(6, Star(3), Matching(2)).value == 10
    rep = verify_tau_prop(g(Star(3)), 2, 9, h_label="S3")
    assert rep.status == HOLDS_FROM and rep.params["h"] == "S3"
    rep = verify_tau_prop(g(Complete(2)), 2, 8)
    assert all(r["oracle"] == r["n"] - 1 for r in rep.details if r["n"] >= 4)
    with pytest.raises(InvalidParams):
        verify_tau_prop(g(Complete(3)), 2, 6)
    with pytest.raises(InvalidParams):
        verify_tau_prop(g(Path(3)).add_isolated(1), 2, 6)


def test_mindeg_prop():
    assert mindeg_case(g(Complete(3)), 2) == "i"
    assert verify_mindeg_prop(g(Complete(3)), 2, 9).status == HOLDS
    rep = verify_mindeg_prop(g(Complete(4)), 3, 9)
    assert rep.status == HOLDS and {r["formula"] for r in rep.details} == {5}
    # P_3 has two vertices of degree 1, so neither case applies for s = 2
    assert mindeg_case(g(Path(3)), 2) is None
    with pytest.raises(InvalidParams):
        verify_mindeg_prop(g(Path(3)), 2, 6)
    # K_5 minus two edges at one vertex: one vertex of degree s - 1 = 2, the rest >= 3
    h = g(Complete(5)).delete_edge(4, 0).delete_edge(4, 1)
    assert mindeg_case(h, 3) == "ii"
    rep = verify_mindeg_prop(h, 3, 9)
    assert rep.status == HOLDS and {r["oracle"] for r in rep.details} == {30}


def test_liu_zhang():
    for h, s in ((Star(3), 2), (Path(3), 2), (Complete(3), 2), (Complete(4), 3)):
        assert verify_liu_zhang(g(h), s, 9).status == HOLDS
    with pytest.raises(InvalidParams):
        verify_liu_zhang(g(Path(4)), 2, 6)


def test_prop1_examples():
    assert check_prop1_upper(7, 2, g(Path(4)))
    assert check_prop1_upper(8, 2, g(Star(3)))
    rep = verify_prop1(g(Path(4)), 7, 1)
    assert all(r["ex_matching"] == r["ex_edges"] for r in rep.details)


def test_prop3():
    f = g(DisjointUnion(Path(3), Path(3)))
    assert check_prop3_strict(f, 2, 8)
    assert prop3_margin(f, 2, 8) > 0
    with pytest.raises(InvalidParams):
        prop3_margin(f, 1, 8)
    with pytest.raises(InvalidParams):
        prop3_margin(g(Cycle(3)), 2, 6)
    assert verify_prop3(f, 2, [8, 9]).status == HOLDS


def test_lemma2_examples():
    assert lemma2_sides(g(Complete(6)), 2) == (90, 200)
    assert lemma2_sides(g(Cycle(8)), 2) == (40, 60)
    assert lemma2_sides(g(Matching(4)), 2) == (12, 1 * 3 + 3 * 4)
    assert check_lemma2(g(Complete(6)), 3)
    with pytest.raises(InvalidParams):
        lemma2_sides(g(Path(3)).add_isolated(1), 2)
    with pytest.raises(InvalidParams):
        lemma2_sides(g(Cycle(5)), 1)


def test_b_param_small():
    rep = verify_b_param(5, 3)
    assert rep.status == HOLDS and sum(r["tau_cases"] for r in rep.details) > 0


# -- reports and dispatch ----------------------------------------------------------------

def test_report_labels_and_json():
    rep = VerificationReport("PATH_THM", {"k": 4}, HOLDS_FROM, n0=5)
    assert rep.label() == "HOLDS_FROM(5)" and rep.ok
    rep = VerificationReport("PROP4_I", {}, FAILS, witness="Bw")
    assert rep.label() == "FAILS(Bw)" and not rep.ok
    d = json.loads(rep.to_json())
    assert sorted(d) == ["details", "extra", "n0", "params", "status", "theorem_id", "witness"]


def test_dispatch():
    rep = run_verification("TAU_PROP", {"h": "S3", "s": 2, "n_max": 6})
    assert rep.status == HOLDS_FROM and rep.params["h"] == "S3"
    with pytest.raises(InvalidParams):
        run_verification("PATH_THM", {"n_max": 6, "k": 4, "t": 2, "h": "K3"})
    with pytest.raises(SizeCap):
        run_verification("PROP4_I", {"n_max": 11, "t_max": 2})


def test_plan_runs_is_sorted_and_covers_every_id():
    runs = plan_runs(THEOREM_IDS, {})
    assert {tid for tid, _ in runs} == set(THEOREM_IDS)
    keys = [(tid, json.dumps(p, sort_keys=True)) for tid, p in runs]
    assert keys == sorted(keys)
    runs = plan_runs(["STAR_THM"], {"r": 3})
    assert len(runs) == 3 and all(p["r"] == 3 for _, p in runs)

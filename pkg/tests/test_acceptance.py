"""Acceptance criteria 1-12, each at its stated tolerance (all exact).

Every criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
"""

import random
import subprocess
import sys

from genturan.constructions import Complete, Cycle, DisjointUnion, Matching, Path, Star, build
from genturan.counting import count_copies, matching_profile
from genturan.enumeration import ex_brute, graph_classes
from genturan.graph import Graph
from genturan.structure import berge_tutte_witness, deficiency, matching_number
from genturan.theorems import (
    FAILS, HOLDS, HOLDS_FROM, run_verification, verify_b_param, verify_faudree_schelp, verify_lemma2,
    verify_liu_zhang, verify_mindeg_prop, verify_path, verify_prop4, verify_star,
    verify_tau_prop,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = (ok, detail)
    assert ok, f"criterion {k}: {detail}"


def summary_lines() -> list[str]:
    return [f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}" for k, (ok, detail) in sorted(RESULTS.items())]


def test_criterion_01_matching_recurrence():
    checked = 0
    bad = []
    for n in range(0, 8):
        for g in graph_classes(n):
            prof = matching_profile(g)
            for u, v in g.edges():
                a = matching_profile(g.delete_edge(u, v))
                b = matching_profile(g.delete_vertices(u, v))
                for t in range(1, 4):
                    checked += 1
                    if prof[t] != a[t] + b[t - 1]:
                        bad.append((g.to_graph6(), (u, v), t))
    record(1, not bad, f"{checked} (graph, edge, t) identities on all graphs with n <= 7; {len(bad)} mismatches")


def test_criterion_02_oracle_agreement():
    rng = random.Random(1)
    bad = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        p = rng.random()
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
        prof = matching_profile(g)
        for t in range(1, 5):
            if count_copies(build(Matching(t)), g) != prof[t]:
                bad += 1
    record(2, bad == 0, f"count_copies(M_t, G) vs profile on 1000 random graphs, t <= 4; {bad} mismatches")


def test_criterion_03_tutte_berge():
    bad = []
    total = 0
    for n in range(0, 9):
        for g in graph_classes(n):
            total += 1
            nu = matching_number(g)
            d, _ = deficiency(g)
            if 2 * nu != n - d:
                bad.append(g.to_graph6())
            for s in range(1, 5):
                if (berge_tutte_witness(g, s) is not None) != (nu < s):
                    bad.append(g.to_graph6())
    record(3, not bad, f"{total} graphs with n <= 8, s <= 4; {len(bad)} failures")


def test_criterion_04_b_parameter():
    rep = verify_b_param(6, 3)
    tau = sum(r["tau_cases"] for r in rep.details)
    record(4, rep.status == HOLDS, f"b(H,s) two ways for all H on <= 6 vertices, s <= 3 ({tau} tau cases): {rep.label()}")


def test_criterion_05_faudree_schelp():
    reps = [verify_faudree_schelp(9, k) for k in (3, 4, 5, 6)]
    ties = sum(len(r["listed"]) - 1 for rep in reps for r in rep.details)
    ok = all(rep.status == HOLDS for rep in reps)
    record(5, ok, f"n <= 9, k = 3..6, value and extremal sets ({ties} G_(n,k,l) ties): "
           + ", ".join(f"k={rep.params['k']} {rep.label()}" for rep in reps))


def test_criterion_06_prop4_i():
    rep = verify_prop4(9, 3, "i")
    wins = sorted((r["t"], r["n"]) for r in rep.details if r.get("k4_wins"))
    bad = [(r["n"], r["t"], r["oracle"], r["formula"]) for r in rep.details if not r["ok"]]
    ok = rep.status == HOLDS and wins == [(2, 4), (2, 5)]
    record(6, ok, f"n <= 9, t <= 3: {rep.label()}; mismatches (n, t, oracle, formula) {bad}; K4 wins at (t, n) {wins}")


def test_criterion_07_prop4_ii():
    rep = verify_prop4(9, 3, "ii")
    record(7, rep.status == HOLDS, f"n <= 9, t <= 3: {rep.label()}")


def test_criterion_08_star():
    problems = []
    for r in (3, 4):
        for t in (1, 2, 3):
            rep = verify_star(8, r, t)
            for row in rep.details:
                # the comparison is meaningful wherever an almost (r-1)-regular graph exists
                if row["almost_regular_classes"] and row["almost_regular_max"] != row["oracle"]:
                    problems.append((r, t, row["n"]))
            if rep.status == FAILS:
                problems.append((r, t, rep.label()))
    c9 = matching_profile(build(Cycle(9)))[3]
    tri = matching_profile(build(DisjointUnion(Complete(3), Complete(3), Complete(3))))[3]
    top = ex_brute(9, Matching(3), Star(3)).value
    ok = not problems and (c9, tri, top) == (30, 27, 30)
    record(8, ok, f"r in {{3,4}}, t <= 3, n <= 8 problems {problems}; n=9 r=3 t=3: C9 {c9}, 3K3 {tri}, oracle {top}")


def test_criterion_09_path():
    reps = [verify_path(9, k, 2) for k in (4, 5)]
    ok = all(rep.status == HOLDS_FROM and rep.n0 <= 9 for rep in reps)
    record(9, ok, ", ".join(f"k={rep.params['k']} {rep.label()}" for rep in reps))


def test_criterion_10_matching_forbidden():
    out = []
    ok = True
    # tau(H) <= s - 1: claimed for n sufficiently large, so HOLDS_FROM is allowed
    for h, s in ((Star(3), 2), (Path(3), 2)):
        rep = verify_tau_prop(build(h), s, 9)
        ok &= rep.status in (HOLDS, HOLDS_FROM)
        out.append(f"tau {h},{s} {rep.label()}")
    # minimum degree statement: claimed for every n >= 2s - 1
    for h, s in ((Complete(3), 2), (Complete(4), 3)):
        rep = verify_mindeg_prop(build(h), s, 9)
        ok &= rep.status == HOLDS
        out.append(f"mindeg {h},{s} {rep.label()}")
    # complete multipartite H: every n >= 2s - 1
    for h, s in ((Star(3), 2), (Path(3), 2), (Complete(3), 2), (Complete(4), 3)):
        rep = verify_liu_zhang(build(h), s, 9)
        ok &= rep.status == HOLDS
        out.append(f"multipartite {h},{s} {rep.label()}")
    record(10, ok, "; ".join(out))


def test_criterion_11_lemma2_and_prop1():
    lem = verify_lemma2(7, (2, 3))
    reps = [run_verification("PROP1_UB", {"f": f, "n_max": 8, "t_max": 3}) for f in ("P3", "P4", "S3", "K3")]
    ok = lem.status == HOLDS and all(r.status == HOLDS for r in reps)
    checked = sum(r["checked"] for r in lem.details)
    record(11, ok, f"LEMMA2 on {checked} (graph, t) pairs: {lem.label()}; PROP1_UB "
           + ", ".join(f"{r.params['f']} {r.label()}" for r in reps))


def test_criterion_12_determinism(tmp_path):
    outs = []
    for w in ("1", "4"):
        target = tmp_path / f"verify-w{w}.json"
        subprocess.run([sys.executable, "-m", "genturan.cli", "verify", "ALL", "--workers", w,
                        "--output", str(target)], check=False, capture_output=True)
        outs.append(target.read_bytes())
    same = outs[0] == outs[1] and len(outs[0]) > 0
    record(12, same, f"verify ALL with 1 and 4 workers: {len(outs[0])} bytes each, identical={same}")


if __name__ == "__main__":
    import tempfile
    import pathlib

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(pathlib.Path(d))
                else:
                    fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))

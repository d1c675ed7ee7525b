"""Closed forms and per-theorem checks against the brute-force oracle.

Each ``verify_*`` returns a :class:`VerificationReport`.  Statements claimed
for every n in range report ``HOLDS`` or ``FAILS``; statements claimed only
for large n report ``HOLDS_FROM`` with the least n from which the formula
matches through the top of the tested range, and ``FAILS`` when the top
itself disagrees.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb, factorial
from typing import Optional, Sequence

from .canon import canonical_graph6
from .constructions import (
    CliqueUnion, Complete, DisjointUnion, FaudreeSchelpG, Friendship, Matching, Path,
    SplitH, Star, build, is_almost_regular, is_complete_multipartite, padded,
)
from .counting import count_copies, matching_profile
from .enumeration import copy_counter, ex_over_family, graph_classes
from .errors import InvalidParams
from .graph import Graph
from .structure import b_from_partitions, b_param_blowup, independence_number, matching_number, vertex_cover_number

THEOREM_IDS = (
    "PROP1_UB", "LEMMA2", "PROP3_STRICT", "PROP4_I", "PROP4_II", "STAR_THM",
    "FAUDREE_SCHELP", "PATH_THM", "TAU_PROP", "MINDEG_PROP", "LIU_ZHANG", "B_PARAM_AGREE",
)

HOLDS = "HOLDS"
FAILS = "FAILS"
HOLDS_FROM = "HOLDS_FROM"


@dataclass
class VerificationReport:
    theorem_id: str
    params: dict
    status: str
    n0: Optional[int] = None
    witness: Optional[str] = None
    details: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    def label(self) -> str:
        if self.status == HOLDS_FROM:
            return f"HOLDS_FROM({self.n0})"
        if self.status == FAILS:
            return f"FAILS({self.witness})"
        return HOLDS

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _exact(theorem_id: str, params: dict, rows: list[dict], **extra) -> VerificationReport:
    bad = [r for r in rows if not r["ok"]]
    if bad:
        return VerificationReport(theorem_id, params, FAILS, witness=bad[0].get("witness"),
                                  details=rows, extra=extra)
    return VerificationReport(theorem_id, params, HOLDS, details=rows, extra=extra)


def _threshold(key: str, rows: list[dict]) -> Optional[int]:
    """Least n such that every row with n' >= n has ``row[key]`` true; None if the top fails."""
    n0 = None
    for r in sorted(rows, key=lambda r: r["n"], reverse=True):
        if not r[key]:
            break
        n0 = r["n"]
    if n0 is None:
        return None
    top = max(r["n"] for r in rows)
    if any(not r[key] for r in rows if r["n"] >= n0 and r["n"] <= top):
        return None
    return n0


def _large_n(theorem_id: str, params: dict, rows: list[dict], **extra) -> VerificationReport:
    if not rows:
        raise InvalidParams("empty parameter range")
    n0 = _threshold("ok", rows)
    if n0 is None:
        top = max(r["n"] for r in rows)
        bad = [r for r in rows if r["n"] == top and not r["ok"]]
        return VerificationReport(theorem_id, params, FAILS, witness=bad[0].get("witness"),
                                  details=rows, extra=extra)
    return VerificationReport(theorem_id, params, HOLDS_FROM, n0=n0, details=rows, extra=extra)


def _oracle(n: int, h: Graph, f: Graph, workers: int) -> tuple[int, list[Graph], int]:
    classes = graph_classes(n, f, workers)
    count = copy_counter(h)
    vals = [count(g) for g in classes]
    top = max(vals, default=0)
    return top, [g for g, v in zip(classes, vals) if v == top], len(classes)


def _mismatch_witness(oracle: int, formula: int, extremal: list[Graph], candidate: Optional[Graph]):
    if oracle > formula and extremal:
        return canonical_graph6(extremal[0])
    if candidate is not None:
        return candidate.to_graph6()
    return None


def _matching(t: int) -> Graph:
    return build(Matching(t))


# -- closed forms ------------------------------------------------------------

def path_split(n: int, k: int) -> tuple[int, int]:
    """n = a(k-1) + b with 0 <= b <= k-2 (a maximised)."""
    return divmod(n, k - 1)


def faudree_schelp_value(n: int, k: int) -> tuple[int, list]:
    """ex(n, P_k) and the list of extremal constructions.

    Besides aK_{k-1} + K_b, the graphs G_{n,k,l} (0 <= l <= a) are extremal
    exactly when k is even and b is k/2 - 1 or k/2; an edge count shows that
    these are the residues where K_{(k-2)/2} joined to b - (k-2)/2 vertices
    matches C(b, 2).
    """
    if k < 3 or n < 1:
        raise InvalidParams("requires k >= 3 and n >= 1")
    a, b = path_split(n, k)
    value = a * comb(k - 1, 2) + comb(b, 2)
    specs: list = [CliqueUnion(a, k, b)]
    if k % 2 == 0 and b in (k // 2 - 1, k // 2):
        h = (k - 2) // 2
        for l in range(a + 1):
            if n >= l * (k - 1) + h:
                specs.append(FaudreeSchelpG(n, k, l))
    return value, specs


def faudree_schelp_literal(n: int, k: int) -> list:
    """The tie list read literally with b in {k/2, k/2 + 1} and 0 <= b < k (kept for comparison)."""
    specs = []
    if k % 2 == 0:
        h = (k - 2) // 2
        for a in range(n // (k - 1) + 1):
            b = n - a * (k - 1)
            if b in (k // 2, k // 2 + 1) and b < k:
                specs += [FaudreeSchelpG(n, k, l) for l in range(a + 1) if n >= l * (k - 1) + h]
    return specs


def prop4_family(n: int, part: str) -> list:
    """Candidate constructions of the K_2+P_3 (part "i") or 2P_3 (part "ii") statement that fit in n vertices."""
    if part == "i":
        fam = [Complete(4)] if n >= 4 else []
        return fam + [Matching(n // 2)]
    if part == "ii":
        fam = []
        if n >= 5:
            fam.append(DisjointUnion(Complete(5), Matching((n - 5) // 2)))
        if n >= 4:
            fam.append(DisjointUnion(Complete(4), Matching((n - 4) // 2)))
        return fam + [Friendship(n)]
    raise ValueError(f"unknown part {part!r}")


PROP4_FORBIDDEN = {
    "i": DisjointUnion(Complete(2), Path(3)),
    "ii": DisjointUnion(Path(3), Path(3)),
}


# -- verifications -------------------------------------------------------------

def verify_prop4(n_max: int, t_max: int, part: str = "i", workers: int = 1) -> VerificationReport:
    f = build(PROP4_FORBIDDEN[part])
    rows = []
    for n in range(1, n_max + 1):
        for t in range(1, t_max + 1):
            h = _matching(t)
            formula, arg = ex_over_family(n, h, prop4_family(n, part))
            oracle, ext, searched = _oracle(n, h, f, workers)
            ok = formula == oracle
            row = {"n": n, "t": t, "formula": formula, "argmax": str(arg), "oracle": oracle,
                   "searched": searched, "ok": ok}
            if part == "i" and n >= 4:
                row["k4_wins"] = matching_profile(build(Complete(4)))[t] > comb(n // 2, t)
            if not ok:
                row["witness"] = _mismatch_witness(oracle, formula, ext, padded(arg, n))
            rows.append(row)
    tid = "PROP4_I" if part == "i" else "PROP4_II"
    return _exact(tid, {"n_max": n_max, "t_max": t_max}, rows)


def verify_star(n_max: int, r: int, t: int, workers: int = 1) -> VerificationReport:
    if r < 2 or t < 1:
        raise InvalidParams("requires r >= 2 and t >= 1")
    f = build(Star(r))
    count = copy_counter(_matching(t))
    rows = []
    for n in range(1, n_max + 1):
        classes = graph_classes(n, f, workers)
        vals = [count(g) for g in classes]
        oracle = max(vals, default=0)
        regular = [v for g, v in zip(classes, vals) if is_almost_regular(g, r - 1)]
        others = [v for g, v in zip(classes, vals) if not is_almost_regular(g, r - 1)]
        reg_max = max(regular) if regular else None
        ok = reg_max == oracle
        strict = ok and all(v < oracle for v in others)
        row = {"n": n, "oracle": oracle, "almost_regular_max": reg_max, "almost_regular_classes": len(regular),
               "searched": len(classes), "ok": ok, "strict": strict}
        if not ok:
            best = [g for g, v in zip(classes, vals) if v == oracle]
            row["witness"] = canonical_graph6(best[0])
        rows.append(row)
    report = _large_n("STAR_THM", {"n_max": n_max, "r": r, "t": t}, rows)
    strict_from = _threshold("strict", rows)
    report.extra["strict_from"] = strict_from
    if report.status != FAILS and strict_from is None:
        top = rows[-1]
        classes = graph_classes(top["n"], f, workers)
        tied = [g for g in classes if not is_almost_regular(g, r - 1) and count(g) == top["oracle"]]
        report.status, report.n0 = FAILS, None
        report.witness = canonical_graph6(tied[0]) if tied else None
    return report


def verify_faudree_schelp(n_max: int, k: int, workers: int = 1) -> VerificationReport:
    f = build(Path(k))
    h = _matching(1)
    rows = []
    for n in range(1, n_max + 1):
        value, specs = faudree_schelp_value(n, k)
        listed = sorted({canonical_graph6(build(s)) for s in specs})
        oracle, ext, searched = _oracle(n, h, f, workers)
        found = sorted(canonical_graph6(g) for g in ext)
        ok = value == oracle and listed == found
        row = {"n": n, "formula": value, "oracle": oracle, "listed": listed, "found": found,
               "searched": searched, "ok": ok}
        if not ok:
            extra_found = sorted(set(found) - set(listed))
            row["witness"] = extra_found[0] if extra_found else sorted(set(listed) - set(found))[0]
        rows.append(row)
    return _exact("FAUDREE_SCHELP", {"n_max": n_max, "k": k}, rows)


def verify_path(n_max: int, k: int, t: int, workers: int = 1) -> VerificationReport:
    if k < 3 or t < 1:
        raise InvalidParams("requires k >= 3 and t >= 1")
    f = build(Path(k))
    h = _matching(t)
    rows = []
    for n in range(1, n_max + 1):
        a, b = path_split(n, k)
        cand = build(CliqueUnion(a, k, b))
        formula = matching_profile(cand)[t]
        oracle, ext, searched = _oracle(n, h, f, workers)
        ok = formula == oracle
        row = {"n": n, "a": a, "b": b, "formula": formula, "oracle": oracle, "searched": searched, "ok": ok}
        if not ok:
            row["witness"] = _mismatch_witness(oracle, formula, ext, cand)
        rows.append(row)
    return _large_n("PATH_THM", {"n_max": n_max, "k": k, "t": t}, rows)


def _no_isolated(h: Graph) -> None:
    if h.n == 0 or any(row == 0 for row in h.adj):
        raise InvalidParams("H must be non-empty without isolated vertices")


def verify_tau_prop(h: Graph, s: int, n_max: int, workers: int = 1, h_label: Optional[str] = None) -> VerificationReport:
    _no_isolated(h)
    if s < 2:
        raise InvalidParams("requires s >= 2")
    tau = vertex_cover_number(h)
    if tau > s - 1:
        raise InvalidParams(f"tau(H) = {tau} exceeds s - 1 = {s - 1}")
    f = _matching(s)
    rows = []
    for n in range(2 * s - 1, n_max + 1):
        cand = build(SplitH(n, 2 * s - 1, s - 1))
        formula = count_copies(h, cand)
        oracle, ext, searched = _oracle(n, h, f, workers)
        ok = formula == oracle
        row = {"n": n, "formula": formula, "oracle": oracle, "searched": searched, "ok": ok}
        if not ok:
            row["witness"] = _mismatch_witness(oracle, formula, ext, cand)
        rows.append(row)
    params = {"h": h_label or h.to_graph6(), "s": s, "n_max": n_max}
    return _large_n("TAU_PROP", params, rows, tau=tau)


def mindeg_case(h: Graph, s: int) -> Optional[str]:
    degs = h.degrees()
    low = [d for d in degs if d < s]
    if not low:
        return "i"
    if len(low) == 1 and low[0] == s - 1:
        return "ii"
    return None


def verify_mindeg_prop(h: Graph, s: int, n_max: int, workers: int = 1, h_label: Optional[str] = None) -> VerificationReport:
    case = mindeg_case(h, s)
    if case is None or s < 1:
        raise InvalidParams("H has neither all degrees >= s nor exactly one vertex of degree s - 1 and the rest >= s")
    f = _matching(s)
    rows = []
    for n in range(2 * s - 1, n_max + 1):
        family = [Complete(2 * s - 1)]
        if case == "ii":
            family = [SplitH(n, 2 * s - 1, s - 1), Complete(2 * s - 1)]
        formula, arg = ex_over_family(n, h, family)
        oracle, ext, searched = _oracle(n, h, f, workers)
        ok = formula == oracle
        row = {"n": n, "formula": formula, "argmax": str(arg), "oracle": oracle, "searched": searched, "ok": ok}
        if not ok:
            row["witness"] = _mismatch_witness(oracle, formula, ext, padded(arg, n))
        rows.append(row)
    params = {"h": h_label or h.to_graph6(), "s": s, "n_max": n_max}
    return _exact("MINDEG_PROP", params, rows, case=case)


def verify_liu_zhang(h: Graph, s: int, n_max: int, workers: int = 1, h_label: Optional[str] = None) -> VerificationReport:
    if not is_complete_multipartite(h):
        raise InvalidParams("H is not complete multipartite")
    if s < 1:
        raise InvalidParams("requires s >= 1")
    f = _matching(s)
    rows = []
    for n in range(2 * s - 1, n_max + 1):
        family = [Complete(2 * s - 1), SplitH(n, 2 * s - 1, s - 1)]
        formula, arg = ex_over_family(n, h, family)
        oracle, ext, searched = _oracle(n, h, f, workers)
        ok = formula == oracle
        row = {"n": n, "formula": formula, "argmax": str(arg), "oracle": oracle, "searched": searched, "ok": ok}
        if not ok:
            row["witness"] = _mismatch_witness(oracle, formula, ext, padded(arg, n))
        rows.append(row)
    params = {"h": h_label or h.to_graph6(), "s": s, "n_max": n_max}
    return _exact("LIU_ZHANG", params, rows)


def check_prop1_upper(n: int, t: int, f: Graph, workers: int = 1) -> bool:
    """t! * ex(n, M_t, F) <= ex(n, F)^t, compared in integers."""
    lhs, _, _ = _oracle(n, _matching(t), f, workers)
    edges, _, _ = _oracle(n, _matching(1), f, workers)
    return factorial(t) * lhs <= edges ** t


def verify_prop1(f: Graph, n_max: int, t_max: int, workers: int = 1, f_label: Optional[str] = None) -> VerificationReport:
    rows = []
    for n in range(1, n_max + 1):
        edges, ext1, _ = _oracle(n, _matching(1), f, workers)
        for t in range(1, t_max + 1):
            val, ext, searched = _oracle(n, _matching(t), f, workers)
            ok = factorial(t) * val <= edges ** t
            row = {"n": n, "t": t, "ex_matching": val, "ex_edges": edges, "ok": ok}
            if not ok:
                row["witness"] = canonical_graph6(ext[0])
            rows.append(row)
    params = {"f": f_label or f.to_graph6(), "n_max": n_max, "t_max": t_max}
    return _exact("PROP1_UB", params, rows)


def _components(f: Graph) -> list[Graph]:
    return [f.induced(c) for c in f.components()]


def prop3_margin(f: Graph, t: int, n: int, workers: int = 1) -> int:
    """ex(n, F)^t - t! * ex(n, M_t, F) after checking the forest hypotheses at this n."""
    if t < 2:
        raise InvalidParams("requires t >= 2")
    if not f.is_forest():
        raise InvalidParams("F must be a forest")
    edges, _, _ = _oracle(n, _matching(1), f, workers)
    for comp in _components(f):
        if comp.n == 1:
            continue
        e_comp, _, _ = _oracle(n, _matching(1), comp, workers)
        if not e_comp < edges:
            raise InvalidParams(f"component {comp.to_graph6()} has ex = {e_comp}, not below ex(n, F) = {edges}")
    val, _, _ = _oracle(n, _matching(t), f, workers)
    return edges ** t - factorial(t) * val


def check_prop3_strict(f: Graph, t: int, n: int, workers: int = 1) -> bool:
    return prop3_margin(f, t, n, workers) > 0


def verify_prop3(f: Graph, t: int, ns: Sequence[int], workers: int = 1, f_label: Optional[str] = None) -> VerificationReport:
    rows = []
    for n in ns:
        margin = prop3_margin(f, t, n, workers)
        rows.append({"n": n, "t": t, "margin": margin, "ok": margin > 0})
    params = {"f": f_label or f.to_graph6(), "t": t, "ns": list(ns)}
    return _exact("PROP3_STRICT", params, rows)


def lemma2_sides(g: Graph, t: int) -> tuple[int, int]:
    """(t! N(M_t, G), delta (|E| - delta)^(t-1) + (|E| - delta) |E|^(t-1))."""
    delta = g.min_degree()
    if g.n == 0 or delta < 1:
        raise InvalidParams("requires minimum degree at least 1")
    if t < 2:
        raise InvalidParams("requires t >= 2")
    e = g.num_edges()
    lhs = factorial(t) * matching_profile(g)[t]
    rhs = delta * (e - delta) ** (t - 1) + (e - delta) * e ** (t - 1)
    return lhs, rhs


def check_lemma2(g: Graph, t: int) -> bool:
    lhs, rhs = lemma2_sides(g, t)
    return lhs <= rhs


def verify_lemma2(n_max: int, ts: Sequence[int] = (2, 3), workers: int = 1) -> VerificationReport:
    rows = []
    for n in range(2, n_max + 1):
        graphs = [g for g in graph_classes(n, None, workers) if g.min_degree() >= 1]
        for t in ts:
            bad = [g for g in graphs if not check_lemma2(g, t)]
            row = {"n": n, "t": t, "checked": len(graphs), "ok": not bad}
            if bad:
                row["witness"] = canonical_graph6(bad[0])
            rows.append(row)
    return _exact("LEMMA2", {"n_max": n_max, "ts": list(ts)}, rows)


def verify_b_param(n_max: int, s_max: int, workers: int = 1) -> VerificationReport:
    rows = []
    for n in range(1, n_max + 1):
        graphs = graph_classes(n, None, workers)
        for s in range(1, s_max + 1):
            bad = []
            tau_cases = 0
            for h in graphs:
                b1 = b_from_partitions(h, s) if matching_number(h) <= s - 1 else None
                b2 = b_param_blowup(h, s, 2 * s)
                good = b1 == b2
                if vertex_cover_number(h) <= s - 1:
                    tau_cases += 1
                    good = good and b1 == independence_number(h)
                if not good:
                    bad.append(h)
            row = {"n": n, "s": s, "checked": len(graphs), "tau_cases": tau_cases, "ok": not bad}
            if bad:
                row["witness"] = canonical_graph6(bad[0])
            rows.append(row)
    return _exact("B_PARAM_AGREE", {"n_max": n_max, "s_max": s_max}, rows)


# -- dispatch -------------------------------------------------------------------

# default parameter boxes; every theorem id maps to one or more runs
DEFAULT_BOXES: dict[str, list[dict]] = {
    "PROP1_UB": [{"f": f, "n_max": 8, "t_max": 3} for f in ("P3", "P4", "S3", "K3", "K2+P3")],
    "LEMMA2": [{"n_max": 7, "ts": [2, 3]}],
    "PROP3_STRICT": [{"f": "2P3", "t": 2, "ns": [8, 9]}],
    "PROP4_I": [{"n_max": 9, "t_max": 3}],
    "PROP4_II": [{"n_max": 9, "t_max": 3}],
    "STAR_THM": [{"n_max": 8, "r": r, "t": t} for r in (3, 4) for t in (1, 2, 3)],
    "FAUDREE_SCHELP": [{"n_max": 9, "k": k} for k in (3, 4, 5, 6)],
    "PATH_THM": [{"n_max": 9, "k": k, "t": 2} for k in (4, 5)],
    "TAU_PROP": [{"h": "S3", "s": 2, "n_max": 9}, {"h": "P3", "s": 2, "n_max": 9}],
    "MINDEG_PROP": [{"h": "K3", "s": 2, "n_max": 9}, {"h": "K4", "s": 3, "n_max": 9}],
    "LIU_ZHANG": [{"h": h, "s": s, "n_max": 9} for h, s in (("S3", 2), ("P3", 2), ("K3", 2), ("K4", 3))],
    "B_PARAM_AGREE": [{"n_max": 6, "s_max": 3}],
}

_ACCEPTED = {
    "PROP1_UB": {"f", "n_max", "t_max"},
    "LEMMA2": {"n_max", "ts"},
    "PROP3_STRICT": {"f", "t", "ns"},
    "PROP4_I": {"n_max", "t_max"},
    "PROP4_II": {"n_max", "t_max"},
    "STAR_THM": {"n_max", "r", "t"},
    "FAUDREE_SCHELP": {"n_max", "k"},
    "PATH_THM": {"n_max", "k", "t"},
    "TAU_PROP": {"h", "s", "n_max"},
    "MINDEG_PROP": {"h", "s", "n_max"},
    "LIU_ZHANG": {"h", "s", "n_max"},
    "B_PARAM_AGREE": {"n_max", "s_max"},
}


def accepted_params(theorem_id: str) -> set[str]:
    if theorem_id not in _ACCEPTED:
        raise InvalidParams(f"unknown theorem id {theorem_id!r}")
    return set(_ACCEPTED[theorem_id])


def _resolve(text: str) -> Graph:
    from .expr import parse_graph_arg

    return build(parse_graph_arg(text))


def _check_params(theorem_id: str, params: dict) -> None:
    from .enumeration import check_order

    unknown = set(params) - accepted_params(theorem_id)
    if unknown:
        raise InvalidParams(f"{theorem_id} does not take {', '.join(sorted(unknown))}")
    tops = [params[k] for k in ("n_max",) if k in params] + list(params.get("ns", []))
    for n in tops:
        check_order(n)


def run_verification(theorem_id: str, params: dict, workers: int = 1) -> VerificationReport:
    """Run one verifier from a plain parameter dict (graphs given as expressions).

    Ranges are checked against the enumeration cap before any work starts.
    """
    _check_params(theorem_id, params)
    p = dict(params)
    if theorem_id == "PROP1_UB":
        return verify_prop1(_resolve(p["f"]), p["n_max"], p["t_max"], workers, f_label=p["f"])
    if theorem_id == "LEMMA2":
        return verify_lemma2(p["n_max"], tuple(p.get("ts", (2, 3))), workers)
    if theorem_id == "PROP3_STRICT":
        return verify_prop3(_resolve(p["f"]), p["t"], p["ns"], workers, f_label=p["f"])
    if theorem_id in ("PROP4_I", "PROP4_II"):
        return verify_prop4(p["n_max"], p["t_max"], "i" if theorem_id == "PROP4_I" else "ii", workers)
    if theorem_id == "STAR_THM":
        return verify_star(p["n_max"], p["r"], p["t"], workers)
    if theorem_id == "FAUDREE_SCHELP":
        return verify_faudree_schelp(p["n_max"], p["k"], workers)
    if theorem_id == "PATH_THM":
        return verify_path(p["n_max"], p["k"], p["t"], workers)
    if theorem_id in ("TAU_PROP", "MINDEG_PROP", "LIU_ZHANG"):
        fn = {"TAU_PROP": verify_tau_prop, "MINDEG_PROP": verify_mindeg_prop,
              "LIU_ZHANG": verify_liu_zhang}[theorem_id]
        return fn(_resolve(p["h"]), p["s"], p["n_max"], workers, h_label=p["h"])
    if theorem_id == "B_PARAM_AGREE":
        return verify_b_param(p["n_max"], p["s_max"], workers)
    raise InvalidParams(f"unknown theorem id {theorem_id!r}")


def plan_runs(theorem_ids: Sequence[str], overrides: dict) -> list[tuple[str, dict]]:
    """Default boxes with ``overrides`` applied, deduplicated, ordered by id then params."""
    runs = {}
    for tid in theorem_ids:
        keys = accepted_params(tid)
        extra = set(overrides) - keys
        if extra and len(theorem_ids) == 1:
            raise InvalidParams(f"{tid} does not take {', '.join(sorted(extra))}")
        for box in DEFAULT_BOXES[tid]:
            p = dict(box)
            p.update({k: v for k, v in overrides.items() if k in keys})
            runs[(tid, json.dumps(p, sort_keys=True))] = (tid, p)
    return [runs[k] for k in sorted(runs)]

"""Command-line entry point: ``genturan <command> ...``.

Graphs are named by a small expression language (see :mod:`genturan.expr`),
for example ``K4``, ``2P3``, ``K2+P3`` or ``H(7,5,2)``; anything else is read
as graph6.  JSON output is byte-stable: keys are sorted and no timings are
recorded, so equal arguments give equal bytes whatever ``--workers`` is.

Exit status: 0 on success, 1 when a verification FAILS, 2 on bad input,
3 when a size cap is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .constructions import (
    CliqueUnion, Complete, Cycle, Empty, FaudreeSchelpG, Friendship, Matching, Path as PathSpec,
    SplitH, Star, TuranGraph, build,
)
from .counting import count_copies, matching_profile
from .enumeration import CACHE_ENV, DEFAULT_MAX_N, HARD_MAX_N, check_order, ex_brute, graph_classes
from .errors import InvalidParams, InvalidSpec, MalformedEncoding, SizeCap
from .expr import describe, parse_expr, parse_graph_arg
from .graph import Graph
from .structure import b_param_blowup, structure_params
from .theorems import THEOREM_IDS, plan_runs, run_verification

FORMATS = ("json", "csv", "table")

_NAMED = {
    "complete": (Complete, 1), "path": (PathSpec, 1), "star": (Star, 1), "matching": (Matching, 1),
    "cycle": (Cycle, 1), "empty": (Empty, 1), "turan": (TuranGraph, 2), "splith": (SplitH, 3),
    "fsg": (FaudreeSchelpG, 3), "friendship": (Friendship, 1), "cliqueunion": (CliqueUnion, 3),
}

EPILOG = f"""\
graph expressions: K4 P3 C9 S3 M2 E5 F7 T(5,2) H(7,5,2) G(7,4,1) CU(2,4,1);
  A+B disjoint union, A*B join, ~A complement, 2P3 two copies, g6:<graph6> literal.

csv columns:
  construct   spec,graph6,n,edges,degrees,nu
  count       h,g,count            (--profile: t,count)
  exbrute     n,h,f,value,searched,graph6   (one row per extremal class)
  verify      theorem_id,params,status,n0,witness
  bparam      h,s,tau,alpha,nu,b,b_blowup
  enumerate   graph6

environment:
  {CACHE_ENV}  directory for cached enumeration levels (graph6 files)
"""


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    max_n: int = DEFAULT_MAX_N
    allow_n10: bool = False
    workers: int = 1
    fmt: str = "json"
    output: str | None = None

    def __post_init__(self):
        if self.allow_n10:
            self.max_n = HARD_MAX_N
        if self.max_n > HARD_MAX_N:
            raise SizeCap(f"max_n is at most {HARD_MAX_N}")
        if self.workers < 1:
            raise InvalidParams("--workers must be at least 1")
        if self.fmt not in FORMATS:
            raise InvalidParams(f"--format must be one of {', '.join(FORMATS)}")


# -- rendering -----------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def render(payload, rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    table = [columns] + [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    return "".join("  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() + "\n" for line in table)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


# -- commands ------------------------------------------------------------------

def _graph(text: str) -> tuple[Graph, str]:
    spec = parse_graph_arg(text)
    return build(spec), describe(spec)


def cmd_construct(cfg: RunConfig):
    kind, args = cfg.params["kind"], cfg.params["args"]
    if kind == "expr":
        if len(args) != 1:
            raise InvalidSpec("construct expr takes one expression")
        spec = parse_expr(args[0])
    else:
        cls, arity = _NAMED[kind]
        if len(args) != arity:
            raise InvalidSpec(f"construct {kind} takes {arity} integer arguments")
        try:
            spec = cls(*(int(a) for a in args))
        except ValueError:
            raise InvalidSpec(f"construct {kind}: arguments must be integers") from None
    g = build(spec)
    rec = {"spec": str(spec), "graph6": g.to_graph6(), "n": g.n, "edges": g.num_edges(),
           "degrees": sorted(g.degrees(), reverse=True), "nu": matching_profile(g).nu}
    return rec, [rec], ["spec", "graph6", "n", "edges", "degrees", "nu"], 0


def cmd_count(cfg: RunConfig):
    g, g_label = _graph(cfg.params["g"])
    if cfg.params["profile"]:
        prof = list(matching_profile(g).counts)
        rec = {"g": g_label, "nu": len(prof) - 1, "profile": prof}
        rows = [{"t": t, "count": c} for t, c in enumerate(prof)]
        return rec, rows, ["t", "count"], 0
    if cfg.params["h"] is None:
        raise InvalidParams("count needs --h (or --profile)")
    h, h_label = _graph(cfg.params["h"])
    rec = {"h": h_label, "g": g_label, "count": count_copies(h, g)}
    return rec, [rec], ["h", "g", "count"], 0


def cmd_exbrute(cfg: RunConfig):
    n = cfg.params["n"]
    h, h_label = _graph(cfg.params["h"])
    f, f_label = _graph(cfg.params["f"])
    check_order(n, cfg.allow_n10)
    res = ex_brute(n, h, f, workers=cfg.workers, allow_n10=cfg.allow_n10, h_label=h_label, f_label=f_label)
    payload = res.to_dict()
    rows = [{"n": res.n, "h": res.h_spec, "f": res.f_spec, "value": res.value, "searched": res.searched,
             "graph6": g6} for g6 in res.extremal]
    return payload, rows, ["n", "h", "f", "value", "searched", "graph6"], 0


_VERIFY_KEYS = ("n_max", "t_max", "t", "k", "r", "s", "s_max", "h", "f", "ns", "ts")


def cmd_verify(cfg: RunConfig):
    target = cfg.params["theorem"]
    ids = list(THEOREM_IDS) if target == "ALL" else [target]
    if target != "ALL" and target not in THEOREM_IDS:
        raise InvalidParams(f"unknown theorem id {target!r}; choose from {', '.join(THEOREM_IDS)} or ALL")
    overrides = {k: cfg.params[k] for k in _VERIFY_KEYS if cfg.params.get(k) is not None}
    runs = plan_runs(ids, overrides)
    # validate every run (including graph arguments) before starting any
    for tid, p in runs:
        for key in ("h", "f"):
            if key in p:
                parse_graph_arg(p[key])
        for n in [p.get("n_max", 0)] + list(p.get("ns", [])):
            check_order(n)
    reports = [run_verification(tid, p, cfg.workers) for tid, p in runs]
    payload = [r.to_dict() for r in reports]
    rows = [{"theorem_id": r.theorem_id, "params": r.params, "status": r.status, "n0": r.n0,
             "witness": r.witness, "result": r.label()} for r in reports]
    columns = ["theorem_id", "params", "status", "n0", "witness"]
    if cfg.fmt == "table":
        columns = ["theorem_id", "params", "result"]
    code = 0 if all(r.ok for r in reports) else 1
    return payload, rows, columns, code


def cmd_bparam(cfg: RunConfig):
    h, h_label = _graph(cfg.params["h"])
    s = cfg.params["s"]
    if s < 1:
        raise InvalidParams("--s must be at least 1")
    sp = structure_params(h, s)
    rec = {"h": h_label, "s": s, "tau": sp.tau, "alpha": sp.alpha, "nu": sp.nu, "b": sp.b,
           "b_blowup": b_param_blowup(h, s) if h.n <= 10 else None}
    return rec, [rec], ["h", "s", "tau", "alpha", "nu", "b", "b_blowup"], 0


def cmd_enumerate(cfg: RunConfig):
    n = cfg.params["n"]
    prune = None
    label = None
    if cfg.params.get("prune"):
        prune, label = _graph(cfg.params["prune"])
    check_order(n, cfg.allow_n10)
    graphs = [g.to_graph6() for g in graph_classes(n, prune, cfg.workers, cfg.allow_n10)]
    payload = {"n": n, "prune": label, "count": len(graphs), "graphs": graphs}
    if cfg.fmt == "table":
        return payload, [], [], 0
    return payload, [{"graph6": x} for x in graphs], ["graph6"], 0


COMMANDS = {
    "construct": cmd_construct, "count": cmd_count, "exbrute": cmd_exbrute,
    "verify": cmd_verify, "bparam": cmd_bparam, "enumerate": cmd_enumerate,
}


# -- argument parsing ----------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes for enumeration (default 1)")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="json", help="output format (default json)")
    common.add_argument("--output", "-o", default=None, help="write output to this file instead of stdout")
    common.add_argument("--allow-n10", action="store_true", help="permit enumeration at n = 10 (slow)")

    parser = argparse.ArgumentParser(prog="genturan", description="Generalized Turán numbers ex(n, H, F) at small n.",
                                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    raw = argparse.RawDescriptionHelpFormatter

    p = sub.add_parser("construct", parents=[common], help="build a named construction",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("kind", choices=sorted(_NAMED) + ["expr"])
    p.add_argument("args", nargs="+", help="integer parameters, or one expression for 'expr'")

    p = sub.add_parser("count", parents=[common], help="N(H, G) or the matching profile of G",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("--h", default=None, help="pattern graph H")
    p.add_argument("--g", required=True, help="host graph G")
    p.add_argument("--profile", action="store_true", help="print c_0..c_nu of G instead")

    p = sub.add_parser("exbrute", parents=[common], help="exact ex(n, H, F) by exhaustive search",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("n", type=int)
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a theorem against the oracle",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("theorem", metavar="THEOREM_ID", help="one of " + ", ".join(THEOREM_IDS) + ", or ALL")
    p.add_argument("--nmax", dest="n_max", type=int)
    p.add_argument("--tmax", dest="t_max", type=int)
    p.add_argument("--smax", dest="s_max", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--h")
    p.add_argument("--f")
    p.add_argument("--ns", type=_int_list, help="comma-separated orders, e.g. 8,9")
    p.add_argument("--ts", type=_int_list, help="comma-separated t values, e.g. 2,3")

    p = sub.add_parser("bparam", parents=[common], help="tau, alpha, nu and b(H, s)",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("--h", required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="one graph6 line per isomorphism class",
                       epilog=EPILOG, formatter_class=raw)
    p.add_argument("n", type=int)
    p.add_argument("--prune", default=None, help="only classes free of this graph")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "workers", "fmt", "output", "allow_n10")}
    try:
        cfg = RunConfig(args.command, params, allow_n10=args.allow_n10, workers=args.workers,
                        fmt=args.fmt, output=args.output)
        payload, rows, columns, code = COMMANDS[cfg.command](cfg)
        if cfg.command == "enumerate" and cfg.fmt == "table":
            text = "".join(g + "\n" for g in payload["graphs"])
        else:
            text = render(payload, rows, columns, cfg.fmt)
        _emit(text, cfg.output)
        return code
    except SizeCap as exc:
        print(f"genturan: size cap: {exc}", file=sys.stderr)
        return 3
    except (InvalidSpec, InvalidParams, MalformedEncoding) as exc:
        print(f"genturan: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

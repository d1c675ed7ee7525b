"""A tiny expression language for naming graphs on the command line.

    union := join (("+" | "|" | "∪") join)*        disjoint union
    join  := unary ("*" unary)*                    join (all cross edges)
    unary := "~" unary | [count] atom              complement, repeated copies
    atom  := NAME INT | NAME "(" INT ("," INT)* ")" | "(" union ")"

Names: K (complete), P (path, k vertices), C (cycle), S (star, r leaves),
M (matching), E (edgeless), F (friendship), T(n,k), H(n,k,a), G(n,k,l),
CU(a,k,b).  For example ``K2+P3``, ``2P3``, ``K5+M2``, ``H(7,5,2)``.
Anything that is not an expression is read as graph6 (prefix ``g6:`` forces it).
"""

from __future__ import annotations

import re

from .constructions import (
    CliqueUnion, Complement, Complete, Cycle, DisjointUnion, Empty, FaudreeSchelpG,
    Friendship, Join, Matching, Path, SplitH, Star, TuranGraph,
)
from .errors import InvalidSpec, MalformedEncoding
from .graph import Graph, parse_graph6

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")

_SIMPLE = {"K": Complete, "P": Path, "C": Cycle, "S": Star, "M": Matching, "E": Empty, "F": Friendship}
_CALLS = {"T": (TuranGraph, 2), "H": (SplitH, 3), "G": (FaudreeSchelpG, 3), "CU": (CliqueUnion, 3)}


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name.upper()))
        else:
            out.append(("sym", sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise InvalidSpec(f"unexpected token {tok[1]!r}")
        self.i += 1
        return tok[1]

    def union(self):
        parts = [self.join()]
        while self.peek() in (("sym", "+"), ("sym", "|"), ("sym", "∪")):
            self.i += 1
            parts.append(self.join())
        return parts[0] if len(parts) == 1 else DisjointUnion(parts)

    def join(self):
        left = self.unary()
        while self.peek() == ("sym", "*"):
            self.i += 1
            left = Join(left, self.unary())
        return left

    def unary(self):
        if self.peek() == ("sym", "~"):
            self.i += 1
            return Complement(self.unary())
        count = None
        if self.peek()[0] == "int":
            count = int(self.take("int"))
        atom = self.atom()
        if count is None:
            return atom
        if count < 1:
            raise InvalidSpec("copy count must be positive")
        return atom if count == 1 else DisjointUnion([atom] * count)

    def atom(self):
        kind, val = self.peek()
        if (kind, val) == ("sym", "("):
            self.i += 1
            inner = self.union()
            self.take("sym", ")")
            return inner
        name = self.take("name")
        if name in _CALLS:
            cls, arity = _CALLS[name]
            self.take("sym", "(")
            args = [int(self.take("int"))]
            while self.peek() == ("sym", ","):
                self.i += 1
                args.append(int(self.take("int")))
            self.take("sym", ")")
            if len(args) != arity:
                raise InvalidSpec(f"{name} takes {arity} arguments")
            return cls(*args)
        if name in _SIMPLE:
            return _SIMPLE[name](int(self.take("int")))
        raise InvalidSpec(f"unknown graph name {name!r}")


def parse_expr(text: str):
    """Parse a graph expression into a construction spec."""
    p = _Parser(text)
    if not p.toks:
        raise InvalidSpec("empty expression")
    spec = p.union()
    if p.i != len(p.toks):
        raise InvalidSpec(f"trailing input after {spec}")
    return spec


def parse_graph_arg(text: str):
    """Expression if it parses, otherwise graph6.  Returns a spec or a :class:`Graph`."""
    if text.startswith("g6:"):
        return parse_graph6(text[3:])
    try:
        return parse_expr(text)
    except InvalidSpec as exc:
        try:
            return parse_graph6(text)
        except MalformedEncoding:
            raise exc from None


def describe(spec_or_graph) -> str:
    if isinstance(spec_or_graph, Graph):
        return spec_or_graph.to_graph6()
    return str(spec_or_graph)

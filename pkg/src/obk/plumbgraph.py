"""Plumbing graphs of disc bundles and their intersection lattices.

A vertex is a disc bundle over a sphere with its Euler number; an edge plumbs two
bundles once, its sign choosing between the identifications (x, y) ~ (y, x) and
(x, y) ~ (-y, x).  The fibre dimension only labels reports.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from . import _linalg as la
from .errors import DuplicateId, ParseError, UnknownDisk


class Vertex(NamedTuple):
    id: str
    euler: int
    dim: int = 2


class Edge(NamedTuple):
    v: str
    w: str
    sign: int = 1


class PlumbingGraph:
    def __init__(self, vertices, edges=()):
        self.vertices = tuple(Vertex(str(v[0]), int(v[1]), *(int(x) for x in v[2:])) for v in vertices)
        self.edges = tuple(Edge(str(e[0]), str(e[1]), *(int(x) for x in e[2:])) for e in edges)
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise DuplicateId("vertex ids must be unique")
        for v in self.vertices:
            if v.dim < 1:
                raise ValueError(f"fibre dimension of {v.id} must be positive")
        known = set(ids)
        for e in self.edges:
            if e.v not in known or e.w not in known:
                raise UnknownDisk(f"edge {e} references an unknown vertex")
            if e.v == e.w:
                raise ValueError(f"self-loop at {e.v}")
            if e.sign not in (1, -1):
                raise ValueError(f"edge sign must be ±1, got {e.sign}")
        self._index = {v: i for i, v in enumerate(ids)}

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, PlumbingGraph) and (self.vertices, self.edges) == (other.vertices, other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"PlumbingGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v.id: set() for v in self.vertices}
        for e in self.edges:
            adj[e.v].add(e.w)
            adj[e.w].add(e.v)
        seen, stack = set(), [self.vertices[0].id]
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(adj[v] - seen)
        return len(seen) == len(adj)

    def relabel(self, order) -> "PlumbingGraph":
        """Same graph with vertices listed in ``order`` (a permutation of the ids)."""
        by_id = {v.id: v for v in self.vertices}
        return PlumbingGraph([by_id[i] for i in order], self.edges)


def intersection_matrix(g: PlumbingGraph) -> tuple:
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        m[i][i] = v.euler
    for e in g.edges:
        i, j = g._index[e.v], g._index[e.w]
        m[i][j] += e.sign
        m[j][i] += e.sign
    return la.as_matrix(m)


def milnor_graph(dim: int = 2) -> PlumbingGraph:
    """Eight bundles of Euler number 2 along a path, plus a negative plumbing of the 2nd and 5th."""
    vs = [(str(i), 2, dim) for i in range(1, 9)]
    es = [(str(i), str(i + 1), 1) for i in range(1, 8)] + [("2", "5", -1)]
    return PlumbingGraph(vs, es)


def e8_graph(euler: int = 2, dim: int = 2) -> PlumbingGraph:
    """The E8 tree: a path v1..v7 with v8 hung off v5.  ``euler`` is +2 or -2."""
    if euler not in (2, -2):
        raise ValueError("E8 is offered with Euler number +2 or -2")
    vs = [(f"v{i}", euler, dim) for i in range(1, 9)]
    es = [(f"v{i}", f"v{i + 1}", 1) for i in range(1, 7)] + [("v5", "v8", 1)]
    return PlumbingGraph(vs, es)


BUILTINS = {
    "milnor": milnor_graph,
    "e8": e8_graph,
    "e8+": e8_graph,
    "e8-": lambda: e8_graph(-2),
}


class LatticeReport(NamedTuple):
    determinant: int
    torsion: tuple  # diagonal of the Smith normal form, nonnegative


def elementary_divisors(m) -> tuple:
    if not m:
        return ()
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(Matrix(m), domain=ZZ)
    return tuple(abs(int(snf[i, i])) for i in range(min(snf.shape)))


def lattice_report(g: PlumbingGraph) -> LatticeReport:
    m = intersection_matrix(g)
    d = la.det(m) if m else 1
    return LatticeReport(d, tuple(sorted(elementary_divisors(m), key=lambda x: (x == 0, x))))


# --- text format -----------------------------------------------------------------

_VERTEX_RE = re.compile(r"^vertex\s+(\S+)\s+([+-]?\d+)(?:\s+(\d+))?\s*$")
_EDGE_RE = re.compile(r"^edge\s+(\S+)\s+(\S+)\s+([+-]?1)\s*$")


def parse_graph(text: str) -> PlumbingGraph:
    vs, es = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _VERTEX_RE.match(line):
            vs.append((m.group(1), int(m.group(2)), int(m.group(3) or 2)))
        elif m := _EDGE_RE.match(line):
            es.append((m.group(1), m.group(2), int(m.group(3))))
        else:
            raise ParseError(f"malformed graph line {raw!r}")
    return PlumbingGraph(vs, es)


def format_graph(g: PlumbingGraph) -> str:
    lines = [f"vertex {v.id} {v.euler} {v.dim}" for v in g.vertices]
    lines += [f"edge {e.v} {e.w} {e.sign:+d}" for e in g.edges]
    return "\n".join(lines) + "\n"

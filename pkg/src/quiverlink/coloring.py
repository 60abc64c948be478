"""Quandle colorings of marked graph diagrams.

Arcs are semi-arcs glued along over-strands.  A coloring assigns a quandle
element to every arc so that

* at a crossing with over-arc ``y`` the under-strand goes from ``x`` to
  ``x |> y`` (positive) or to the ``z`` with ``z |> y = x`` (negative);
* the four arcs at a marked vertex share one color, which is what lets a
  coloring restrict to both resolutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import Crossing, MarkedGraphDiagram, MarkedVertex, _UnionFind, check, resolve_with_map
from .quandle import Quandle, QuandleMap


@dataclass(frozen=True)
class ArcClasses:
    """Partition of the semi-arcs of a diagram into arcs."""

    members: tuple[tuple[int, ...], ...]  # sorted, ordered by smallest member
    index: dict  # edge id -> arc index

    def __len__(self) -> int:
        return len(self.members)


def arc_classes(D: MarkedGraphDiagram) -> ArcClasses:
    uf = _UnionFind()
    for e in D.edges:
        uf.find(e)
    for node in D.crossings:
        uf.union(node.over_in, node.over_out)
    groups: dict[int, list[int]] = {}
    for e in D.edges:
        groups.setdefault(uf.find(e), []).append(e)
    members = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    index = {e: i for i, m in enumerate(members) for e in m}
    return ArcClasses(members, index)


@dataclass(frozen=True)
class Coloring:
    diagram: MarkedGraphDiagram
    quandle: Quandle
    colors: tuple[int, ...]  # 1-based, one per arc

    def __repr__(self) -> str:
        return f"Coloring({list(self.colors)})"

    def color_of_edge(self, e: int) -> int:
        return self.colors[arc_classes(self.diagram).index[e]]

    def is_constant(self) -> bool:
        return len(set(self.colors)) <= 1


@dataclass(frozen=True)
class ColoringCheck:
    ok: bool
    node: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _constraints(D: MarkedGraphDiagram, arcs: ArcClasses):
    crossings = []  # (node index, under-in arc, over arc, under-out arc, sign)
    equalities = []  # (node index, arc, arc)
    for i, node in enumerate(D.nodes):
        if isinstance(node, Crossing):
            a = arcs.index
            crossings.append((i, a[node.under_in], a[node.over_in], a[node.under_out], node.sign))
        elif isinstance(node, MarkedVertex):
            first = arcs.index[node.e1]
            for e in node.edges[1:]:
                equalities.append((i, first, arcs.index[e]))
    return crossings, equalities


def check_coloring(D: MarkedGraphDiagram, X: Quandle, colors: Sequence[int]) -> ColoringCheck:
    """Evaluate every crossing and vertex relation; report the first failure."""
    arcs = arc_classes(D)
    if len(colors) != len(arcs):
        raise ValueError(f"{len(colors)} colors given for {len(arcs)} arcs")
    if any(not 1 <= c <= X.n for c in colors):
        raise ValueError(f"colors must lie in 1..{X.n}")
    crossings, equalities = _constraints(D, arcs)
    c = [v - 1 for v in colors]
    for i, a, b, out, sign in crossings:
        want = X.table[c[a], c[b]] if sign > 0 else X.inverse_table[c[a], c[b]]
        if c[out] != want:
            return ColoringCheck(False, i, f"crossing {i}: expected {int(want) + 1} on the outgoing under-arc, got {colors[out]}")
    for i, a, b in equalities:
        if c[a] != c[b]:
            return ColoringCheck(False, i, f"marked vertex {i}: arcs carry {colors[a]} and {colors[b]}")
    return ColoringCheck(True)


def _search_order(nvars: int, crossings) -> list[int]:
    """Greedy most-constrained-first ordering of the variables."""
    order: list[int] = []
    placed = set()
    degree = [0] * nvars
    for _, a, b, c, _ in crossings:
        for v in {a, b, c}:
            degree[v] += 1
    while len(order) < nvars:
        best, best_key = None, None
        for v in range(nvars):
            if v in placed:
                continue
            links = sum(1 for _, a, b, c, _ in crossings if v in (a, b, c) and ({a, b, c} - {v}) & placed)
            key = (links, degree[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def enumerate_colorings(D: MarkedGraphDiagram, X: Quandle) -> list[Coloring]:
    """All X-colorings of D, sorted lexicographically by color vector.

    Arcs tied at marked vertices are merged first; the remaining variables are
    filled by backtracking, each choice propagated through crossing relations.
    """
    check(D)
    arcs = arc_classes(D)
    crossings, equalities = _constraints(D, arcs)
    uf = _UnionFind()
    for k in range(len(arcs)):
        uf.find(k)
    for _, a, b in equalities:
        uf.union(a, b)
    roots = sorted({uf.find(k) for k in range(len(arcs))})
    var = {r: i for i, r in enumerate(roots)}
    arc_var = [var[uf.find(k)] for k in range(len(arcs))]
    cons = [(i, arc_var[a], arc_var[b], arc_var[c], s) for i, a, b, c, s in crossings]
    nvars = len(roots)
    touching: list[list[int]] = [[] for _ in range(nvars)]
    for j, (_, a, b, c, _) in enumerate(cons):
        for v in {a, b, c}:
            touching[v].append(j)

    T = X.table.tolist()
    Tinv = X.inverse_table.tolist()
    # targets[x][z]: is there a y with x |> y = z (resp. the inverse op)
    reach_pos = [[False] * X.n for _ in range(X.n)]
    reach_neg = [[False] * X.n for _ in range(X.n)]
    for x in range(X.n):
        for y in range(X.n):
            reach_pos[x][T[x][y]] = True
            reach_neg[x][Tinv[x][y]] = True

    val = [-1] * nvars
    found: list[tuple[int, ...]] = []

    def propagate(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            v = queue.pop()
            for j in touching[v]:
                _, a, b, c, s = cons[j]
                fwd, back = (T, Tinv) if s > 0 else (Tinv, T)
                va, vb, vc = val[a], val[b], val[c]
                if va >= 0 and vb >= 0:
                    z = fwd[va][vb]
                    if vc < 0:
                        val[c] = z
                        trail.append(c)
                        queue.append(c)
                    elif vc != z:
                        return False
                elif vb >= 0 and vc >= 0:
                    val[a] = back[vc][vb]
                    trail.append(a)
                    queue.append(a)
                elif va >= 0 and vc >= 0:
                    if not (reach_pos if s > 0 else reach_neg)[va][vc]:
                        return False
        return True

    order = _search_order(nvars, cons)

    def search(pos: int):
        while pos < nvars and val[order[pos]] >= 0:
            pos += 1
        if pos == nvars:
            found.append(tuple(val[arc_var[k]] + 1 for k in range(len(arcs))))
            return
        v = order[pos]
        for x in range(X.n):
            trail = [v]
            val[v] = x
            if propagate(v, trail):
                search(pos + 1)
            for w in trail:
                val[w] = -1

    search(0)
    found.sort()
    return [Coloring(D, X, f) for f in found]


def counting_invariant(D: MarkedGraphDiagram, X: Quandle) -> int:
    return len(enumerate_colorings(D, X))


def compose_coloring(phi: QuandleMap, c: Coloring) -> Coloring:
    """Push a coloring forward along an endomorphism of its quandle."""
    return Coloring(c.diagram, phi.target, tuple(phi(v) for v in c.colors))


def induce_on_resolution(D: MarkedGraphDiagram, c: Coloring, sign: str) -> Coloring:
    """Restrict a coloring of D to the resolution ``resolve(D, sign)``."""
    R, emap = resolve_with_map(D, sign)
    src = arc_classes(D)
    dst = arc_classes(R)
    colors = [0] * len(dst)
    for e, new in emap.items():
        colors[dst.index[new]] = c.colors[src.index[e]]
    return Coloring(R, c.quandle, tuple(colors))

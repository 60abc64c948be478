"""Oriented marked graph diagrams.

A diagram is a list of nodes joined by numbered edges (semi-arcs).  Three
node kinds exist:

``x+ a b c d`` / ``x- a b c d``
    a crossing with slots ``under_in over_in under_out over_out``;
``m a b c d``
    a marked 4-valent vertex, edges listed counterclockwise;
``circle e``
    a closed component that meets no node.

Smoothing convention at a marked vertex ``m e1 e2 e3 e4``: the marker runs
between ``e1, e2`` and between ``e3, e4``.  ``L-`` joins ``(e1, e2)`` and
``(e3, e4)``; ``L+`` joins ``(e2, e3)`` and ``(e4, e1)``.

Edge directions at marked vertices are not written down; they are inferred
from the crossings and from the rule that every vertex alternates
in/out/in/out around its four slots.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Union

SMOOTHING_CONVENTION = "L- joins (e1,e2)(e3,e4); L+ joins (e2,e3)(e4,e1)"


class DiagramError(ValueError):
    """Base class for structural problems with a diagram."""


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class EdgeMultiplicityError(DiagramError):
    def __init__(self, message: str, edge: int, node: int | None = None):
        self.edge, self.node = edge, node
        super().__init__(message)


class OrientationError(DiagramError):
    def __init__(self, message: str, node: int):
        self.node = node
        super().__init__(message)


@dataclass(frozen=True)
class Crossing:
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")

    @property
    def edges(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def ccw(self) -> tuple[int, int, int, int]:
        """Slots in counterclockwise order starting at ``under_in``."""
        if self.sign > 0:
            return (self.under_in, self.over_out, self.under_out, self.over_in)
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def relabel(self, f) -> "Crossing":
        return Crossing(self.sign, *(f(e) for e in self.edges))


@dataclass(frozen=True)
class MarkedVertex:
    e1: int
    e2: int
    e3: int
    e4: int

    @property
    def edges(self) -> tuple[int, int, int, int]:
        return (self.e1, self.e2, self.e3, self.e4)

    def ccw(self) -> tuple[int, int, int, int]:
        return self.edges

    def pairs(self, sign: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """Edge pairs joined by the ``sign`` resolution."""
        if sign == "-":
            return (self.e1, self.e2), (self.e3, self.e4)
        return (self.e2, self.e3), (self.e4, self.e1)

    def relabel(self, f) -> "MarkedVertex":
        return MarkedVertex(*(f(e) for e in self.edges))


@dataclass(frozen=True)
class Circle:
    edge: int

    @property
    def edges(self) -> tuple[int]:
        return (self.edge,)

    def relabel(self, f) -> "Circle":
        return Circle(f(self.edge))


Node = Union[Crossing, MarkedVertex, Circle]


@dataclass(frozen=True)
class MarkedGraphDiagram:
    nodes: tuple[Node, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @property
    def edges(self) -> list[int]:
        return sorted({e for node in self.nodes for e in node.edges})

    @property
    def crossings(self) -> list[Crossing]:
        return [n for n in self.nodes if isinstance(n, Crossing)]

    @property
    def marked_vertices(self) -> list[MarkedVertex]:
        return [n for n in self.nodes if isinstance(n, MarkedVertex)]

    def canonical(self) -> "MarkedGraphDiagram":
        """Renumber edges 1, 2, ... by first appearance."""
        order: dict[int, int] = {}
        for node in self.nodes:
            for e in node.edges:
                order.setdefault(e, len(order) + 1)
        return MarkedGraphDiagram(tuple(n.relabel(order.__getitem__) for n in self.nodes), self.name)

    def __str__(self) -> str:
        return serialize(self)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "multiplicity" | "orientation"
    node: int | None  # 0-based node index, when one is responsible
    edge: int | None
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    # inferred direction at each marked vertex: True when e1, e3 point into it
    vertex_in_odd: dict[int, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


class _ParityUnionFind:
    """Union-find tracking the parity between each item and its root."""

    def __init__(self):
        self.parent: dict = {}
        self.parity: dict = {}

    def find(self, a):
        if a not in self.parent:
            self.parent[a], self.parity[a] = a, 0
            return a, 0
        p = 0
        path = []
        while self.parent[a] != a:
            path.append(a)
            p ^= self.parity[a]
            a = self.parent[a]
        root, acc = a, p
        for b in path:  # path compression
            nxt = self.parity[b]
            self.parent[b], self.parity[b] = root, acc
            acc ^= nxt
        return root, p

    def union(self, a, b, diff: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == diff
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ diff
        return True


_IN = "IN"  # constant node for the parity union-find


def validate(D: MarkedGraphDiagram) -> ValidationReport:
    """Check edge multiplicities and the orientation pattern at marked vertices."""
    report = ValidationReport()
    slots: dict[int, list[tuple[int, int]]] = {}
    circle_edges: Counter = Counter()
    for i, node in enumerate(D.nodes):
        if isinstance(node, Circle):
            circle_edges[node.edge] += 1
            continue
        for k, e in enumerate(node.edges):
            slots.setdefault(e, []).append((i, k))
    for e in sorted(set(slots) | set(circle_edges)):
        if e < 1:
            report.violations.append(Violation("multiplicity", None, e, f"edge {e} is not a positive integer"))
        if circle_edges[e] and (circle_edges[e] > 1 or e in slots):
            node = next((i for i, n in enumerate(D.nodes) if isinstance(n, Circle) and n.edge == e), None)
            report.violations.append(Violation("multiplicity", node, e, f"circle edge {e} is used elsewhere"))
        elif e in slots and len(slots[e]) != 2:
            report.violations.append(
                Violation("multiplicity", slots[e][-1][0], e, f"edge {e} occurs {len(slots[e])} times")
            )
    if report.violations:
        return report

    # Slot direction literals: (variable, parity) with parity 0 meaning "in".
    def literal(i: int, k: int):
        node = D.nodes[i]
        if isinstance(node, Crossing):
            return _IN, 0 if k in (0, 1) else 1
        return ("v", i), k % 2  # e1, e3 share the vertex variable

    uf = _ParityUnionFind()
    uf.find(_IN)
    for e, ((i, k), (j, l)) in sorted(slots.items()):
        (a, pa), (b, pb) = literal(i, k), literal(j, l)
        # one end is "in", the other "out"
        if not uf.union(a, b, 1 ^ pa ^ pb):
            culprit = j if isinstance(D.nodes[j], MarkedVertex) else i
            if isinstance(D.nodes[i], MarkedVertex):
                culprit = i
            report.violations.append(
                Violation("orientation", culprit, e, f"edge {e} cannot be oriented consistently at node {culprit}")
            )
    for i, node in enumerate(D.nodes):
        if isinstance(node, MarkedVertex):
            root, p = uf.find(("v", i))
            in_root, in_p = uf.find(_IN)
            # a group of vertices not tied to any crossing is oriented relative to its root
            report.vertex_in_odd[i] = (p ^ in_p) == 0 if root == in_root else p == 0
    return report


def check(D: MarkedGraphDiagram) -> MarkedGraphDiagram:
    """Raise the first structural error of ``D``; return ``D`` unchanged otherwise."""
    report = validate(D)
    for v in report.violations:
        if v.kind == "multiplicity":
            raise EdgeMultiplicityError(v.message, v.edge, v.node)
        raise OrientationError(v.message, v.node)
    return D


def edge_directions(D: MarkedGraphDiagram) -> dict[int, tuple[int, int]]:
    """Map each non-circle edge to ``(tail node, head node)`` indices."""
    report = validate(D)
    if not report.valid:
        check(D)
    tail: dict[int, int] = {}
    head: dict[int, int] = {}
    for i, node in enumerate(D.nodes):
        if isinstance(node, Crossing):
            head[node.under_in] = head[node.over_in] = i
            tail[node.under_out] = tail[node.over_out] = i
        elif isinstance(node, MarkedVertex):
            odd_in = report.vertex_in_odd[i]
            for k, e in enumerate(node.edges):
                (head if (k % 2 == 0) == odd_in else tail)[e] = i
    return {e: (tail[e], head[e]) for e in head}


def add_kink(D: MarkedGraphDiagram, edge: int, sign: int = 1) -> MarkedGraphDiagram:
    """Insert a Reidemeister-1 curl at the head of ``edge``.

    The strand runs under the new crossing, around a one-edge loop and back
    over it, so colorings, components and resolutions are unchanged.
    """
    report = validate(D)
    if not report.valid:
        check(D)
    if edge not in D.edges:
        raise DiagramError(f"edge {edge} is not in the diagram")
    top = max(D.edges)
    loop, out = top + 1, top + 2
    nodes = list(D.nodes)
    for i, node in enumerate(nodes):
        if isinstance(node, Circle) and node.edge == edge:
            nodes[i] = Crossing(sign, edge, loop, loop, edge)
            return check(MarkedGraphDiagram(tuple(nodes), D.name))
    for i, node in enumerate(nodes):
        if isinstance(node, Crossing):
            incoming = [k for k in (0, 1) if node.edges[k] == edge]
        elif isinstance(node, MarkedVertex):
            odd_in = report.vertex_in_odd[i]
            incoming = [k for k in range(4) if node.edges[k] == edge and (k % 2 == 0) == odd_in]
        else:
            continue
        if incoming:
            slots = list(node.edges)
            slots[incoming[0]] = out
            nodes[i] = Crossing(node.sign, *slots) if isinstance(node, Crossing) else MarkedVertex(*slots)
            nodes.append(Crossing(sign, edge, loop, loop, out))
            return check(MarkedGraphDiagram(tuple(nodes), D.name))
    raise DiagramError(f"edge {edge} has no head")  # pragma: no cover


# -- text and JSON formats ------------------------------------------------


def _parse_int(tok: str, line: int, col: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise DiagramSyntaxError(f"expected a positive edge id, got {tok!r}", line, col)
    return int(tok)


def _tokens(line: str) -> Iterator[tuple[int, str]]:
    col = 0
    for word in line.split():
        col = line.index(word, col)
        yield col + 1, word
        col += len(word)


def parse_many(text: str) -> list[MarkedGraphDiagram]:
    """Parse every ``diagram`` stanza in ``text``."""
    stanzas: list[tuple[str, list[Node]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        (col, kw), args = toks[0], toks[1:]
        if kw == "diagram":
            if len(args) != 1:
                raise DiagramSyntaxError("expected 'diagram <name>'", lineno, col)
            stanzas.append((args[0][1], []))
            continue
        if not stanzas:
            raise DiagramSyntaxError("node before any 'diagram' header", lineno, col)
        nodes = stanzas[-1][1]
        want = {"x+": 4, "x-": 4, "m": 4, "circle": 1}.get(kw)
        if want is None:
            raise DiagramSyntaxError(f"unknown keyword {kw!r}", lineno, col)
        if len(args) != want:
            where = args[want][0] if len(args) > want else len(line) + 1
            raise DiagramSyntaxError(f"{kw} takes {want} edge ids, got {len(args)}", lineno, where)
        ids = [_parse_int(t, lineno, c) for c, t in args]
        if kw == "circle":
            nodes.append(Circle(ids[0]))
        elif kw == "m":
            nodes.append(MarkedVertex(*ids))
        else:
            nodes.append(Crossing(1 if kw == "x+" else -1, *ids))
    return [check(MarkedGraphDiagram(tuple(nodes), name)) for name, nodes in stanzas]


def parse(text: str) -> MarkedGraphDiagram:
    """Parse a single diagram stanza and validate it."""
    found = parse_many(text)
    if len(found) != 1:
        raise DiagramSyntaxError(f"expected one diagram, found {len(found)}", 1, 1)
    return found[0]


def serialize(D: MarkedGraphDiagram, canonical: bool = True) -> str:
    if canonical:
        D = D.canonical()
    lines = [f"diagram {D.name or 'D'}"]
    if D.marked_vertices:
        lines.append(f"# smoothing: {SMOOTHING_CONVENTION}")
    for node in D.nodes:
        if isinstance(node, Circle):
            lines.append(f"circle {node.edge}")
        elif isinstance(node, MarkedVertex):
            lines.append("m  " + " ".join(map(str, node.edges)))
        else:
            lines.append(("x+ " if node.sign > 0 else "x- ") + " ".join(map(str, node.edges)))
    return "\n".join(lines) + "\n"


def to_json(D: MarkedGraphDiagram) -> str:
    nodes = []
    for node in D.nodes:
        if isinstance(node, Circle):
            nodes.append({"type": "circle", "edge": node.edge})
        elif isinstance(node, MarkedVertex):
            nodes.append({"type": "marked", "edges": list(node.edges)})
        else:
            nodes.append(
                {
                    "type": "crossing",
                    "sign": node.sign,
                    "under_in": node.under_in,
                    "over_in": node.over_in,
                    "under_out": node.under_out,
                    "over_out": node.over_out,
                }
            )
    return json.dumps({"name": D.name, "smoothing": SMOOTHING_CONVENTION, "nodes": nodes})


def from_json(text: str) -> MarkedGraphDiagram:
    data = json.loads(text)
    nodes: list[Node] = []
    for rec in data["nodes"]:
        kind = rec["type"]
        if kind == "circle":
            nodes.append(Circle(rec["edge"]))
        elif kind == "marked":
            nodes.append(MarkedVertex(*rec["edges"]))
        elif kind == "crossing":
            nodes.append(Crossing(rec["sign"], rec["under_in"], rec["over_in"], rec["under_out"], rec["over_out"]))
        else:
            raise DiagramError(f"unknown node type {kind!r}")
    return check(MarkedGraphDiagram(tuple(nodes), data.get("name", "")))


# -- resolutions and counts -----------------------------------------------


class _UnionFind(dict):
    def find(self, a):
        self.setdefault(a, a)
        while self[a] != a:
            self[a] = self[self[a]]
            a = self[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self[max(ra, rb)] = min(ra, rb)


def resolve_with_map(D: MarkedGraphDiagram, sign: str) -> tuple[MarkedGraphDiagram, dict[int, int]]:
    """Like :func:`resolve`, also returning old edge id -> new edge id."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    check(D)
    uf = _UnionFind()
    for e in D.edges:
        uf.find(e)
    for node in D.marked_vertices:
        for a, b in node.pairs(sign):
            uf.union(a, b)
    kept: list[Node] = []
    used = set()
    for node in D.nodes:
        if isinstance(node, MarkedVertex):
            continue
        kept.append(node.relabel(uf.find))
        used.update(kept[-1].edges)
    for e in D.edges:
        r = uf.find(e)
        if r not in used:
            used.add(r)
            kept.append(Circle(r))
    tag = "L+" if sign == "+" else "L-"
    raw = MarkedGraphDiagram(tuple(kept), f"{D.name}:{tag}" if D.name else tag)
    R = raw.canonical()
    order: dict[int, int] = {}
    for node in raw.nodes:
        for e in node.edges:
            order.setdefault(e, len(order) + 1)
    return check(R), {e: order[uf.find(e)] for e in D.edges}


def resolve(D: MarkedGraphDiagram, sign: str) -> MarkedGraphDiagram:
    """Smooth every marked vertex in the ``sign`` direction."""
    return resolve_with_map(D, sign)[0]


def component_count(D: MarkedGraphDiagram) -> int:
    """Number of link components of a classical (vertex-free) diagram."""
    if D.marked_vertices:
        raise ValueError("diagram has marked vertices; resolve it first")
    uf = _UnionFind()
    for node in D.nodes:
        for e in node.edges:
            uf.find(e)
        if isinstance(node, Crossing):
            uf.union(node.under_in, node.under_out)
            uf.union(node.over_in, node.over_out)
    return len({uf.find(e) for e in uf})


def surface_components(D: MarkedGraphDiagram) -> int:
    """Connected components of the marked graph (surface components when admissible)."""
    uf = _UnionFind()
    for node in D.nodes:
        for e in node.edges:
            uf.find(e)
        if isinstance(node, Crossing):
            uf.union(node.under_in, node.under_out)
            uf.union(node.over_in, node.over_out)
        elif isinstance(node, MarkedVertex):
            for e in node.edges[1:]:
                uf.union(node.e1, e)
    return len({uf.find(e) for e in uf})


def euler_characteristic(D: MarkedGraphDiagram) -> int:
    """Euler characteristic of the closed surface an admissible ``D`` presents.

    Minima cap ``L-``, maxima cap ``L+`` and each marked vertex is a saddle.
    """
    return component_count(resolve(D, "-")) + component_count(resolve(D, "+")) - len(D.marked_vertices)


def ch_number(D: MarkedGraphDiagram) -> int:
    """Crossings plus marked vertices."""
    return sum(1 for n in D.nodes if not isinstance(n, Circle))


def is_planar(D: MarkedGraphDiagram) -> bool:
    """Check that the cyclic slot orders describe a diagram on the sphere.

    Faces are traced through the rotation system; each connected piece of the
    4-valent graph must satisfy ``V - E + F = 2``.
    """
    check(D)
    ends: dict[int, list[tuple[int, int]]] = {}
    rot: dict[int, tuple[int, ...]] = {}
    for i, node in enumerate(D.nodes):
        if isinstance(node, Circle):
            continue
        rot[i] = node.ccw()
        for k, e in enumerate(rot[i]):
            ends.setdefault(e, []).append((i, k))
    if not rot:
        return True

    def other(i: int, k: int) -> tuple[int, int]:
        a, b = ends[rot[i][k]]
        return b if a == (i, k) else a

    uf = _UnionFind()
    for e, ((i, _), (j, _)) in ends.items():
        uf.union(i, j)
    for i in rot:
        uf.find(i)
    seen: set[tuple[int, int]] = set()
    faces: Counter = Counter()
    for start in ((i, k) for i in rot for k in range(4)):
        if start in seen:
            continue
        dart = start
        while dart not in seen:
            seen.add(dart)
            j, l = other(*dart)
            dart = (j, (l - 1) % 4)
        faces[uf.find(start[0])] += 1
    verts: Counter = Counter(uf.find(i) for i in rot)
    edges: Counter = Counter(uf.find(ends[e][0][0]) for e in ends)
    return all(verts[c] - edges[c] + faces[c] == 2 for c in verts)


# -- admissibility ---------------------------------------------------------


@dataclass(frozen=True)
class SideReport:
    sign: str
    components: int
    crossings: int
    fox_colorings: int | None
    status: str  # "unlink" | "not unlink" | "unknown"


@dataclass(frozen=True)
class AdmissibilityReport:
    status: str  # certified_admissible | certified_inadmissible | unknown
    sides: tuple[SideReport, SideReport]

    def __str__(self) -> str:
        parts = [
            f"{s.sign}: {s.components} component(s), {s.crossings} crossing(s), {s.status}"
            + (f", {s.fox_colorings} dihedral:3 colorings" if s.fox_colorings is not None else "")
            for s in self.sides
        ]
        return f"{self.status} ({'; '.join(parts)})"


def _strand_walks(D: MarkedGraphDiagram) -> list[list[tuple[int, str]]]:
    """Each closed strand of a classical diagram as its (crossing, 'o'|'u') passages."""
    entry = {}
    for i, node in enumerate(D.crossings):
        entry[node.under_in] = (i, "u", node.under_out)
        entry[node.over_in] = (i, "o", node.over_out)
    seen, walks = set(), []
    for e in sorted(entry):
        if e in seen:
            continue
        walk, cur = [], e
        while cur not in seen:
            seen.add(cur)
            i, role, nxt = entry[cur]
            walk.append((i, role))
            cur = nxt
        walks.append(walk)
    return walks


def _faces(D: MarkedGraphDiagram) -> list[list[tuple[int, int]]]:
    """Faces of a diagram as lists of darts ``(node index, slot)``."""
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, node in enumerate(D.nodes):
        if not isinstance(node, Circle):
            for k, e in enumerate(node.ccw()):
                ends.setdefault(e, []).append((i, k))
    seen: set[tuple[int, int]] = set()
    faces = []
    for i, node in enumerate(D.nodes):
        if isinstance(node, Circle):
            continue
        for k in range(4):
            dart, face = (i, k), []
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = ends[D.nodes[dart[0]].ccw()[dart[1]]]
                j, l = b if a == dart else a
                dart = (j, (l - 1) % 4)
            if face:
                faces.append(face)
    return faces


def _drop_crossings(D: MarkedGraphDiagram, drop: set[int], joins: list[tuple[int, int]]) -> MarkedGraphDiagram:
    uf = _UnionFind()
    for a, b in joins:
        uf.union(a, b)
    kept = [n.relabel(uf.find) for i, n in enumerate(D.nodes) if i not in drop]
    used = {e for n in kept for e in n.edges}
    removed = {e for i in drop for e in D.nodes[i].edges}
    for r in sorted({uf.find(e) for e in removed} - used):
        if any(uf.find(a) == r for a, b in joins):
            kept.append(Circle(r))
            used.add(r)
    return MarkedGraphDiagram(tuple(kept), D.name)


def simplify(R: MarkedGraphDiagram) -> MarkedGraphDiagram:
    """Greedily undo Reidemeister I and II moves on a classical diagram.

    Only monogon and bigon faces are removed, so the result presents the same
    link.  No attempt is made to find a minimal diagram.
    """
    if R.marked_vertices:
        raise ValueError("resolve the marked vertices first")
    while True:
        D = R
        for face in _faces(D):
            if len(face) == 1:
                (i, k), = face
                ccw = D.nodes[i].ccw()
                R = _drop_crossings(D, {i}, [(ccw[(k + 2) % 4], ccw[(k + 3) % 4])])
                break
            if len(face) == 2:
                (i, k), (j, l) = face
                if i == j:
                    continue
                ci, cj = D.nodes[i].ccw(), D.nodes[j].ccw()
                e1 = ci[k]
                # darts alternate slots; the over/under role of a slot is its parity
                l_in = (l + 1) % 4
                if cj[l_in] != e1 or (k % 2) != (l_in % 2):
                    continue
                e2 = cj[l]
                k2 = (k - 1) % 4 if ci[(k - 1) % 4] == e2 else (k + 1) % 4
                # the other edge of each strand sits opposite across the crossing
                R = _drop_crossings(
                    D,
                    {i, j},
                    [(ci[(k + 2) % 4], cj[(l_in + 2) % 4]), (ci[(k2 + 2) % 4], cj[(l + 2) % 4])],
                )
                break
        else:
            return R.canonical()


def is_certified_unlink(R: MarkedGraphDiagram) -> bool:
    """Sufficient test that a classical diagram is a trivial link.

    Passes when the strands can be stacked in layers, each strand lying
    wholly above or below any other it crosses, and each strand read from a
    suitable base point meets every self-crossing over-first (or every one
    under-first).  Such a diagram lifts to unknotted curves at distinct
    heights.  ``False`` means "not certified", not "knotted".
    """
    if R.marked_vertices:
        raise ValueError("resolve the marked vertices first")
    if not is_planar(R):
        return False
    R = simplify(R)
    walks = _strand_walks(R)
    owner = {}
    for k, walk in enumerate(walks):
        for i, role in walk:
            owner.setdefault(i, {})[role] = k
    above: dict[int, set[int]] = {k: set() for k in range(len(walks))}
    for i, roles in owner.items():
        if roles["o"] != roles["u"]:
            above[roles["o"]].add(roles["u"])
    # the layering relation must be acyclic
    state: dict[int, int] = {}

    def cyclic(k: int) -> bool:
        state[k] = 1
        for j in above[k]:
            if state.get(j) == 1 or (j not in state and cyclic(j)):
                return True
        state[k] = 2
        return False

    if any(k not in state and cyclic(k) for k in above):
        return False
    for k, walk in enumerate(walks):
        own = [(i, role) for i, role in walk if owner[i]["o"] == owner[i]["u"] == k]
        if not own:
            continue
        ok = False
        for start in range(len(own)):
            seq = own[start:] + own[:start]
            for first in ("o", "u"):
                met = set()
                good = True
                for i, role in seq:
                    if i not in met:
                        met.add(i)
                        if role != first:
                            good = False
                            break
                if good:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def admissibility_report(D: MarkedGraphDiagram) -> AdmissibilityReport:
    """Check that both resolutions are trivial links, as far as cheaply possible.

    A resolution passing :func:`is_certified_unlink` (crossing-free ones
    included) is an unlink.  One whose dihedral:3 coloring count differs from
    ``3**components`` certainly is not.  Anything else stays ``unknown``.
    """
    from .coloring import counting_invariant
    from .quandle import dihedral

    R3 = dihedral(3)
    sides = []
    for sign in ("-", "+"):
        R = resolve(D, sign)
        c = component_count(R)
        nx = len(R.crossings)
        if is_certified_unlink(R):
            sides.append(SideReport(sign, c, nx, None, "unlink"))
            continue
        count = counting_invariant(R, R3)
        sides.append(SideReport(sign, c, nx, count, "not unlink" if count != 3**c else "unknown"))
    statuses = {s.status for s in sides}
    if "not unlink" in statuses:
        status = "certified_inadmissible"
    elif statuses == {"unlink"}:
        status = "certified_admissible"
    else:
        status = "unknown"
    return AdmissibilityReport(status, tuple(sides))

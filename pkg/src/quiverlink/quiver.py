"""Quandle coloring quivers and their in-degree polynomials.

The quiver of a diagram ``D`` over a quandle ``X`` with endomorphism set ``S``
has one vertex per X-coloring ``f`` of ``D`` and one edge ``f -> phi o f`` for
every ``phi`` in ``S``.  Parallel edges are kept; every vertex has out-degree
``len(S)``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coloring import Coloring, enumerate_colorings, induce_on_resolution
from .diagram import MarkedGraphDiagram, resolve
from .polynomial import InDegreePolynomial
from .quandle import Quandle, QuandleMap, dedupe_maps, enumerate_endos


class QuiverTooLarge(ValueError):
    """Raised instead of answering when an isomorphism search would be too big."""


@dataclass(frozen=True, eq=False)
class Quiver:
    vertices: tuple[tuple[int, ...], ...]  # color vectors, sorted
    edges: tuple[tuple[int, int, int], ...]  # (source, target, endo index)
    endos: tuple[tuple[int, ...], ...]  # image vectors of S

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.endos == other.endos
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.endos))

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, t, _ in self.edges:
            deg[t] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for s, _, _ in self.edges:
            deg[s] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Edge multiplicity matrix, endo labels forgotten."""
        n = len(self.vertices)
        A = np.zeros((n, n), dtype=np.int64)
        for s, t, _ in self.edges:
            A[s, t] += 1
        return A

    def vertex_index(self, colors: Sequence[int]) -> int:
        lookup = getattr(self, "_lookup", None)
        if lookup is None:
            lookup = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup[tuple(colors)]

    def has_edge(self, s: int, t: int, endo: int) -> bool:
        edge_set = getattr(self, "_edge_set", None)
        if edge_set is None:
            edge_set = set(self.edges)
            object.__setattr__(self, "_edge_set", edge_set)
        return (s, t, endo) in edge_set


def _normalise_endos(X: Quandle, S: Sequence) -> list[QuandleMap]:
    maps = []
    for phi in S:
        if not isinstance(phi, QuandleMap):
            phi = QuandleMap(X, X, tuple(int(v) for v in phi))
        if phi.source != X or phi.target != X or not phi.is_homomorphism():
            raise ValueError(f"{list(phi.image)} is not an endomorphism of {X.name or 'the quandle'}")
        maps.append(phi)
    return dedupe_maps(maps)


def quiver_from_colorings(colorings: Sequence[Coloring], S: Sequence[QuandleMap]) -> Quiver:
    verts = tuple(c.colors for c in colorings)
    index = {v: i for i, v in enumerate(verts)}
    if len(index) != len(verts):
        raise ValueError("repeated coloring")
    edges = []
    if verts:
        V = np.asarray(verts, dtype=np.int64) - 1
        for k, phi in enumerate(S):
            images = phi.array[V] + 1
            for i, img in enumerate(map(tuple, images.tolist())):
                edges.append((i, index[img], k))
    edges.sort()
    return Quiver(verts, tuple(edges), tuple(phi.image for phi in S))


def build_quiver(D: MarkedGraphDiagram, X: Quandle, S: Sequence) -> Quiver:
    """Quiver of ``D`` over ``X`` with endomorphisms ``S`` (maps or image vectors)."""
    maps = _normalise_endos(X, S)
    return quiver_from_colorings(enumerate_colorings(D, X), maps)


def full_quiver(D: MarkedGraphDiagram, X: Quandle) -> Quiver:
    return quiver_from_colorings(enumerate_colorings(D, X), enumerate_endos(X))


def in_degree_polynomial(Q: Quiver) -> InDegreePolynomial:
    return InDegreePolynomial.from_degrees(Q.in_degrees())


# -- isomorphism ------------------------------------------------------------


def are_isomorphic(Q1: Quiver, Q2: Quiver, max_vertices: int = 64) -> bool:
    """Decide whether two quivers agree as directed multigraphs.

    Endomorphism labels are ignored.  Vertices are matched one at a time,
    pruning on in/out-degree and loop count and on edge multiplicities to
    vertices already matched.
    """
    n = len(Q1)
    if n != len(Q2):
        return False
    if max(n, len(Q2)) > max_vertices:
        raise QuiverTooLarge(f"{n} vertices exceeds the limit of {max_vertices}")
    A, B = Q1.adjacency(), Q2.adjacency()
    if A.sum() != B.sum():
        return False

    def signatures(M: np.ndarray) -> list[tuple]:
        indeg, outdeg, loops = M.sum(axis=0), M.sum(axis=1), np.diag(M)
        return [
            (int(indeg[i]), int(outdeg[i]), int(loops[i]), tuple(sorted(M[i].tolist())), tuple(sorted(M[:, i].tolist())))
            for i in range(len(M))
        ]

    sa, sb = signatures(A), signatures(B)
    if sorted(sa) != sorted(sb):
        return False
    if n == 0:
        return True

    # match rare signatures first, and stay connected to matched vertices
    freq = Counter(sa)
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        linked = [v for v in remaining if any(A[v, u] or A[u, v] for u in order)]
        pool = linked or list(remaining)
        v = min(pool, key=lambda i: (freq[sa[i]], i))
        order.append(v)
        remaining.discard(v)

    candidates = {sig: [j for j in range(n) if sb[j] == sig] for sig in freq}
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in candidates[sa[v]]:
            if used[w]:
                continue
            ok = True
            for u in order[:pos]:
                mu = mapping[u]
                if A[v, u] != B[w, mu] or A[u, v] != B[mu, w]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v], used[w] = w, True
            if extend(pos + 1):
                return True
            mapping[v], used[w] = -1, False
        return False

    return extend(0)


# -- subquiver check --------------------------------------------------------


@dataclass(frozen=True)
class RemarkReport:
    ok: bool
    sizes: dict  # "D", "+", "-" -> vertex counts
    counterexample: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_remark(D: MarkedGraphDiagram, X: Quandle, S: Sequence | None = None) -> RemarkReport:
    """Check that the quiver of D embeds in the quivers of both resolutions.

    The vertex map restricts a coloring to each resolution; every edge
    ``f -> phi o f`` of D's quiver must land on an edge with the same label.
    ``S=None`` means all endomorphisms.
    """
    maps = enumerate_endos(X) if S is None else _normalise_endos(X, S)
    colorings = enumerate_colorings(D, X)
    QD = quiver_from_colorings(colorings, maps)
    sizes = {"D": len(QD)}
    for sign in ("+", "-"):
        R = resolve(D, sign)
        QR = quiver_from_colorings(enumerate_colorings(R, X), maps)
        sizes[sign] = len(QR)
        image = [QR.vertex_index(induce_on_resolution(D, c, sign).colors) for c in colorings]
        if len(set(image)) != len(image):
            return RemarkReport(False, sizes, f"L{sign}: two colorings restrict to the same coloring")
        for s, t, k in QD.edges:
            if not QR.has_edge(image[s], image[t], k):
                return RemarkReport(
                    False,
                    sizes,
                    f"L{sign}: edge {QD.vertices[s]} -> {QD.vertices[t]} under endo {list(maps[k].image)} is missing",
                )
    return RemarkReport(True, sizes)


# -- export -----------------------------------------------------------------


def _collapsed(Q: Quiver) -> list[tuple[int, int, int, list[int]]]:
    grouped: dict[tuple[int, int], list[int]] = {}
    for s, t, k in Q.edges:
        grouped.setdefault((s, t), []).append(k)
    return [(s, t, len(ks), sorted(ks)) for (s, t), ks in sorted(grouped.items())]


def export_dot(Q: Quiver, name: str = "quiver") -> str:
    """Graphviz digraph; parallel edges become one arrow labelled by multiplicity."""
    lines = [f'digraph "{name}" {{']
    for i, v in enumerate(Q.vertices):
        lines.append(f'  v{i} [label="{",".join(map(str, v))}"];')
    for s, t, mult, _ in _collapsed(Q):
        lines.append(f'  v{s} -> v{t} [label="{mult}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(Q: Quiver) -> str:
    data = {
        "vertices": [list(v) for v in Q.vertices],
        "edges": [
            {"from": s, "to": t, "multiplicity": mult, "endos": ks} for s, t, mult, ks in _collapsed(Q)
        ],
        "S": [list(e) for e in Q.endos],
        "in_degree_polynomial": str(in_degree_polynomial(Q)),
    }
    return json.dumps(data, indent=1)


def import_json(text: str) -> Quiver:
    data = json.loads(text)
    edges = []
    for rec in data["edges"]:
        if len(rec["endos"]) != rec["multiplicity"]:
            raise ValueError("edge multiplicity does not match its endo list")
        edges.extend((rec["from"], rec["to"], k) for k in rec["endos"])
    return Quiver(
        tuple(tuple(v) for v in data["vertices"]),
        tuple(sorted(edges)),
        tuple(tuple(e) for e in data["S"]),
    )

"""Shared oracles and fixtures.

The oracles here are deliberately naive: they never call the backtracking
searches they are used to check.
"""

from __future__ import annotations

import itertools
from collections import Counter

import numpy as np
import pytest

from quiverlink import catalog
from quiverlink.coloring import arc_classes
from quiverlink.diagram import Crossing, MarkedVertex
from quiverlink.quandle import Quandle, builtin

TABLE_QUANDLES = ("dihedral:3", "dihedral:4", "tetrahedral")
SMALL_BUILTINS = (
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "tetrahedral",
    "trivial:2",
    "alexander:5:2",
    "paper-ex1",
    "paper-ex2",
    "paper-4elt",
)


def brute_endos(X: Quandle) -> list[tuple[int, ...]]:
    """Every map X -> X that respects the operation, by trying all n^n maps."""
    n = X.n
    t = X.table
    out = []
    for img in itertools.product(range(n), repeat=n):
        f = np.asarray(img)
        if np.array_equal(f[t], t[f[:, None], f[None, :]]):
            out.append(tuple(v + 1 for v in img))
    return out


def brute_colorings(D, X: Quandle, chunk: int = 200_000) -> list[tuple[int, ...]]:
    """Filter all |X|^arcs color vectors against every relation, vectorised."""
    arcs = arc_classes(D)
    k = len(arcs)
    n = X.n
    rel = []
    eq = []
    for node in D.nodes:
        if isinstance(node, Crossing):
            a = arcs.index
            rel.append((a[node.under_in], a[node.over_in], a[node.under_out], node.sign))
        elif isinstance(node, MarkedVertex):
            ids = [arcs.index[e] for e in node.edges]
            eq += [(ids[0], j) for j in ids[1:]]
    t, inv = X.table, X.inverse_table
    total = n**k
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = np.empty((len(idx), k), dtype=np.int64)
        rest = idx.copy()
        for j in range(k - 1, -1, -1):
            cols[:, j] = rest % n
            rest //= n
        ok = np.ones(len(idx), dtype=bool)
        for a, b, c, sign in rel:
            op = t if sign > 0 else inv
            ok &= cols[:, c] == op[cols[:, a], cols[:, b]]
        for a, b in eq:
            ok &= cols[:, a] == cols[:, b]
        found += [tuple(int(v) + 1 for v in row) for row in cols[ok]]
    return sorted(found)


def brute_in_degrees(colorings, endos) -> Counter:
    """In-degree multiset of the quiver, by composing every (coloring, endo) pair."""
    index = {c: i for i, c in enumerate(colorings)}
    deg = [0] * len(colorings)
    for c in colorings:
        for phi in endos:
            deg[index[tuple(phi[v - 1] for v in c)]] += 1
    return Counter(deg)


def catalog_diagrams(kind: str | None = None):
    """(label, diagram) for every stored diagram, alternates included."""
    out = []
    for name in catalog.names(kind):
        for D in catalog.get(name).diagrams:
            out.append((D.name or name, D))
    return out


@pytest.fixture(scope="session")
def table_quandles():
    return {q: builtin(q) for q in TABLE_QUANDLES}


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, after the normal report."""
    results = {}
    for outcome in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            num = int(nodeid.split("test_criterion_")[1].split("_")[0])
            results[num] = results.get(num, "PASS") if outcome == "passed" else "FAIL"
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(f"criterion {num:2d}: {results[num]}")

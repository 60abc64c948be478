"""Marked graph diagrams as plat closures, plus a brute-force search.

A word is a sequence of letters on ``2n`` vertical strands: ``("s", i, +1)``
is a crossing of positions ``i, i+1`` with the strand coming from ``i`` on
top, ``("s", i, -1)`` the opposite, and ``("m", i)`` pinches positions
``i, i+1`` into a marked vertex whose ``L-`` smoothing keeps the vertical
strands.  Caps close positions ``(1,2), (3,4), ...`` above the word and cups
close them below.
"""

from __future__ import annotations

import itertools

from quiverlink.diagram import Circle, Crossing, MarkedGraphDiagram, MarkedVertex, _UnionFind


def plat(word, strands: int = 4, name: str = "") -> MarkedGraphDiagram | None:
    """Diagram of the plat closure, or ``None`` if no orientation fits the pinches."""
    L = len(word)
    uf = _UnionFind()

    def port(k, p):
        return (k, p)

    for k in range(L + 1):
        for p in range(1, strands + 1):
            uf.find(port(k, p))
    for j in range(1, strands, 2):
        uf.union(port(0, j), port(0, j + 1))
        uf.union(port(L, j), port(L, j + 1))
    slots = []  # per node: TL, TR, BL, BR ports
    for k, letter in enumerate(word):
        i = letter[1]
        for p in range(1, strands + 1):
            if p not in (i, i + 1):
                uf.union(port(k, p), port(k + 1, p))
        slots.append((port(k, i), port(k, i + 1), port(k + 1, i), port(k + 1, i + 1)))

    # every port class is an edge; trace L- strands to orient them
    edge_of = {}
    for k, sl in enumerate(slots):
        for s in sl:
            edge_of.setdefault(uf.find(s), len(edge_of) + 1)
    ends: dict[int, list[tuple[int, int]]] = {}
    for k, sl in enumerate(slots):
        for n, s in enumerate(sl):
            ends.setdefault(edge_of[uf.find(s)], []).append((k, n))
    # through-slot along the L- strand: crossing TL<->BR, TR<->BL; vertex TL<->BL, TR<->BR
    def through(k, n):
        if word[k][0] == "s":
            return {0: 3, 3: 0, 1: 2, 2: 1}[n]
        return {0: 2, 2: 0, 1: 3, 3: 1}[n]

    # direction[(k, n)] = True if the strand leaves node k through slot n
    direction: dict[tuple[int, int], bool] = {}
    comp_of: dict[tuple[int, int], tuple[int, bool]] = {}
    ncomp = 0
    for start in ((k, n) for k in range(L) for n in range(4)):
        if start in comp_of:
            continue
        # walk: leave via start
        cur = start
        while cur not in comp_of:
            comp_of[cur] = (ncomp, True)  # leaves here
            e = edge_of[uf.find(slots[cur[0]][cur[1]])]
            a, b = ends[e]
            nxt = b if a == cur else a
            comp_of[nxt] = (ncomp, False)  # arrives here
            cur = (nxt[0], through(*nxt))
        ncomp += 1
    # pinch constraint: left and right vertical strands run opposite ways
    puf: dict[int, tuple[int, int]] = {}

    def pfind(a):
        if a not in puf:
            puf[a] = (a, 0)
        r, par = puf[a]
        if r == a:
            return a, 0
        rr, pp = pfind(r)
        puf[a] = (rr, par ^ pp)
        return rr, par ^ pp

    for k, letter in enumerate(word):
        if letter[0] != "m":
            continue
        ca, la = comp_of[(k, 0)]
        cb, lb = comp_of[(k, 1)]
        r = 1 ^ la ^ lb  # required flip(ca) xor flip(cb)
        ra, pa = pfind(ca)
        rb, pb = pfind(cb)
        if ra == rb:
            if pa ^ pb != r:
                return None
        else:
            puf[ra] = (rb, pa ^ pb ^ r)
    flip = {c: pfind(c)[1] for c in range(ncomp)}

    def leaves(k, n):
        c, l = comp_of[(k, n)]
        return l ^ bool(flip[c])

    nodes = []
    for k, letter in enumerate(word):
        e = [edge_of[uf.find(s)] for s in slots[k]]
        TL, TR, BL, BR = e
        if letter[0] == "m":
            nodes.append(MarkedVertex(TL, BL, BR, TR))
            continue
        sgn = letter[2]
        # strand A: TL-BR, strand B: TR-BL; sgn>0 means A is over
        downA = not leaves(k, 0)  # arrives at TL means moving down
        downB = not leaves(k, 1)
        vA = (1, -1) if downA else (-1, 1)
        vB = (-1, -1) if downB else (1, 1)
        over, under = (vA, vB) if sgn > 0 else (vB, vA)
        s = 1 if over[0] * under[1] - over[1] * under[0] > 0 else -1
        A_in, A_out = (TL, BR) if downA else (BR, TL)
        B_in, B_out = (TR, BL) if downB else (BL, TR)
        if sgn > 0:
            nodes.append(Crossing(s, B_in, A_in, B_out, A_out))
        else:
            nodes.append(Crossing(s, A_in, B_in, A_out, B_out))
    used = set(edge_of)
    nxt = len(edge_of) + 1
    for cls in sorted({uf.find(port(k, p)) for k in range(L + 1) for p in range(1, strands + 1)}):
        if cls not in used:
            nodes.append(Circle(nxt))
            nxt += 1
    return MarkedGraphDiagram(tuple(nodes), name).canonical()


def letters(strands: int):
    out = []
    for i in range(1, strands):
        out += [("s", i, 1), ("s", i, -1), ("m", i)]
    return out


def words(length: int, strands: int, vertices: int):
    """Words with a fixed number of pinches, skipping obvious redundancy."""
    alphabet = letters(strands)
    inner = {("s", 2, 1), ("s", 2, -1), ("m", 2)} if strands == 4 else None

    def ok_pair(a, b):
        if a[0] == b[0] == "s" and a[1] == b[1] and a[2] == -b[2]:
            return False
        if abs(a[1] - b[1]) >= 2 and a > b:  # commuting letters in sorted order
            return False
        return True

    def rec(prefix, m):
        if len(prefix) == length:
            if m == vertices:
                yield tuple(prefix)
            return
        for a in alphabet:
            mm = m + (a[0] == "m")
            if mm > vertices or vertices - mm > length - len(prefix) - 1:
                continue
            if not prefix and strands == 4 and a not in inner:
                continue
            if len(prefix) == length - 1 and strands == 4 and a not in inner:
                continue
            if prefix and not ok_pair(prefix[-1], a):
                continue
            prefix.append(a)
            yield from rec(prefix, mm)
            prefix.pop()

    yield from rec([], 0)

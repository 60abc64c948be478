"""Turn a planar drawing into marked graph diagram code.

A drawing is the ``L-`` resolution: oriented closed polylines plus a list of
*pinches*.  A pinch names two points on antiparallel strands; the strands are
squeezed together there into a marked vertex whose ``L-`` smoothing gives the
drawn curves back.  Crossings are found geometrically, so the output is planar
by construction.

Points are ``(x, y)`` or ``(x, y, z)``; ``z`` is the height of the segment that
starts at the point (default 0).  At a crossing the higher segment is over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from quiverlink.diagram import Circle, Crossing, MarkedGraphDiagram, MarkedVertex, check


@dataclass
class Drawing:
    name: str
    curves: dict[str, list[tuple]]
    pinches: list[tuple[tuple[float, float], tuple[float, float]]] = field(default_factory=list)
    note: str = ""


def _segments(pts):
    pts = [tuple(p) + (0,) * (3 - len(p)) for p in pts]
    return [(pts[i][:2], pts[(i + 1) % len(pts)][:2], pts[i][2]) for i in range(len(pts))]


def _intersect(p, q, r, s):
    """Parameters (t, u) of a proper interior intersection of pq and rs, else None."""
    px, py = map(Fraction, p)
    qx, qy = map(Fraction, q)
    rx, ry = map(Fraction, r)
    sx, sy = map(Fraction, s)
    dx1, dy1, dx2, dy2 = qx - px, qy - py, sx - rx, sy - ry
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    t = ((rx - px) * dy2 - (ry - py) * dx2) / den
    u = ((rx - px) * dy1 - (ry - py) * dx1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise ValueError(f"degenerate intersection between {p}-{q} and {r}-{s}")
    return None


def _locate(segs, point, tol=1e-5):
    """Find (segment index, parameter) of a point lying inside a segment."""
    x, y = point
    for i, (p, q, _) in enumerate(segs):
        dx, dy = q[0] - p[0], q[1] - p[1]
        length = math.hypot(dx, dy)
        if abs(dx * (y - p[1]) - dy * (x - p[0])) > tol * length:
            continue
        t = ((x - p[0]) * dx + (y - p[1]) * dy) / length**2
        if tol < t < 1 - tol:
            return i, t
    return None


def build(d: Drawing) -> MarkedGraphDiagram:
    comps = {name: _segments(pts) for name, pts in d.curves.items()}
    # events[(comp, seg)] -> list of (t, kind, key)
    events: dict[tuple[str, int], list] = {}
    crossings = []  # (over (comp, seg), under (comp, seg), sign)
    names = list(comps)
    for ai, a in enumerate(names):
        for bi in range(ai, len(names)):
            b = names[bi]
            for i, (p, q, zp) in enumerate(comps[a]):
                for j, (r, s, zr) in enumerate(comps[b]):
                    if a == b and (j <= i or j == i + 1 or (i == 0 and j == len(comps[a]) - 1)):
                        continue
                    hit = _intersect(p, q, r, s)
                    if hit is None:
                        continue
                    if zp == zr:
                        raise ValueError(f"{d.name}: crossing of {a}[{i}] and {b}[{j}] has equal heights")
                    t, u = hit
                    key = ("x", len(crossings))
                    da = (q[0] - p[0], q[1] - p[1])
                    db = (s[0] - r[0], s[1] - r[1])
                    over, under = (da, db) if zp > zr else (db, da)
                    sign = 1 if over[0] * under[1] - over[1] * under[0] > 0 else -1
                    crossings.append(sign)
                    events.setdefault((a, i), []).append((t, "over" if zp > zr else "under", key))
                    events.setdefault((b, j), []).append((u, "over" if zr > zp else "under", key))
    for k, (P1, P2) in enumerate(d.pinches):
        key = ("m", k)
        found = []
        for P in (P1, P2):
            where = [(c, _locate(segs, P)) for c, segs in comps.items()]
            where = [(c, w) for c, w in where if w is not None]
            if len(where) != 1:
                raise ValueError(f"{d.name}: pinch point {P} lies on {len(where)} segments")
            (c, (i, t)), = where
            found.append((c, i, t))
            events.setdefault((c, i), []).append((t, f"pinch{len(found)}", key))
        (c1, i1, _), (c2, i2, _) = found
        p, q, _ = comps[c1][i1]
        r, s, _ = comps[c2][i2]
        if (q[0] - p[0]) * (s[0] - r[0]) + (q[1] - p[1]) * (s[1] - r[1]) >= 0:
            raise ValueError(f"{d.name}: pinch {k} joins strands that are not antiparallel")

    # walk each component and cut it into edges at events
    next_edge = 1
    slot: dict = {}  # (key, role) -> edge id
    circles = []
    for c, segs in comps.items():
        seq = []
        for i in range(len(segs)):
            seq.extend((kind, key) for _, kind, key in sorted(events.get((c, i), [])))
        if not seq:
            circles.append(next_edge)
            next_edge += 1
            continue
        first = next_edge
        for n, (kind, key) in enumerate(seq):
            incoming = first + n - 1 if n else None
            outgoing = first + n
            slot[(key, kind, "out")] = outgoing
            if incoming is not None:
                slot[(key, kind, "in")] = incoming
        last = first + len(seq) - 1
        kind0, key0 = seq[0]
        slot[(key0, kind0, "in")] = last
        next_edge = last + 1

    nodes = []
    for k, sign in enumerate(crossings):
        key = ("x", k)
        nodes.append(
            Crossing(
                sign,
                slot[(key, "under", "in")],
                slot[(key, "over", "in")],
                slot[(key, "under", "out")],
                slot[(key, "over", "out")],
            )
        )
    for k, (P1, P2) in enumerate(d.pinches):
        key = ("m", k)
        mid = ((P1[0] + P2[0]) / 2, (P1[1] + P2[1]) / 2)
        ends = []
        for role_kind, P in (("pinch1", P1), ("pinch2", P2)):
            c, (i, _) = next((c, w) for c, segs in comps.items() if (w := _locate(segs, P)))
            p, q, _ = comps[c][i]
            L = math.hypot(q[0] - p[0], q[1] - p[1])
            dx, dy = (q[0] - p[0]) / L * 0.05, (q[1] - p[1]) / L * 0.05
            for sgn, role in ((1, "out"), (-1, "in")):
                ang = math.atan2(P[1] + sgn * dy - mid[1], P[0] + sgn * dx - mid[0])
                ends.append((ang, role_kind, slot[(key, role_kind, role)]))
        ends.sort()
        ring = [(rk, e) for _, rk, e in ends]
        start = next(n for n in range(4) if ring[n][0] == ring[(n + 1) % 4][0] == "pinch1")
        ring = ring[start:] + ring[:start]
        nodes.append(MarkedVertex(*(e for _, e in ring)))
    nodes.extend(Circle(e) for e in circles)
    return check(MarkedGraphDiagram(tuple(nodes), d.name))


def plot(d: Drawing, path: str):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 7))
    colors = "bgrcmyk"
    for n, (c, pts) in enumerate(d.curves.items()):
        segs = _segments(pts)
        for p, q, z in segs:
            ax.annotate(
                "",
                xy=((p[0] + q[0]) / 2, (p[1] + q[1]) / 2),
                xytext=p,
                arrowprops=dict(arrowstyle="->", color=colors[n % 7], lw=1),
            )
            ax.plot([p[0], q[0]], [p[1], q[1]], color=colors[n % 7], lw=1 + z, alpha=0.8)
            ax.text((p[0] + q[0]) / 2, (p[1] + q[1]) / 2, f"{z}", fontsize=6)
        ax.text(pts[0][0], pts[0][1], c, fontsize=12, color=colors[n % 7])
    for P1, P2 in d.pinches:
        ax.plot([P1[0], P2[0]], [P1[1], P2[1]], "k-", lw=4)
    ax.set_aspect("equal")
    ax.set_title(d.name)
    fig.savefig(path, dpi=80)
    plt.close(fig)


def _offset(center, w):
    """Left and right offset polylines of an open centerline (miter joins)."""
    left, right = [], []
    n = len(center)
    for i in range(n):
        dirs = []
        if i > 0:
            dirs.append((center[i][0] - center[i - 1][0], center[i][1] - center[i - 1][1]))
        if i < n - 1:
            dirs.append((center[i + 1][0] - center[i][0], center[i + 1][1] - center[i][1]))
        normals = []
        for dx, dy in dirs:
            L = math.hypot(dx, dy)
            normals.append((-dy / L, dx / L))  # left normal
        nx = sum(v[0] for v in normals) / len(normals)
        ny = sum(v[1] for v in normals) / len(normals)
        scale = w / (nx * normals[0][0] + ny * normals[0][1])
        px, py = center[i][:2]
        left.append((round(px + nx * scale, 6), round(py + ny * scale, 6)))
        right.append((round(px - nx * scale, 6), round(py - ny * scale, 6)))
    return left, right


def finger(center, heights=None, w=0.25, out_side="right", twist=None):
    """Points of a finger along ``center`` (base first), for splicing into a curve.

    The curve must arrive at the base on the ``out_side`` offset and leave
    from the other one.  ``heights[i]`` is the height of centerline segment i.
    ``twist=(i, dz)`` swaps the two strands along segment i, the outgoing
    strand passing at height ``heights[i] + dz``.  Returns (points, tip_point).
    """
    heights = list(heights or [0] * (len(center) - 1))
    left, right = _offset(center, w)
    go, back = (right, left) if out_side == "right" else (left, right)
    if twist is not None:
        t, dz = twist
        go, back = go[: t + 1] + back[t + 1 :], back[: t + 1] + go[t + 1 :]
    go_z = list(heights)
    if twist is not None:
        go_z[twist[0]] += twist[1]
    pts = [go[i] + (go_z[i],) for i in range(len(center) - 1)]
    pts.append(go[-1] + (0,))
    pts.append(back[-1] + (heights[-1],))
    for i in range(len(center) - 2, -1, -1):
        z = heights[i - 1] if i > 0 else 0
        pts.append(back[i] + (z,))
    tip = center[-1][:2]
    return pts, tip

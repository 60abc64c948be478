"""Regenerate ``src/quiverlink/catalog/*.mgd`` from the constructions below.

Surface-link diagrams are drawn as ribbon-style pictures (``drawing.py``,
``routes.py``) or closed plats (``plat.py``); every one is checked for
planarity, admissibility and its surface type before it is written.
Alternates are the primary diagram with Reidemeister-1 curls added, plus any
independent construction listed.

    python tools/build_catalog.py            # rewrite the data files
    python tools/build_catalog.py --check    # only compare with what is on disk
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from drawing import Drawing, build  # noqa: E402
from plat import plat  # noqa: E402
import routes  # noqa: E402

from quiverlink import diagram as dg  # noqa: E402

OUT = HERE.parent / "src" / "quiverlink" / "catalog"


# -- constructions ---------------------------------------------------------------


def circle():
    return dg.parse("diagram 0_1\ncircle 1\n")


def two_discs_one_saddle():
    # two unknotted circles joined by one band: a trivial sphere with ch 1
    return build(Drawing("0_1", {"A": [(-3, -1), (-1, -1), (-1, 1), (-3, 1)], "B": [(1, -1), (3, -1), (3, 1), (1, 1)]},
                         [((-1, 0), (1, 0))]))


def _arc(r, a0, a1, n):
    return [
        (round(r * math.cos(math.radians(a0 + (a1 - a0) * k / n)), 6), round(r * math.sin(math.radians(a0 + (a1 - a0) * k / n)), 6))
        for k in range(n + 1)
    ]


def _c_band():
    # a C-shaped band: one pinch across the band, one across the gap
    C = _arc(3, 20, 340, 16) + _arc(2, 340, 20, 16)
    band = (((C[8][0] + C[9][0]) / 2, (C[8][1] + C[9][1]) / 2), ((C[24][0] + C[25][0]) / 2, (C[24][1] + C[25][1]) / 2))
    c, s = math.cos(math.radians(20)), math.sin(math.radians(20))
    gap = ((round(2.5 * c, 6), round(2.5 * s, 6)), (round(2.5 * c, 6), round(-2.5 * s, 6)))
    return C, [band, gap]


def trivial_torus():
    C, pins = _c_band()
    return build(Drawing("2^2_1", {"C": C}, pins))


def spun_hopf():
    # B sends a finger under one side of A and over the other, then pinches it back onto B
    B = [(6, -2), (10, -2), (10, 2), (9, 2), (9, 5.5), (-4.5, 5.5), (-4.5, -0.25), (0, -0.25, 1), (5, -0.25), (5, 0.25, 1),
         (0, 0.25), (-4, 0.25), (-4, 5), (8.5, 5), (8.5, 2), (6, 2)]
    A = [(-2, -2), (2, -2), (2, 2), (-2, 2, 1)]
    return build(Drawing("6^{0,1}_1", {"A": A, "B": B}, [((5, 0), (6, 0)), ((2, 5.5), (2, 5))]))


def spun_trefoil_drawn():
    from drawing import finger

    c = [(-4, 0), (-6, 0), (-3.5, 3.5), (0, 6), (3.5, 3.5), (6, 0), (2, 0)]
    pts, _ = finger(c, out_side="right")
    A = [(-4, -1.5, 1), (0, -1.5, 0), (4, -1.5, 1), (4, 1.5, 0), (0, 1.5, 1), (-4, 1.5)] + pts
    B = [(-1.5, -4), (1.5, -4, 1), (1.5, 4), (-1.5, 4)]
    return build(Drawing("8_1", {"A": A, "B": B}, [((2, 0), (1.5, 0)), ((-5, 0.25), (-5, -0.25))]))


def double_pass():
    # the finger threads A twice, rising through its disc both times, then comes back under B
    from drawing import finger

    c = [(9, 2), (9, 5), (-4, 5), (-4, 1), (0, 1), (4, 1), (4, -1), (0, -1), (-3, -1), (-3, -4), (8, -4), (8, -2.5)]
    pts, _ = finger(c, [0, 0, 0, -1, 2, 0, -1, 2, 0, 0, 0], 0.25, "right")
    B = [(6, -2), (10, -2), (10, 2)] + pts + [(6, 2)]
    A = [(-2, -2), (2, -2), (2, 2), (-2, 2)]
    return build(Drawing("10^{0,1}_2", {"A": A, "B": B}, [((8, -2.5), (8, -2)), ((2, 5.25), (2, 4.75))]))


def hopf_with_handle():
    # spun_hopf with the sphere circle drawn as a C-shaped band carrying a trivial handle;
    # the finger cuts a chord across the top of the band
    from drawing import finger

    C, pins = _c_band()
    c = [(9, 2), (9, 5), (-4, 5), (-4, 2.5), (0, 2.5), (4, 2.5), (4, 0), (5.5, 0)]
    pts, _ = finger(c, [0, 0, 0, -1, 2, 0, 0], 0.25, "right")
    B = [(6, -2), (10, -2), (10, 2)] + pts + [(6, 2)]
    return build(Drawing("8^{1,1}_1", {"A": C, "B": B}, pins + [((5.5, 0), (6, 0)), ((2, 5.25), (2, 4.75))]))


def trefoil_with_handle():
    # spun_trefoil_drawn plus a short finger from B pinched back onto B (a trivial handle)
    from drawing import finger

    c = [(-4, 0), (-6, 0), (-3.5, 3.5), (0, 6), (3.5, 3.5), (6, 0), (2, 0)]
    pts, _ = finger(c, out_side="right")
    A = [(-4, -1.5, 1), (0, -1.5, 0), (4, -1.5, 1), (4, 1.5, 0), (0, 1.5, 1), (-4, 1.5)] + pts
    hp, _ = finger([(0.5, -4), (0.5, -6), (-0.8, -6), (-0.8, -4.5)], out_side="right")
    B = [(-1.5, -4)] + hp + [(1.5, -4, 1), (1.5, 4), (-1.5, 4)]
    pinches = [((2, 0), (1.5, 0)), ((-5, 0.25), (-5, -0.25)), ((-0.8, -4.5), (-0.8, -4)), ((0.25, -5), (0.75, -5))]
    return build(Drawing("10^1_1", {"A": A, "B": B}, pinches))


def two_spheres_one_torus():
    # one finger from B threads two separate circles, then rejoins B
    from drawing import finger

    c = [(9, 2), (9, 5), (-8, 5), (-8, 0), (-4, 0), (-2, 0), (1, 0), (4, 0), (5.5, 0)]
    pts, _ = finger(c, [0, 0, 0, -1, 2, -1, 2, 0], 0.25, "right")
    B = [(6, -2), (10, -2), (10, 2)] + pts + [(6, 2)]
    A1 = [(-6, -2), (-2.5, -2), (-2.5, 2), (-6, 2)]
    A2 = [(-1.5, -2), (3, -2), (3, 2), (-1.5, 2)]
    return build(Drawing("10^{0,0,1}_1", {"A1": A1, "A2": A2, "B": B}, [((5.5, 0), (6, 0)), ((2, 5.25), (2, 4.75))]))


MIXED = {"TL": "A", "BL": "A", "TR": "B", "BR": "B"}


def route(name, path, target, ccwA, ccwB, bits, layout="plus", corners=MIXED, base=("AL", "o0")):
    lay = routes.plus_layout() if layout == "plus" else routes.apart_layout()
    first, other = base
    edge_to_target = frozenset((path[-1], target))
    d = routes.make(lay, corners, frozenset(base), other if path[0] == first else first, path,
                    edge_to_target, target, ccwA, ccwB, bits, None)
    d.name = name
    return build(d)


RING = ["o0", "o1", "o2", "o3", "o4", "o5", "o6", "o7"]


def trefoil():
    D = plat([("s", 2, 1)] * 3, 4, "3_1")
    return dg.MarkedGraphDiagram(D.nodes, "3_1")


def l4a1():
    return dg.parse("diagram L4a1\nx+ 1 2 3 4\nx+ 4 3 5 6\nx+ 6 5 7 8\nx+ 8 7 2 1\n")


# name, kind, aliases, note, primary builder, independent alternates
ENTRIES = [
    ("0_1", "surface-link", "", "trivial sphere", circle, [two_discs_one_saddle]),
    ("2^2_1", "surface-link", "2^1_1", "trivial torus: one circle, a pinch across the band and one across the gap",
     trivial_torus, []),
    ("6^{0,1}_1", "surface-link", "", "sphere and torus: a finger threads the sphere circle and rejoins its own circle",
     spun_hopf, []),
    ("8^{1,1}_1", "surface-link", "", "two tori: the 6^{0,1}_1 picture with a trivial handle added to the sphere",
     hopf_with_handle, []),
    ("8_1", "surface-link", "", "ribbon sphere, two overlapping circles and one finger pass (spun trefoil type)",
     lambda: route("8_1", RING[:5] + ["AR"], "L", True, True, (1,)), [spun_trefoil_drawn]),
    ("10_1", "surface-link", "", "ribbon sphere, overlapping circles and a two-pass finger",
     lambda: route("10_1", RING[:6] + ["AR", "L"], "AL", True, False, (1, 0)), []),
    ("10_2", "surface-link", "", "ribbon sphere, overlapping circles and a two-pass finger",
     lambda: route("10_2", RING + ["AL", "L"], "AR", True, False, (0, 1)), []),
    ("10^{0,1}_2", "surface-link", "", "sphere and torus: a finger threads the sphere circle twice and rejoins its own circle",
     double_pass, []),
    ("10^1_1", "surface-link", "", "torus: the drawn 8_1 picture with a trivial handle added",
     trefoil_with_handle, []),
    ("10^{0,0,1}_1", "surface-link", "", "two spheres and a torus: one finger threads both sphere circles",
     two_spheres_one_torus, []),
    ("3_1", "classical", "trefoil", "trefoil knot as the plat closure of a three-crossing braid", trefoil, []),
    ("L4a1", "classical", "T(4,2)", "(4,2)-torus link, parallel orientation, all crossings positive", l4a1, []),
]


# -- checks and output -----------------------------------------------------------


def slug(name: str) -> str:
    return re.sub(r"[^0-9A-Za-z]+", "-", name).strip("-")


def checked(D, kind):
    dg.check(D)
    if not dg.is_planar(D):
        raise SystemExit(f"{D.name}: not planar")
    if kind == "surface-link" and dg.admissibility_report(D).status != "certified_admissible":
        raise SystemExit(f"{D.name}: admissibility not certified")
    return D.canonical()


def kinked(D, tag, edge_index, sign):
    edges = D.edges
    K = dg.add_kink(D, edges[edge_index % len(edges)], sign)
    return dg.MarkedGraphDiagram(K.nodes, f"{D.name}/{tag}").canonical()


def entry_text(name, kind, aliases, note, primary, alternates) -> str:
    P = checked(primary(), kind)
    P = dg.MarkedGraphDiagram(P.nodes, name)
    diagrams = [P]
    for k, alt in enumerate(alternates, 1):
        A = checked(alt(), kind)
        diagrams.append(dg.MarkedGraphDiagram(A.nodes, f"{name}/alt{k}"))
    diagrams.append(kinked(P, "curl+", 0, 1))
    diagrams.append(kinked(P, "curl-", len(P.edges) // 2, -1))
    lines = [f"#! name: {name}", f"#! kind: {kind}"]
    if aliases:
        lines.append(f"#! aliases: {aliases}")
    lines.append(f"#! note: {note}")
    if kind == "surface-link":
        lines.append("#! provenance: constructed drawing, matched to the published row by invariants only")
    lines.append("#! generated by tools/build_catalog.py")
    body = "\n".join(dg.serialize(D, canonical=False) for D in diagrams)
    return "\n".join(lines) + "\n\n" + body


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    ap.add_argument("--only", nargs="*")
    args = ap.parse_args(argv)
    stale = []
    for name, kind, aliases, note, primary, alternates in ENTRIES:
        if args.only and name not in args.only:
            continue
        text = entry_text(name, kind, aliases, note, primary, alternates)
        path = OUT / f"{slug(name)}.mgd"
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(path.name)
        else:
            path.write_text(text)
            print("wrote", path.relative_to(HERE.parent))
    if stale:
        print("out of date:", ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

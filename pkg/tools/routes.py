"""Ribbon-style drawings from finger routes on small region graphs.

Two rectangles ``A`` and ``B`` are laid out either crossing like a plus sign
(four corner crossings, over/under chosen per corner) or side by side.  A
finger leaves a side of ``A``, follows a path of region nodes, passing over
or under every rectangle side it meets, and its tip is pinched to a side of
``B`` (or of ``A`` itself).  A second pinch cuts the finger near its base.
``make`` turns such a route into a :class:`drawing.Drawing`; ``search``
enumerates routes and reports the first diagram found for each invariant
signature.
"""
import itertools, sys, time
sys.path.insert(0, str(__import__("pathlib").Path(__file__).resolve().parent))
from drawing import Drawing, build, finger
from quiverlink import diagram as dg
from quiverlink.quandle import builtin
from quiverlink.coloring import counting_invariant
from quiverlink.quiver import full_quiver, in_degree_polynomial
QS = [builtin(n) for n in ("dihedral:3", "dihedral:4", "tetrahedral", "dihedral:5", "dihedral:7")]

class Layout:
    def __init__(self, rects, nodes, edges, corner=None):
        self.rects, self.nodes, self.edges, self.corner = rects, nodes, edges, corner
        self.adj = {n: [m for e in edges for m in e if n in e and m != n] for n in nodes}

def plus_layout():
    nodes = {"o0":(-6,0),"o1":(-3,3),"o2":(0,6),"o3":(3,3),"o4":(6,0),"o5":(3,-3),"o6":(0,-6),"o7":(-3,-3),
             "AL":(-2.75,0),"AR":(2.75,0),"BT":(0,2.75),"BB":(0,-2.75),"L":(0,0)}
    edges = {frozenset((f"o{i}", f"o{(i+1)%8}")): None for i in range(8)}
    for a,b,w in [("o0","AL","A"),("o4","AR","A"),("o2","BT","B"),("o6","BB","B"),("AL","L","B"),("AR","L","B"),
                  ("BT","L","A"),("BB","L","A"),("o1","AL","A"),("o1","BT","B"),("o3","AR","A"),("o3","BT","B"),
                  ("o5","AR","A"),("o5","BB","B"),("o7","AL","A"),("o7","BB","B")]:
        edges[frozenset((a,b))] = w
    return Layout({"A":(-4,4,-1.5,1.5), "B":(-1.5,1.5,-4,4)}, nodes, edges, corner=True)

def apart_layout():
    nodes = {"W":(-7,0),"NWa":(-4.5,3),"N":(0,3),"NEb":(4.5,3),"E":(7,0),"SEb":(4.5,-3),"S":(0,-3),"SWa":(-4.5,-3),"M":(0,0),
             "A1":(-3.8,0),"A2":(-2.2,0),"B1":(2.2,0),"B2":(3.8,0)}
    edges = {}
    ring = ["W","NWa","N","NEb","E","SEb","S","SWa"]
    for i in range(8):
        edges[frozenset((ring[i], ring[(i+1)%8]))] = None
    edges[frozenset(("N","M"))] = None; edges[frozenset(("M","S"))] = None
    edges[frozenset(("A1","A2"))] = None; edges[frozenset(("B1","B2"))] = None
    for a,b,w in [("W","A1","A"),("NWa","A1","A"),("SWa","A1","A"),("M","A2","A"),("N","A2","A"),("S","A2","A"),
                  ("E","B2","B"),("NEb","B2","B"),("SEb","B2","B"),("M","B1","B"),("N","B1","B"),("S","B1","B")]:
        edges[frozenset((a,b))] = w
    return Layout({"A":(-5,-1,-1.5,1.5), "B":(1,5,-1.5,1.5)}, nodes, edges)

def rect_poly(r, ccw, corner_over, me):
    x0,x1,y0,y1 = r
    pts = [(x0,y0),(0.7,y0),(x1,y0),(x1,0.7),(x1,y1),(0.7,y1),(x0,y1),(x0,0.7)]
    pts = [p for p in pts if (x0 < p[0] < x1 or p[0] in (x0,x1)) and (y0 <= p[1] <= y1)]
    pts = list(dict.fromkeys(pts))
    if not ccw: pts = pts[::-1]
    out = []
    for i in range(len(pts)):
        p, q = pts[i], pts[(i+1)%len(pts)]
        mid = ((p[0]+q[0])/2, (p[1]+q[1])/2)
        z = 0
        if corner_over is not None:
            key = ("T" if mid[1] > 0 else "B") + ("R" if mid[0] > 0 else "L")
            z = int(corner_over[key] == me)
        out.append(p + (z,))
    return out

def hit(p, q, poly):
    for i in range(len(poly)):
        r, s = poly[i][:2], poly[(i+1)%len(poly)][:2]
        d1 = (q[0]-p[0], q[1]-p[1]); d2 = (s[0]-r[0], s[1]-r[1])
        den = d1[0]*d2[1]-d1[1]*d2[0]
        if den == 0: continue
        t = ((r[0]-p[0])*d2[1]-(r[1]-p[1])*d2[0])/den
        u = ((r[0]-p[0])*d1[1]-(r[1]-p[1])*d1[0])/den
        if 0 < t < 1 and 0 < u < 1:
            return (p[0]+t*d1[0], p[1]+t*d1[1]), i
    return None

def make(lay, cp, be, other, path, te, tgt, ccwA, ccwB, bits, twist, w=0.25):
    A = rect_poly(lay.rects["A"], ccwA, cp, "A")
    B = rect_poly(lay.rects["B"], ccwB, cp, "B")
    N = lay.nodes
    s0, s1 = N[other], N[path[0]]
    bp, seg = hit(s0, s1, A)
    p, q = A[seg], A[(seg+1)%len(A)]
    d = (q[0]-p[0], q[1]-p[1]); Ld = (d[0]**2+d[1]**2)**.5
    nrm = (-d[1]/Ld, d[0]/Ld)
    if nrm[0]*(s1[0]-bp[0]) + nrm[1]*(s1[1]-bp[1]) < 0: nrm = (-nrm[0], -nrm[1])
    bp = (round(bp[0],6), round(bp[1],6))
    stub = (round(bp[0]+0.4*nrm[0],6), round(bp[1]+0.4*nrm[1],6))
    stub2 = (round(bp[0]+0.8*nrm[0],6), round(bp[1]+0.8*nrm[1],6))
    centre = [bp, stub, stub2] + [N[n] for n in path]
    target = A if te_w(lay, te) == "A" else B
    tp, tseg = hit(N[path[-1]], N[tgt], target)
    last = N[path[-1]]
    L = ((tp[0]-last[0])**2+(tp[1]-last[1])**2)**.5
    tipc = (round(tp[0]-(tp[0]-last[0])/L*0.5,6), round(tp[1]-(tp[1]-last[1])/L*0.5,6))
    centre.append(tipc)
    hs, k = [0, 0, 0], 0
    for i in range(len(path)-1):
        if lay.edges[frozenset((path[i], path[i+1]))] is not None:
            hs.append(-1 if bits[k] else 2); k += 1
        else:
            hs.append(0)
    hs.append(0)
    right = d[0]*nrm[1]-d[1]*nrm[0] < 0
    tw = None if twist is None else (1, twist)
    fpts, _ = finger(centre, hs, w, "right" if right else "left", twist=tw)
    Apts = []
    for i in range(len(A)):
        Apts.append(A[i])
        if i == seg:
            Apts.extend(fpts)
    mid1 = ((centre[0][0]+centre[1][0])/2, (centre[0][1]+centre[1][1])/2)
    n = (nrm[1]*w, -nrm[0]*w)
    P1 = (round(mid1[0]+n[0],6), round(mid1[1]+n[1],6)); P2 = (round(mid1[0]-n[0],6), round(mid1[1]-n[1],6))
    return Drawing("cand", {"A": Apts, "B": B}, [(tipc, (round(tp[0],6), round(tp[1],6))), (P1, P2)])

def te_w(lay, te):
    return lay.edges[te]

def routes(lay, npass, maxlen, self_touch):
    base_edges = [e for e, w in lay.edges.items() if w == "A"]
    for be in base_edges:
        for start in be:
            other = next(iter(be - {start}))
            def walk(path, used, passes):
                if passes > npass or len(path) > maxlen: return
                cur = path[-1]
                if passes == npass:
                    for te, w in lay.edges.items():
                        if cur in te and w and (w == "B" or (self_touch and te != be)) and te not in used:
                            tgt = next(iter(te - {cur}))
                            if tgt in path: continue
                            yield list(path), te, tgt
                for m in lay.adj[cur]:
                    e = frozenset((cur, m))
                    if m in path or e in used or m == other: continue
                    yield from walk(path + [m], used | {e}, passes + (lay.edges[e] is not None))
            yield from ((be, other) + r for r in walk([start], {be}, 0))

def sig(D):
    return (dg.surface_components(D), dg.euler_characteristic(D)) + tuple(counting_invariant(D, Q) for Q in QS)

def search(lay, npass, maxlen=7, self_touch=True, twists=(None,), patterns=(None,), ch=None, want=None, log=print, pre=None, self_only=False):
    seen = {}
    t0 = time.time(); n = 0
    for cp in patterns:
        for be, other, path, te, tgt in routes(lay, npass, maxlen, self_touch):
            if self_only and te_w(lay, te) != 'A': continue
            for ccwA, ccwB, tw in itertools.product((True, False), (True, False), twists):
                if te_w(lay, te) == "A" and not ccwB: continue
                for bits in itertools.product((0,1), repeat=npass):
                    n += 1
                    try:
                        d = make(lay, cp, be, other, path, te, tgt, ccwA, ccwB, bits, tw)
                        D = build(d)
                    except (ValueError, ZeroDivisionError, TypeError):
                        continue
                    if ch is not None and dg.ch_number(D) != ch: continue
                    if pre and not pre(D): continue
                    s = sig(D)
                    if s in seen: continue
                    if want and not want(s): continue
                    if dg.admissibility_report(D).status != "certified_admissible": continue
                    seen[s] = (cp, be, other, path, te, tgt, ccwA, ccwB, bits, tw)
                    log(s, dg.ch_number(D), seen[s])
    log("done", n, round(time.time()-t0))
    return seen

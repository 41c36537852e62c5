"""Exact integer oracles for grid drawings.

No floating point is used anywhere here.  Each check returns a
``(passed, witness)`` pair; the witness is ``None`` on success.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

import numpy as np

from .drawing import GridDrawing
from .graph import OuterplaneGraph, internal_faces

_INT64_SAFE = 2 ** 30


def orient(a, b, c) -> int:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(p, q, r) -> bool:
    """r collinear with pq lies on the closed segment pq."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_conflict(p1, p2, q1, q2, shared: bool = False) -> bool:
    """Whether two edges meet anywhere they should not.

    With ``shared`` set, p1 == q1 is the common endpoint and the edges conflict
    only if they overlap along a common direction.
    """
    if shared:
        return orient(p1, p2, q2) == 0 and (p2[0] - p1[0]) * (q2[0] - p1[0]) + (p2[1] - p1[1]) * (q2[1] - p1[1]) > 0
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return True
    return ((o1 == 0 and _on_segment(p1, p2, q1)) or (o2 == 0 and _on_segment(p1, p2, q2))
            or (o3 == 0 and _on_segment(q1, q2, p1)) or (o4 == 0 and _on_segment(q1, q2, p2)))


def _pair_conflicts(P1, P2, Q1, Q2, shared_mask, same_dir):
    """Vectorized :func:`segments_conflict` over aligned int64 coordinate arrays."""
    def orient_v(a, b, c):
        return np.sign((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))

    def on_seg(p, q, r):
        return ((np.minimum(p[:, 0], q[:, 0]) <= r[:, 0]) & (r[:, 0] <= np.maximum(p[:, 0], q[:, 0]))
                & (np.minimum(p[:, 1], q[:, 1]) <= r[:, 1]) & (r[:, 1] <= np.maximum(p[:, 1], q[:, 1])))

    o1, o2 = orient_v(P1, P2, Q1), orient_v(P1, P2, Q2)
    o3, o4 = orient_v(Q1, Q2, P1), orient_v(Q1, Q2, P2)
    hit = (o1 * o2 < 0) & (o3 * o4 < 0)
    hit |= (o1 == 0) & on_seg(P1, P2, Q1)
    hit |= (o2 == 0) & on_seg(P1, P2, Q2)
    hit |= (o3 == 0) & on_seg(Q1, Q2, P1)
    hit |= (o4 == 0) & on_seg(Q1, Q2, P2)
    # pairs with a common endpoint always touch; keep them only if they overlap
    return np.where(shared_mask, same_dir, hit)


def check_planar(d: GridDrawing):
    """No two edges meet except at a common endpoint; no two vertices coincide.

    Candidate pairs come from an x-interval sweep, so the work is quadratic
    only in the number of x-overlapping edge pairs.
    """
    seen = {}
    for v, p in d.pos.items():
        if p in seen:
            return False, {"vertices": [seen[p], v]}
        seen[p] = v
    edges = d.edges()
    if len(edges) < 2:
        return True, None
    pos = d.pos
    big = max(max(abs(x), abs(y)) for x, y in pos.values()) >= _INT64_SAFE
    if big:
        return _check_planar_slow(d, edges)
    ea = np.array([e[0] for e in edges], dtype=np.int64)
    eb = np.array([e[1] for e in edges], dtype=np.int64)
    A = np.array([pos[e[0]] for e in edges], dtype=np.int64)
    B = np.array([pos[e[1]] for e in edges], dtype=np.int64)
    xlo = np.minimum(A[:, 0], B[:, 0])
    xhi = np.maximum(A[:, 0], B[:, 0])
    ylo = np.minimum(A[:, 1], B[:, 1])
    yhi = np.maximum(A[:, 1], B[:, 1])
    order = np.argsort(xlo, kind="stable")
    xs = xlo[order]
    reach = np.searchsorted(xs, xhi[order], side="right")
    for r in range(len(edges) - 1):
        lo, hi = r + 1, reach[r]
        if hi <= lo:
            continue
        i = order[r]
        js = order[lo:hi]
        js = js[(ylo[js] <= yhi[i]) & (yhi[js] >= ylo[i])]
        if len(js) == 0:
            continue
        # orient every candidate so that a shared endpoint (if any) is first in both
        ia, ib = ea[i], eb[i]
        ja, jb = ea[js], eb[js]
        flip_i_a = (ja == ib) | (jb == ib)
        shared = (ja == ia) | (jb == ia) | flip_i_a
        P1 = np.where(flip_i_a[:, None], B[i], A[i])
        P2 = np.where(flip_i_a[:, None], A[i], B[i])
        sh_vertex = np.where(flip_i_a, ib, ia)
        flip_j = shared & (jb == sh_vertex)
        Q1 = np.where(flip_j[:, None], B[js], A[js])
        Q2 = np.where(flip_j[:, None], A[js], B[js])
        cross = (P2[:, 0] - P1[:, 0]) * (Q2[:, 1] - P1[:, 1]) - (P2[:, 1] - P1[:, 1]) * (Q2[:, 0] - P1[:, 0])
        dot = (P2[:, 0] - P1[:, 0]) * (Q2[:, 0] - P1[:, 0]) + (P2[:, 1] - P1[:, 1]) * (Q2[:, 1] - P1[:, 1])
        same_dir = (cross == 0) & (dot > 0)
        bad = _pair_conflicts(np.broadcast_to(P1, Q1.shape), np.broadcast_to(P2, Q1.shape), Q1, Q2,
                              shared, same_dir)
        if bad.any():
            j = js[int(np.argmax(bad))]
            return False, {"edges": [list(edges[int(i)]), list(edges[int(j)])]}
    return True, None


def _check_planar_slow(d, edges):
    pos = d.pos
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, e = edges[j]
            common = {a, b} & {c, e}
            if common:
                s = common.pop()
                p2 = pos[b if s == a else a]
                q2 = pos[e if s == c else c]
                bad = segments_conflict(pos[s], p2, pos[s], q2, shared=True)
            else:
                bad = segments_conflict(pos[a], pos[b], pos[c], pos[e])
            if bad:
                return False, {"edges": [list(edges[i]), list(edges[j])]}
    return True, None


def signed_area2(points) -> int:
    return sum(points[i - 1][0] * points[i][1] - points[i][0] * points[i - 1][1] for i in range(len(points)))


def check_faces_convex(d: GridDrawing, strict: bool = False, graph: OuterplaneGraph | None = None):
    """Every internal face is a convex (or strictly convex) polygon."""
    g = graph or d.graph
    for fid, face in enumerate(internal_faces(g)):
        pts = [d.pos[v] for v in face]
        if signed_area2(pts) < 0:
            pts.reverse()
        elif signed_area2(pts) == 0:
            return False, {"face": fid, "vertices": face}
        h = len(pts)
        for i in range(h):
            c = orient(pts[i - 1], pts[i], pts[(i + 1) % h])
            if c < 0 or (strict and c == 0):
                return False, {"face": fid, "vertices": face, "at": face[i]}
    return True, None


def _angle_cmp(o):
    def half(p):
        dx, dy = p[0] - o[0], p[1] - o[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        c = orient(o, p, q)
        return -1 if c > 0 else (1 if c < 0 else 0)
    return cmp


def rotation_system(d: GridDrawing, edges) -> dict[int, list[int]]:
    """Neighbors of every vertex in counter-clockwise angular order."""
    nbrs: dict[int, list[int]] = {v: [] for v in d.pos}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = {}
    for v, lst in nbrs.items():
        cmp = _angle_cmp(d.pos[v])
        rot[v] = sorted(lst, key=cmp_to_key(lambda p, q: cmp(d.pos[p], d.pos[q])))
    return rot


def _trace(rot, index, a, b, limit):
    walk = [a]
    start = (a, b)
    while True:
        nb = rot[b]
        c = nb[(index[b][a] - 1) % len(nb)]
        a, b = b, c
        if (a, b) == start:
            return walk
        walk.append(a)
        if len(walk) > limit:
            return None


def outer_walk(d: GridDrawing, edges) -> list[int] | None:
    """Counter-clockwise outer boundary walk traced from the lowest-leftmost vertex."""
    rot = rotation_system(d, edges)
    index = {v: {w: i for i, w in enumerate(lst)} for v, lst in rot.items()}
    s = min(d.pos, key=lambda v: d.pos[v])
    best, best_area = None, None
    limit = 2 * len(edges) + 1
    for w in rot[s]:
        walk = _trace(rot, index, s, w, limit)
        if walk is None:
            continue
        area = signed_area2([d.pos[v] for v in walk])
        if best_area is None or area < best_area:
            best, best_area = walk, area
    if best is None:
        return None
    best.reverse()
    i = best.index(s)
    return best[i:] + best[:i]


def check_outer_embedding(d: GridDrawing, graph: OuterplaneGraph | None = None):
    """The traced outer face equals the graph's outer cycle up to rotation."""
    g = graph or d.graph
    walk = outer_walk(d, g.edges())
    if walk is None or len(walk) != g.n or len(set(walk)) != g.n:
        missing = sorted(set(g.outer) - set(walk or []))
        return False, {"walk": walk, "missing": missing}
    i = g.index[walk[0]]
    expect = list(g.outer[i:]) + list(g.outer[:i])
    if walk != expect:
        return False, {"walk": walk}
    return True, None


def check_uv_separated(d: GridDrawing, root=None, graph: OuterplaneGraph | None = None):
    """P.1 to P.4 for the root edge (u, v)."""
    g = graph or d.graph
    u, v = root or d.root or (g.outer[0], g.outer[-1])
    pos = d.pos
    (ux, uy), (vx, vy) = pos[u], pos[v]
    if uy != vy:
        return False, {"property": "P.1"}
    nbrs = set()
    for a, b in g.edges():
        if a in (u, v):
            nbrs.add(b)
        if b in (u, v):
            nbrs.add(a)
    nbrs -= {u, v}
    for w in sorted(nbrs):
        if pos[w][1] != uy - 1:
            return False, {"property": "P.2", "vertex": w}
    for w, (x, y) in pos.items():
        if w not in (u, v) and y > uy - 1:
            return False, {"property": "P.3", "vertex": w}
    for w, (x, y) in pos.items():
        if (w != u and x <= ux) or (w != v and x >= vx):
            return False, {"property": "P.4", "vertex": w}
    return True, None


def check_grid_lines(d: GridDrawing):
    """Every vertical and horizontal grid line of the bounding box holds a vertex."""
    xs = {p[0] for p in d.pos.values()}
    ys = {p[1] for p in d.pos.values()}
    for axis, used in (("x", xs), ("y", ys)):
        lo, hi = min(used), max(used)
        if len(used) != hi - lo + 1:
            gap = next(c for c in range(lo, hi + 1) if c not in used)
            return False, {"axis": axis, "line": gap}
    return True, None


def check_block(d: GridDrawing, gate_in, gate_out=None):
    """B.1 to B.3 for a fan drawing; ``gate_out`` None skips B.3."""
    pos = d.pos
    for name, gate in (("gate_in", gate_in), ("gate_out", gate_out)):
        if gate is None:
            continue
        (ax, ay), (bx, by) = pos[gate[0]], pos[gate[1]]
        if ax != bx or {ay, by} != {0, 1}:
            return False, {"property": "B.1", "gate": name}
    xs = [p[0] for p in pos.values()]
    for prop, gate, extreme in (("B.2", gate_in, min(xs)), ("B.3", gate_out, max(xs))):
        if gate is None:
            continue
        at = sorted(v for v, p in pos.items() if p[0] == extreme)
        if pos[gate[0]][0] != extreme or at != sorted(gate):
            return False, {"property": prop, "vertices": at}
    return True, None


def measure(d: GridDrawing) -> dict[str, int]:
    x0, y0, x1, y1 = d.bbox()
    w, h = x1 - x0 + 1, y1 - y0 + 1
    return {"width": w, "height": h, "area": w * h}


@dataclass
class VerifyReport:
    checks: dict[str, dict] = field(default_factory=dict)
    metrics: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks.values())

    def add(self, name, result):
        passed, witness = result
        entry = {"pass": bool(passed)}
        if witness is not None:
            entry["witness"] = witness
        self.checks[name] = entry

    def to_dict(self) -> dict:
        return {"checks": self.checks, "metrics": self.metrics}

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyReport":
        return cls(dict(d["checks"]), dict(d["metrics"]))


def verify_drawing(d: GridDrawing, mode: str = "convex", root=None, blocks=()) -> VerifyReport:
    """Run the oracle suite for ``mode`` (``convex`` or ``strict``).

    ``blocks`` is an optional sequence of (drawing, gate_in, gate_out) fan
    drawings checked with :func:`check_block`.
    """
    rep = VerifyReport()
    rep.add("planar", check_planar(d))
    planar = rep.checks["planar"]["pass"]
    rep.add("faces_convex", check_faces_convex(d, strict=(mode == "strict")) if planar
            else (False, {"skipped": "not planar"}))
    rep.add("outer_embedding", check_outer_embedding(d) if planar else (False, {"skipped": "not planar"}))
    if mode == "convex":
        rep.add("uv_separated", check_uv_separated(d, root))
        rep.add("grid_lines", check_grid_lines(d))
    for i, (bd, gin, gout) in enumerate(blocks):
        rep.add(f"block_{i}", check_block(bd, gin, gout))
    rep.metrics = measure(d)
    return rep

"""Internally-strictly-convex drawings of outerpaths in O(n k^2) area.

Cycle vertices in the two face lemmas are listed so that the drawing runs
clockwise: v_1 at the origin, v_2 directly (or slanted) above it, and the
remaining vertices to the right of the line v_1 v_2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .drawing import DrawingError, GridDrawing
from .graph import Edge, GraphError, OuterplaneGraph, _key, weak_dual


def _cycle_edges(labels) -> tuple[Edge, ...]:
    return tuple(sorted(_key(a, b) for a, b in zip(labels, labels[1:] + labels[:1])))


# ---------------------------------------------------------------------------
# face lemmas

def fan_coords(h: int, x2: int = 0) -> list[tuple[int, int]]:
    """Coordinates of v_1..v_h for a cycle drawn on the segment (0,0)-(x2,1)."""
    if h < 3:
        raise DrawingError("a cycle needs at least 3 vertices")
    if x2 < 0:
        raise DrawingError("x(v_2) must be non-negative")
    pts = [(0, 0), (x2, 1)]
    for j in range(3, h):
        pts.append((x2 * (j - 1) + (j - 2) * (j - 1) // 2, j - 1))
    pts.append((x2 + h - 2, 1))
    return pts


def two_gate_coords(h: int, i: int, x2: int = 0) -> list[tuple[int, int]]:
    """Coordinates of v_1..v_h with e_1 = (v_1, v_2) on (0,0)-(x2,1) and e_2 = (v_i, v_i+1) vertical."""
    if h <= 3:
        raise DrawingError("the two-gate construction needs h > 3")
    if not 3 <= i <= h - 1:
        raise DrawingError(f"e_2 = (v_{i}, v_{i + 1}) must not be adjacent to e_1")
    c1 = fan_coords(i, x2)                      # v_1 .. v_i
    c2 = fan_coords(h - i + 1, 1) if h - i + 1 >= 3 else [(0, 0)]   # v_1, v_h, ..., v_i+1
    m = max(p[0] for p in c1 + c2)
    pts = c1[:-1] + [(1 + m, 1), (1 + m, 0)]    # v_1 .. v_i+1
    # v_i+2 .. v_h come from C_2 in reverse, mirrored below the x-axis
    tail = c2[1:-1]
    pts += [(x, -y) for x, y in reversed(tail)]
    return pts


@dataclass(frozen=True)
class CycleDrawSpec:
    h: int
    x_v2: int = 0
    gate_index: int | None = None


def draw_cycle_fan(spec: CycleDrawSpec | int, x_v2: int = 0, labels=None) -> GridDrawing:
    """Strictly-convex drawing of the cycle v_1..v_h (labels default to 1..h)."""
    if isinstance(spec, CycleDrawSpec):
        h, x_v2 = spec.h, spec.x_v2
    else:
        h = spec
    labels = list(labels) if labels is not None else list(range(1, h + 1))
    pts = fan_coords(h, x_v2)
    return GridDrawing(dict(zip(labels, pts)), extra_edges=_cycle_edges(labels))


def draw_cycle_two_gates(spec: CycleDrawSpec | int, i: int | None = None, x_v2: int = 0,
                         labels=None) -> GridDrawing:
    if isinstance(spec, CycleDrawSpec):
        h, i, x_v2 = spec.h, spec.gate_index, spec.x_v2
    else:
        h = spec
    if i is None:
        raise DrawingError("gate index required")
    labels = list(labels) if labels is not None else list(range(1, h + 1))
    pts = two_gate_coords(h, i, x_v2)
    return GridDrawing(dict(zip(labels, pts)), extra_edges=_cycle_edges(labels))


def shift_apex(d: GridDrawing, dx: int, dy: int, apex: int | None = None) -> GridDrawing:
    """Move the last cycle vertex dx right and -dy down (dx >= 0, dy <= 0)."""
    if dx < 0 or dy > 0:
        raise DrawingError("the apex may only move right and/or down")
    apex = max(d.pos) if apex is None else apex
    x, y = d.pos[apex]
    target = (x + dx, y + dy)
    if any(p == target for k, p in d.pos.items() if k != apex):
        raise DrawingError(f"shifted apex would coincide with another vertex at {target}")
    pos = dict(d.pos)
    pos[apex] = target
    return d.replace(pos)


def shift_gate_pair(d: GridDrawing, dx: int, gate: Edge) -> GridDrawing:
    """Move both endpoints of the vertical gate ``gate`` dx units right."""
    if dx < 0:
        raise DrawingError("gate pair moves right only")
    pos = dict(d.pos)
    for v in gate:
        pos[v] = (pos[v][0] + dx, pos[v][1])
    return d.replace(pos)


# ---------------------------------------------------------------------------
# fan decomposition

@dataclass(frozen=True)
class FanGraph:
    """Consecutive faces sharing ``hub`` (None for a single face without internal edge).

    Gates are ordered (u, v) with u earlier on the outer cycle counted from u_0.
    ``gate_out`` is None only for a terminal triangle.
    """

    graph: OuterplaneGraph
    faces: tuple[tuple[int, ...], ...]
    gate_in: Edge
    gate_out: Edge | None
    hub: int | None

    @property
    def n_i(self) -> int:
        return self.graph.n

    @property
    def k_i(self) -> int:
        return max(len(f) for f in self.faces)


@dataclass(frozen=True)
class FanDecomposition:
    graph: OuterplaneGraph
    fans: tuple[FanGraph, ...]

    @property
    def gates(self) -> list[Edge | None]:
        return [self.fans[0].gate_in] + [f.gate_out for f in self.fans]


def _face_path(g: OuterplaneGraph) -> list[list[int]]:
    faces, adj, is_path = weak_dual(g)
    if not is_path:
        raise GraphError("weak dual is not a path")
    if len(faces) == 1:
        return faces
    idx = g.index
    ends = [i for i in range(len(faces)) if len(adj[i]) <= 1]
    start = min(ends, key=lambda i: sorted(idx[v] for v in faces[i]))
    order, prev, cur = [start], -1, start
    while True:
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt:
            return [faces[i] for i in order]
        prev, cur = cur, nxt[0]
        order.append(cur)


def _neighbors_in_face(face, v):
    i = face.index(v)
    return face[i - 1], face[(i + 1) % len(face)]


def fan_decompose(g: OuterplaneGraph) -> FanDecomposition:
    """Split an outerpath into fans glued at gate edges."""
    g.validate()
    faces = _face_path(g)
    idx, n = g.index, g.n
    if len(faces) == 1:
        u0, v0 = g.outer[0], g.outer[-1]
    else:
        a, b = sorted(set(faces[0]) & set(faces[1]), key=lambda v: idx[v])
        x = a
        y = next(w for w in _neighbors_in_face(faces[0], x) if w != b)
        u0, v0 = (y, x) if idx[y] == (idx[x] + 1) % n else (x, y)
    base = idx[u0]

    def off(v):
        return (idx[v] - base) % n

    def oriented(e):
        return tuple(sorted(e, key=off))

    fans = []
    gate = (u0, v0)
    j = 0
    while j < len(faces):
        runs = {}
        for c in gate:
            L = 1
            while j + L < len(faces) and c in faces[j + L]:
                L += 1
            runs[c] = L
        hub = max(gate, key=lambda c: runs[c]) if max(runs.values()) > 1 else None
        L = runs[hub] if hub is not None else 1
        chunk = faces[j:j + L]
        if j + L < len(faces):
            gate_out = oriented(set(chunk[-1]) & set(faces[j + L]))
        else:
            gate_out = _terminal_gate(chunk, gate, hub, off)
        verts = sorted({v for f in chunk for v in f}, key=lambda v: idx[v])
        chords = [_key(*sorted(set(p) & set(q))) for p, q in zip(chunk, chunk[1:])]
        sub = OuterplaneGraph.build(verts, chords)
        fans.append(FanGraph(sub, tuple(tuple(f) for f in chunk), gate, gate_out, hub))
        gate = gate_out
        j += L
    return FanDecomposition(g, tuple(fans))


def _terminal_gate(chunk, gate, hub, off):
    last = chunk[-1]
    if hub is not None:
        # external edge of the last face at the non-hub end of the last chord
        b = next(v for v in set(chunk[-2]) & set(last) if v != hub)
        c = next(w for w in _neighbors_in_face(last, b) if w != hub)
        return tuple(sorted((b, c), key=off))
    if len(last) == 3:
        return None
    cyc = _lemma_cycle(last, gate[0], gate[1], clockwise=True)
    i = (len(cyc) + 2) // 2
    return tuple(sorted((cyc[i - 1], cyc[i]), key=off))


# ---------------------------------------------------------------------------
# block drawings

def _lemma_cycle(face, first, second, clockwise):
    """Face boundary starting first, second, in the drawing's traversal direction."""
    cyc = list(reversed(face)) if clockwise else list(face)
    i = cyc.index(first)
    cyc = cyc[i:] + cyc[:i]
    if cyc[1] != second:
        raise GraphError(f"face {face} does not continue from {first} to {second}")
    return cyc


def draw_fan_block(fan: FanGraph) -> GridDrawing:
    """Block drawing: gate_in at (0,0)-(0,1) leftmost, gate_out vertical and rightmost."""
    u, v = fan.gate_in
    hub = fan.hub if fan.hub is not None else u
    other = v if hub == u else u
    clockwise = hub == u
    faces = [list(f) for f in fan.faces]
    pos = {hub: (0, 0), other: (0, 1)}
    if len(faces) == 1 and fan.gate_out is None:
        cyc = _lemma_cycle(faces[0], hub, other, clockwise)
        pos.update(zip(cyc, fan_coords(3)))
    else:
        z = other
        for f in faces[:-2]:
            cyc = _lemma_cycle(f, hub, z, clockwise)
            pos.update(zip(cyc[2:], fan_coords(len(cyc), pos[z][0])[2:]))
            z = cyc[-1]
        merged = _lemma_cycle(faces[-2], hub, z, clockwise) if len(faces) >= 2 else _lemma_cycle(faces[-1], hub, z, clockwise)
        if len(faces) >= 2:
            rest = _lemma_cycle(faces[-1], hub, merged[-1], clockwise)
            merged = merged + rest[2:]
        a, b = fan.gate_out
        ia, ib = merged.index(a), merged.index(b)
        i = min(ia, ib) + 1  # 1-based index of the first gate vertex
        if abs(ia - ib) != 1:
            raise GraphError("gate_out is not an edge of the last face")
        pos.update(zip(merged[2:], two_gate_coords(len(merged), i, pos[z][0])[2:]))
        gx = pos[a][0]
        others = max(p[0] for k, p in pos.items() if k not in (a, b))
        if others + 1 > gx:
            for w in (a, b):
                pos[w] = (others + 1, pos[w][1])
    if not clockwise:
        pos = {k: (x, 1 - y) for k, (x, y) in pos.items()}
    return GridDrawing(pos, fan.graph)


def glue_blocks(blocks: list[GridDrawing], fans) -> dict[int, tuple[int, int]]:
    pos: dict[int, tuple[int, int]] = {}
    dx = 0
    for fan, bd in zip(fans, blocks):
        if pos:
            u, v = fan.gate_in
            if pos[u] != (bd.pos[u][0] + dx, bd.pos[u][1]) or pos[v] != (bd.pos[v][0] + dx, bd.pos[v][1]):
                raise DrawingError("blocks disagree at a shared gate")
        for k, (x, y) in bd.pos.items():
            pos[k] = (x + dx, y)
        if fan.gate_out is not None:
            dx = pos[fan.gate_out[0]][0]
    return pos


def draw_outerpath_strict(g: OuterplaneGraph, with_blocks: bool = False):
    """Internally-strictly-convex drawing of an outerpath.

    With ``with_blocks`` the result is (drawing, blocks) where each block is
    (block drawing in final coordinates, gate_in, gate_out).
    """
    dec = fan_decompose(g)
    raw = [draw_fan_block(f) for f in dec.fans]
    pos = glue_blocks(raw, dec.fans)
    y0 = min(p[1] for p in pos.values())
    pos = {k: (x, y - y0) for k, (x, y) in pos.items()}
    d = GridDrawing(pos, g)
    if not with_blocks:
        return d
    blocks = []
    for fan in dec.fans:
        bp = {k: pos[k] for k in fan.graph.outer}
        # re-base so gates sit at y in {0, 1} as the block properties require
        bp = {k: (x, y + y0) for k, (x, y) in bp.items()}
        blocks.append((GridDrawing(bp, fan.graph), fan.gate_in, fan.gate_out))
    return d, blocks

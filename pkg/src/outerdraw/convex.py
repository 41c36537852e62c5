"""Internally-convex grid drawings of outerplanar graphs in O(n^1.5) area.

Everything runs in position space (see :class:`Frame`): the rooted subgraph
G[a, b] is the position interval [a, b].  Subproblems are solved bottom-up from
an explicit work stack, so the recursion depth of the construction never hits
the interpreter stack.
"""
from __future__ import annotations

from collections import Counter

from .decomp import raw_levels, raw_spine, raw_turn_index, path_spans
from .drawing import COORD_LIMIT, DrawingError, GridDrawing, translate
from .graph import OuterplaneGraph, RootedOuterplaneGraph, ingest


class _Piece:
    """Finished drawing of some G[a, b]: a at (0, 0), b at (w-1, 0), body in -(h-1) <= y <= -1."""

    __slots__ = ("pos", "w", "h")

    def __init__(self, pos, w, h):
        self.pos = pos
        self.w = w
        self.h = h


class _Canvas:
    """Drawing under construction with an incrementally maintained bounding box."""

    __slots__ = ("pos", "x0", "y0", "x1", "y1")

    def __init__(self, pos):
        self.pos = pos
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)

    def _grow(self, xa, ya, xb, yb):
        self.x0 = min(self.x0, xa)
        self.y0 = min(self.y0, ya)
        self.x1 = max(self.x1, xb)
        self.y1 = max(self.y1, yb)

    def put(self, piece, ox, oy, keep=None):
        """Translate ``piece`` by (ox, oy); ``keep`` retains its current position."""
        saved = self.pos.get(keep)
        pos = self.pos
        for k, (x, y) in piece.pos.items():
            pos[k] = (x + ox, y + oy)
        if saved is not None:
            pos[keep] = saved
        self._grow(ox, oy - piece.h + 1, ox + piece.w - 1, oy)

    def put_rot180(self, piece, ox, oy):
        pos = self.pos
        for k, (x, y) in piece.pos.items():
            pos[k] = (ox - x, oy - y)
        self._grow(ox - piece.w + 1, oy, ox, oy + piece.h - 1)

    def put_rot90(self, piece, ox, oy, keep=None):
        saved = self.pos.get(keep)
        pos = self.pos
        for k, (x, y) in piece.pos.items():
            pos[k] = (ox - y, oy + x)
        if saved is not None:
            pos[keep] = saved
        self._grow(ox, oy, ox + piece.h - 1, oy + piece.w - 1)

    def set(self, k, p):
        self.pos[k] = p
        self._grow(p[0], p[1], p[0], p[1])


def _chain_left(cv, path, s, done):
    """Attach G[P_j, P_j+1] for j < s leftwards from P_s."""
    for j in range(s - 1, -1, -1):
        pc = done.pop((path[j], path[j + 1]))
        x, y = cv.pos[path[j + 1]]
        cv.put(pc, x - pc.w + 1, y)


def _chain_right(cv, path, start, anchor, done):
    """Attach G[P_j, P_j+1] for j >= start rightwards; the first copy of P_start sits at ``anchor``."""
    for j in range(start, len(path) - 1):
        pc = done.pop((path[j], path[j + 1]))
        if j == start:
            cv.put(pc, anchor[0], anchor[1], keep=path[j])
        else:
            x, y = cv.pos[path[j]]
            cv.put(pc, x, y)


def _attach_level(cv, level, done, roots):
    """Turn a drawing of G*_i (or None when level i has no transition) into one of G*_{i-1}."""
    path, s = level.path, level.s
    if s is None:
        cv = _Canvas({path[0]: (0, 0)})
        _chain_right(cv, path, 0, (0, 0), done)
    else:
        _chain_left(cv, path, s, done)
        if s + 2 < len(path):
            _chain_right(cv, path, s + 1, (cv.x1, cv.pos[path[s + 1]][1]), done)
    top = cv.pos[path[0] if s is None else path[s]][1]
    x0, x1 = cv.x0, cv.x1
    cv.set(roots[0], (x0 - 1, top + 1))
    cv.set(roots[1], (x1 + 1, top + 1))
    return cv


def _case2_core(levels, t, spine, done):
    """Steps 1 and 2: drawing of G*_{t-1}, not yet uv-separated at its right root."""
    us, ws = spine
    cv = _Canvas({us[0]: (0, 0), ws[0]: (0, 1)})
    for a, b in zip(us, us[1:]):
        pc = done.pop((a, b))
        x, _ = cv.pos[a]
        cv.put(pc, x, 0)
    for j in range(1, len(ws)):
        pc = done.pop((ws[j], ws[j - 1]))
        x, _ = cv.pos[ws[j - 1]]
        cv.put_rot180(pc, x + pc.w - 1, 1)
    level = levels[t]
    path, s = level.path, level.s
    _chain_left(cv, path, s, done)
    if s + 2 < len(path):
        top = cv.y1
        for j in range(s + 1, len(path) - 1):
            pc = done.pop((path[j], path[j + 1]))
            if j == s + 1:
                cv.put_rot90(pc, 0, top, keep=path[j])
            else:
                cv.put_rot90(pc, 0, cv.pos[path[j]][1])
    ystar = cv.y1 + 1
    xr, yr = levels[t - 1].transition
    cv.set(yr, (-1, ystar))
    cv.set(xr, (cv.x0 - 1, ystar))
    return cv


class _Plan:
    __slots__ = ("levels", "t", "spine", "subs")


def _plan(fr, a, b, strategy):
    spans = path_spans(fr, a, b, strategy)
    levels = raw_levels(fr, a, b, spans[-1])
    t = raw_turn_index(levels, b - a + 1)
    pl = _Plan()
    pl.levels, pl.t, pl.spine = levels, t, None
    subs = []
    last = len(levels) - 1 if t is None else t
    for i in range(1, last + 1):
        subs.extend(levels[i].side_edges())
    if t is not None:
        us, ws = raw_spine(fr, spans, levels[t].transition)
        pl.spine = (us, ws)
        subs.extend(zip(us, us[1:]))
        subs.extend((ws[j], ws[j - 1]) for j in range(1, len(ws)))
    pl.subs = subs
    return pl


def _assemble(a, b, pl, done):
    levels, t = pl.levels, pl.t
    if t is None:
        k = len(levels) - 1
        top = levels[k]
        cv = None
        if top.s is not None:
            x, y = top.transition
            cv = _Canvas({x: (0, 0), y: (1, 0)})
        cv = _attach_level(cv, top, done, levels[k - 1].transition)
        first = k - 1
    else:
        cv = _case2_core(levels, t, pl.spine, done)
        first = t - 1
    for i in range(first, 0, -1):
        cv = _attach_level(cv, levels[i], done, levels[i - 1].transition)
    ox, oy = cv.pos[a]
    if cv.x1 - cv.x0 > COORD_LIMIT or cv.y1 - cv.y0 > COORD_LIMIT:
        raise DrawingError("drawing exceeds the coordinate guard")
    pos = {k: (x - ox, y - oy) for k, (x, y) in cv.pos.items()}
    return _Piece(pos, cv.x1 - cv.x0 + 1, cv.y1 - cv.y0 + 1)


def _draw_positions(fr, strategy, stats):
    n = fr.n
    done: dict = {}
    stack = [(0, n - 1, None)]
    while stack:
        a, b, pl = stack.pop()
        if (a, b) in done:
            continue
        if b - a == 1:
            done[(a, b)] = _Piece({a: (0, 0), b: (1, 0)}, 2, 1)
            continue
        if pl is not None:
            done[(a, b)] = _assemble(a, b, pl, done)
            stats["case2" if pl.t is not None else "case1"] += 1
            continue
        pl = _plan(fr, a, b, strategy)
        stack.append((a, b, pl))
        stack.extend((x, y, None) for x, y in pl.subs if (x, y) not in done)
    return done[(0, n - 1)]


def draw_uv_separated(rg: RootedOuterplaneGraph, strategy: str = "exhaustive",
                      stats: Counter | None = None) -> GridDrawing:
    """uv-separated internally-convex drawing with u at (0, 0) and v at (width-1, 0).

    ``stats`` (optional) counts how many subproblems went through each case.
    """
    fr = rg.frame
    if stats is None:
        stats = Counter()
    piece = _draw_positions(fr, strategy, stats)
    order = fr.order
    pos = {order[p]: xy for p, xy in piece.pos.items()}
    return GridDrawing(pos, rg.graph, (rg.u, rg.v))


def draw_internally_convex(graph: OuterplaneGraph, root: tuple[int, int] | None = None,
                           strategy: str = "exhaustive", stats: Counter | None = None) -> GridDrawing:
    """Internally-convex drawing of ``graph`` normalized to a bounding box at the origin.

    ``root`` is an outer edge (u, v) with v immediately before u on the outer
    cycle; it defaults to (outer[0], outer[-1]).
    """
    graph.validate()
    rg = graph.rooted(*root) if root is not None else graph.rooted()
    return draw_uv_separated(rg, strategy, stats).normalized()


def draw_from_edges(n: int, outer_walk, edges, **kw) -> GridDrawing:
    """Ingest a walk plus edge list (adding missing outer edges) and draw it."""
    g, _ = ingest(n, outer_walk, edges)
    return draw_internally_convex(g, **kw)


def shift_root_endpoints(d: GridDrawing, du: int, dv: int) -> GridDrawing:
    """Move u ``du`` units left and v ``dv`` units right in a uv-separated drawing."""
    if d.root is None:
        raise DrawingError("drawing has no root edge")
    if du < 0 or dv < 0:
        raise DrawingError("shift amounts must be non-negative")
    u, v = d.root
    pos = dict(d.pos)
    pos[u] = (pos[u][0] - du, pos[u][1])
    pos[v] = (pos[v][0] + dv, pos[v][1])
    return d.replace(pos)


__all__ = ["draw_uv_separated", "draw_internally_convex", "draw_from_edges",
           "shift_root_endpoints", "translate"]

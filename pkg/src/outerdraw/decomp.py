"""Root-to-leaf path selection in the extended dual and the level structure built on it."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import isqrt

from .graph import Edge, ExtendedDualTree, Frame, RootedOuterplaneGraph

#: exponent of the tree-decomposition balance condition
P_EXPONENT = 0.48

STRATEGIES = ("heavy", "exhaustive")


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


# ---------------------------------------------------------------------------
# path selection (position space)

def path_spans(fr: Frame, a: int, b: int, strategy: str = "exhaustive") -> list[Edge]:
    """Nested position intervals from (a, b) down to a leaf edge.

    Each interval is the edge crossed when entering the next dual node; the
    last one is the external edge e_p.
    """
    if strategy == "heavy":
        sizes = fr.sizes
        out = [(a, b)]
        s, e = a, b
        while e - s >= 2:
            kids = fr.children(s, e)
            best = kids[0]
            for c in kids[1:]:
                if sizes[c] > sizes[best]:
                    best = c
            s, e = best
            out.append(best)
        return out
    if strategy == "exhaustive":
        leaf = _best_leaf(fr, a, b)
        return _descend_to(fr, a, b, leaf)
    raise ValueError(f"unknown path strategy {strategy!r}")


def _best_leaf(fr: Frame, a: int, b: int) -> Edge:
    """Leaf minimising A^p + B^p, A/B the largest left/right hanging subtrees.

    Every root-to-leaf path is enumerated; the running maxima make this a
    single DFS.  Ties go to the earliest leaf in CCW order.
    """
    sizes = fr.sizes
    best_score, best_leaf = None, None
    stack = [((a, b), 0, 0)]
    while stack:
        (s, e), left, right = stack.pop()
        if e - s == 1:
            score = left ** P_EXPONENT + right ** P_EXPONENT
            if best_score is None or score < best_score:
                best_score, best_leaf = score, (s, e)
            continue
        kids = fr.children(s, e)
        ks = [sizes[c] for c in kids]
        pre = [0] * (len(kids) + 1)
        for i, x in enumerate(ks):
            pre[i + 1] = max(pre[i], x)
        suf = [0] * (len(kids) + 1)
        for i in range(len(kids) - 1, -1, -1):
            suf[i] = max(suf[i + 1], ks[i])
        for i in range(len(kids) - 1, -1, -1):
            stack.append((kids[i], max(left, pre[i]), max(right, suf[i + 1])))
    return best_leaf


def _descend_to(fr: Frame, a: int, b: int, leaf: Edge) -> list[Edge]:
    z = leaf[0]
    out = [(a, b)]
    s, e = a, b
    while e - s >= 2:
        f = fr.face(s, e)
        j = bisect_right(f, z) - 1
        s, e = f[j], f[j + 1]
        out.append((s, e))
    return out


def path_balance(fr: Frame, spans: list[Edge]) -> float:
    """max over left/right hanging subtrees (alpha, beta) of (|alpha|^p + |beta|^p) / d^p."""
    sizes = fr.sizes
    left = right = 0
    for (s, e), nxt in zip(spans, spans[1:]):
        for c in fr.children(s, e):
            if c[1] <= nxt[0]:
                left = max(left, sizes[c])
            elif c[0] >= nxt[1]:
                right = max(right, sizes[c])
    d = sizes[spans[0]]
    return (left ** P_EXPONENT + right ** P_EXPONENT) / d ** P_EXPONENT


@dataclass
class DualPath:
    """Root-to-leaf path f_1..f_p in an extended dual tree."""

    faces: list[int]
    dual_edges: list[Edge]
    spans: list[Edge]

    @property
    def terminal_edge(self) -> Edge:
        return self.dual_edges[-1]


def select_path(tree: ExtendedDualTree, strategy: str = "exhaustive") -> DualPath:
    fr = tree.graph.frame
    spans = path_spans(fr, *tree.span[0], strategy=strategy)
    node_of = {sp: i for i, sp in enumerate(tree.span)}
    faces = [node_of[sp] for sp in spans]
    return DualPath(faces, [tree.edge[i] for i in faces[1:]], spans)


def path_to_leaf(tree: ExtendedDualTree, leaf: Edge) -> DualPath:
    """The dual path from the root face to the leaf of external edge ``leaf``."""
    fr = tree.graph.frame
    a, b = sorted((fr.pos[leaf[0]], fr.pos[leaf[1]]))
    if b - a != 1:
        raise ValueError(f"{leaf} is not a non-root external edge")
    spans = _descend_to(fr, *tree.span[0], (a, b))
    node_of = {sp: i for i, sp in enumerate(tree.span)}
    faces = [node_of[sp] for sp in spans]
    return DualPath(faces, [tree.edge[i] for i in faces[1:]], spans)


# ---------------------------------------------------------------------------
# level structure

@dataclass
class RawLevel:
    """One level in position space: the path P_i, its transition index and |V_i|."""

    path: list[int]
    s: int | None
    size: int

    @property
    def transition(self) -> Edge | None:
        if self.s is None:
            return None
        return self.path[self.s], self.path[self.s + 1]

    def side_edges(self) -> list[Edge]:
        return [(self.path[j], self.path[j + 1]) for j in range(len(self.path) - 1) if j != self.s]


def raw_levels(fr: Frame, a: int, b: int, leaf: Edge) -> list[RawLevel]:
    """Levels P_0..P_k of G[a, b] for the dual path ending at ``leaf``."""
    adj = fr.adj
    z = leaf[0]
    levels = [RawLevel([a, b], 0, 2)]
    x, y = a, b
    while True:
        root_face = fr.face(x, y)
        verts = set(root_face)
        nx = adj[x]
        for w in nx[bisect_left(nx, x + 2):bisect_right(nx, root_face[1])]:
            verts.update(fr.face(x, w))
        ny = adj[y]
        for w in ny[bisect_left(ny, root_face[-2]):bisect_right(ny, y - 2)]:
            verts.update(fr.face(w, y))
        verts.discard(x)
        verts.discard(y)
        path = sorted(verts)
        if z == x or z + 1 == y:
            s = None
        else:
            s = bisect_right(path, z) - 1
        size = path[-1] - path[0] + 1
        if s is not None:
            size -= path[s + 1] - path[s] - 1
        levels.append(RawLevel(path, s, size))
        if s is None:
            return levels
        x, y = path[s], path[s + 1]
        if y - x == 1:
            return levels


def raw_spine(fr: Frame, spans: list[Edge], core: Edge) -> tuple[list[int], list[int]]:
    """Outer vertices of the outerpath below ``core`` along the path: (u_0..u_x, w_0..w_y)."""
    x, y = core
    z = spans[-1][0]
    verts = {x, y}
    for s, e in spans[:-1]:
        if x <= s and e <= y:
            verts.update(fr.face(s, e))
    ordered = sorted(verts)
    us = [p for p in ordered if p <= z]
    ws = [p for p in ordered if p > z][::-1]
    return us, ws


def raw_turn_index(levels: list[RawLevel], n: int) -> int | None:
    """Case-2 turning level t, or None when the level count is small enough for Case 1."""
    k = len(levels) - 1
    if (k - 1) ** 2 < n:
        return None
    hi = min(ceil_sqrt(n) + 1, k)
    best = None
    for t in range(2, hi + 1):
        if levels[t].s is None:
            continue
        if best is None or levels[t].size < levels[best].size:
            best = t
    return best


@dataclass
class Level:
    """P_i in vertex ids; ``s`` is 1-based so the transition edge is (path[s-1], path[s])."""

    path: tuple[int, ...]
    s: int | None
    size: int

    @property
    def transition(self) -> Edge | None:
        return None if self.s is None else (self.path[self.s - 1], self.path[self.s])


@dataclass
class LevelStructure:
    graph: RootedOuterplaneGraph
    path: DualPath
    raw: list[RawLevel]

    @property
    def k(self) -> int:
        return len(self.raw) - 1

    @property
    def levels(self) -> list[Level]:
        order = self.graph.frame.order
        return [Level(tuple(order[p] for p in lv.path), None if lv.s is None else lv.s + 1, lv.size)
                for lv in self.raw]

    def vertex_sets(self) -> list[set[int]]:
        order = self.graph.frame.order
        out = []
        for i, lv in enumerate(self.raw):
            if i == 0:
                out.append({order[p] for p in lv.path})
                continue
            lo, hi = lv.path[0], lv.path[-1]
            cut = lv.transition
            out.append({order[p] for p in range(lo, hi + 1)
                        if cut is None or not cut[0] < p < cut[1]})
        return out

    def side_subgraphs(self, i: int) -> list[Edge]:
        """Root edges (vertex ids) of the recursively drawn G^i_j, j != s_i."""
        order = self.graph.frame.order
        return [(order[a], order[b]) for a, b in self.raw[i].side_edges()]

    def core(self, i: int) -> Edge | None:
        """Root edge of G*_i (the transition edge e*_i), if it exists."""
        t = self.raw[i].transition
        order = self.graph.frame.order
        return None if t is None else (order[t[0]], order[t[1]])

    def spine(self, t: int) -> tuple[list[int], list[int]]:
        core = self.raw[t].transition
        if core is None:
            raise ValueError(f"level {t} has no transition edge")
        us, ws = raw_spine(self.graph.frame, self.path.spans, core)
        order = self.graph.frame.order
        return [order[p] for p in us], [order[p] for p in ws]


def build_levels(rg: RootedOuterplaneGraph, path: DualPath) -> LevelStructure:
    fr = rg.frame
    spans = path.spans
    if spans[0] != (0, fr.n - 1):
        raise ValueError("path must start at the face incident to the root edge")
    for (s, e), (s2, e2) in zip(spans, spans[1:]):
        if (s2, e2) not in fr.children(s, e):
            raise ValueError("path is inconsistent with the graph")
    if spans[-1][1] - spans[-1][0] != 1:
        raise ValueError("path must end at a leaf")
    return LevelStructure(rg, path, raw_levels(fr, 0, fr.n - 1, spans[-1]))


def turn_index(ls: LevelStructure, n: int | None = None) -> int | None:
    return raw_turn_index(ls.raw, ls.graph.n if n is None else n)

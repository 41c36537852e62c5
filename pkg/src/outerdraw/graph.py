"""Biconnected outerplane graphs: canonical form, ingestion, faces and dual trees.

A graph is stored as its counter-clockwise outer cycle plus a set of
non-crossing chords.  Most algorithms work in *position space*: vertices are
renumbered by their index along the outer cycle starting at a root vertex, so a
rooted subgraph ``G[x, y]`` is simply the interval of positions ``[x, y]``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Input does not describe a valid (biconnected) outerplane graph."""


def _key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class OuterplaneGraph:
    """Biconnected outerplane graph: CCW outer cycle plus non-crossing chords.

    ``added`` records outer-cycle edges introduced by augmentation; they are
    part of the graph but not of the user's original input.
    """

    n: int
    outer: tuple[int, ...]
    chords: frozenset[Edge]
    added: frozenset[Edge] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "chords", frozenset(_key(*c) for c in self.chords))
        object.__setattr__(self, "added", frozenset(_key(*c) for c in self.added))

    @classmethod
    def build(cls, outer: Sequence[int], chords: Iterable[Sequence[int]] = (), added=()) -> "OuterplaneGraph":
        g = cls(len(outer), tuple(outer), frozenset(_key(a, b) for a, b in chords),
                frozenset(_key(a, b) for a, b in added))
        g.validate()
        return g

    @cached_property
    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer)}

    def outer_edges(self) -> list[Edge]:
        if self.n == 2:
            return [_key(self.outer[0], self.outer[1])]
        return [_key(self.outer[i], self.outer[(i + 1) % self.n]) for i in range(self.n)]

    def edges(self) -> list[Edge]:
        return sorted(set(self.outer_edges()) | self.chords)

    def input_edges(self) -> list[Edge]:
        """Edges minus the ones introduced by augmentation."""
        return [e for e in self.edges() if e not in self.added]

    def is_outer_edge(self, a: int, b: int) -> bool:
        ia, ib = self.index[a], self.index[b]
        gap = (ib - ia) % self.n
        return gap == 1 or gap == self.n - 1

    def has_edge(self, a: int, b: int) -> bool:
        if a not in self.index or b not in self.index or a == b:
            return False
        return self.is_outer_edge(a, b) or _key(a, b) in self.chords

    def validate(self) -> None:
        """Raise :class:`GraphError` unless every structural invariant holds."""
        if self.n < 2 or len(self.outer) != self.n:
            raise GraphError("need n >= 2 and len(outer) == n")
        if len(set(self.outer)) != self.n:
            raise GraphError("outer cycle repeats a vertex")
        if any((not isinstance(v, int)) or v < 0 for v in self.outer):
            raise GraphError("vertex ids must be non-negative integers")
        if self.n == 2 and self.chords:
            raise GraphError("a single edge has no chords")
        idx = self.index
        spans = []
        for a, b in self.chords:
            if a not in idx or b not in idx:
                raise GraphError(f"chord ({a},{b}) uses an unknown vertex")
            i, j = sorted((idx[a], idx[b]))
            if j - i < 2 or (i == 0 and j == self.n - 1):
                raise GraphError(f"chord ({a},{b}) duplicates an outer edge")
            spans.append((i, j))
        if self.n >= 3 and len(spans) > self.n - 3:
            raise GraphError("more chords than a triangulation allows")
        crossing = find_crossing(spans)
        if crossing is not None:
            (i1, j1), (i2, j2) = crossing
            raise GraphError(
                f"chords ({self.outer[i1]},{self.outer[j1]}) and ({self.outer[i2]},{self.outer[j2]}) cross")
        for e in self.added:
            if not self.is_outer_edge(*e):
                raise GraphError(f"added edge {e} is not an outer-cycle edge")

    def rooted(self, u: int | None = None, v: int | None = None) -> "RootedOuterplaneGraph":
        """Root at the outer edge (u, v); default is (outer[0], outer[-1])."""
        if u is None and v is None:
            u, v = self.outer[0], self.outer[-1]
        return RootedOuterplaneGraph(self, u, v)

    def max_face_size(self) -> int:
        if self.n < 3:
            return 2
        return max(len(f) for f in internal_faces(self))

    def to_dict(self) -> dict:
        d = {"n": self.n, "outer": list(self.outer), "chords": [list(c) for c in sorted(self.chords)]}
        if self.added:
            d["added"] = [list(c) for c in sorted(self.added)]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OuterplaneGraph":
        try:
            n, outer = int(d["n"]), [int(x) for x in d["outer"]]
            chords = [(int(a), int(b)) for a, b in d.get("chords", [])]
            added = [(int(a), int(b)) for a, b in d.get("added", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph object: {exc}") from exc
        if n != len(outer) or sorted(outer) != list(range(n)):
            raise GraphError("outer must be a permutation of 0..n-1")
        return cls.build(outer, chords, added)


def find_crossing(spans: Sequence[Edge]) -> tuple[Edge, Edge] | None:
    """Return two crossing position intervals, or None if they are laminar.

    Intervals sharing an endpoint do not cross.  Runs in O(m log m).
    """
    ordered = sorted(spans, key=lambda s: (s[0], -s[1]))
    stack: list[Edge] = []
    for s in ordered:
        while stack and stack[-1][1] <= s[0]:
            stack.pop()
        if stack and stack[-1][1] < s[1]:
            return stack[-1], s
        stack.append(s)
    return None


@dataclass(frozen=True)
class RootedOuterplaneGraph:
    graph: OuterplaneGraph
    u: int
    v: int

    def __post_init__(self):
        g = self.graph
        if self.u not in g.index or self.v not in g.index:
            raise GraphError("root vertices not in graph")
        if g.index[self.v] != (g.index[self.u] - 1) % g.n:
            raise GraphError(f"({self.u},{self.v}) is not an outer edge with v immediately preceding u")

    @cached_property
    def frame(self) -> "Frame":
        return Frame(self)

    @property
    def n(self) -> int:
        return self.graph.n


class Frame:
    """Position-space view of a rooted graph: u is position 0, v is n-1.

    ``adj[p]`` is the sorted list of positions adjacent to ``p``.
    """

    def __init__(self, rg: RootedOuterplaneGraph):
        g = rg.graph
        start = g.index[rg.u]
        self.n = g.n
        self.order = tuple(g.outer[(start + i) % g.n] for i in range(g.n))
        self.pos = {v: i for i, v in enumerate(self.order)}
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for a, b in g.edges():
            pa, pb = self.pos[a], self.pos[b]
            adj[pa].append(pb)
            adj[pb].append(pa)
        for lst in adj:
            lst.sort()
        self.adj = adj
        self._sizes: dict[Edge, int] | None = None

    def face(self, s: int, e: int) -> list[int]:
        """Boundary (increasing positions) of the face just below edge (s, e)."""
        nb = self.adj[s]
        cur = nb[bisect_left(nb, e) - 1]
        out = [s]
        while cur != e:
            out.append(cur)
            nb = self.adj[cur]
            cur = nb[bisect_right(nb, e) - 1]
        out.append(e)
        return out

    def children(self, s: int, e: int) -> list[Edge]:
        """Child edges of the dual node hanging below (s, e), in CCW order."""
        if e - s < 2:
            return []
        f = self.face(s, e)
        return list(zip(f, f[1:]))

    @property
    def sizes(self) -> dict[Edge, int]:
        """Extended-dual subtree size d for every edge interval (s, e)."""
        if self._sizes is None:
            sizes: dict[Edge, int] = {}
            stack = [(0, self.n - 1, False)]
            while stack:
                s, e, done = stack.pop()
                if e - s == 1:
                    sizes[(s, e)] = 1
                    continue
                kids = self.children(s, e)
                if done:
                    sizes[(s, e)] = 1 + sum(sizes[c] for c in kids)
                else:
                    stack.append((s, e, True))
                    stack.extend((a, b, False) for a, b in kids)
            self._sizes = sizes
        return self._sizes


# ---------------------------------------------------------------------------
# ingestion

def ingest(n: int, outer_walk: Sequence[int], edges: Iterable[Sequence[int]]) -> tuple[OuterplaneGraph, set[Edge]]:
    """Augment a connected outerplane graph, given by a closed outer walk, to a biconnected one.

    The outer cycle is the sequence of first occurrences along the walk.
    Returns the graph and the set of outer-cycle edges that were missing.
    """
    if n < 2:
        raise GraphError("n must be at least 2")
    edge_set = {_key(int(a), int(b)) for a, b in edges}
    for a, b in edge_set:
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"bad edge ({a},{b})")
    walk = [int(x) for x in outer_walk]
    if set(walk) != set(range(n)):
        raise GraphError("outer walk must visit every vertex")
    steps = list(zip(walk, walk[1:] + walk[:1])) if len(walk) > 2 else list(zip(walk, walk[1:]))
    for a, b in steps:
        if a != b and _key(a, b) not in edge_set:
            raise GraphError(f"walk step ({a},{b}) is not an edge")
    outer: list[int] = []
    seen = set()
    for x in walk:
        if x not in seen:
            seen.add(x)
            outer.append(x)
    if n >= 3 and outer[1] > outer[-1]:
        outer = [outer[0]] + outer[:0:-1]
    probe = OuterplaneGraph(n, tuple(outer), frozenset())
    cycle = set(probe.outer_edges())
    chords = {e for e in edge_set if e not in cycle}
    added = cycle - edge_set
    g = OuterplaneGraph(n, tuple(outer), frozenset(chords), frozenset(added))
    g.validate()
    return g, added


# ---------------------------------------------------------------------------
# faces and duals

def internal_faces(g: OuterplaneGraph) -> list[list[int]]:
    """All internal faces as CCW vertex lists, by a stack sweep over outer positions."""
    if g.n < 3:
        raise GraphError("a graph with fewer than 3 vertices has no internal face")
    idx = g.index
    ending: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.chords:
        i, j = sorted((idx[a], idx[b]))
        ending[j].append(i)
    faces = []
    stack: list[int] = []
    for p in range(g.n):
        for a in sorted(ending[p], reverse=True):
            face = [p]
            while stack[-1] != a:
                face.append(stack.pop())
            face.append(a)
            faces.append([g.outer[q] for q in reversed(face)])
        stack.append(p)
    faces.append([g.outer[q] for q in stack])
    return faces


def weak_dual(g: OuterplaneGraph) -> tuple[list[list[int]], list[list[int]], bool]:
    """Return (faces, adjacency lists over face indices, is_path)."""
    faces = internal_faces(g)
    by_chord: dict[Edge, list[int]] = {}
    for fi, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            k = _key(a, b)
            if k in g.chords:
                by_chord.setdefault(k, []).append(fi)
    adj: list[list[int]] = [[] for _ in faces]
    for f1, f2 in by_chord.values():
        adj[f1].append(f2)
        adj[f2].append(f1)
    is_path = all(len(a) <= 2 for a in adj)
    return faces, adj, is_path


def is_outerpath(g: OuterplaneGraph) -> bool:
    return g.n >= 3 and weak_dual(g)[2]


@dataclass
class ExtendedDualTree:
    """Weak dual plus one leaf per non-root external edge, rooted at the root face.

    Nodes are numbered in preorder; ``edge[i]`` is the graph edge (vertex ids)
    separating node ``i`` from its parent (the root edge for node 0).
    ``face[i]`` is the CCW boundary of a face node, or None for a leaf.
    """

    graph: RootedOuterplaneGraph
    edge: list[Edge]
    span: list[Edge]
    face: list[list[int] | None]
    parent: list[int]
    children: list[list[int]]
    size: list[int]

    @property
    def d(self) -> int:
        return len(self.edge)

    @property
    def root(self) -> int:
        return 0

    def is_leaf(self, i: int) -> bool:
        return self.face[i] is None


def extended_dual(rg: RootedOuterplaneGraph, span: Edge | None = None) -> ExtendedDualTree:
    """Extended weak dual tree of ``rg`` (or of its rooted subgraph at position span)."""
    fr = rg.frame
    if fr.n < 3:
        raise GraphError("extended dual needs n >= 3")
    s0, e0 = span if span is not None else (0, fr.n - 1)
    edge, spans, face, parent, children = [], [], [], [], []
    stack = [((s0, e0), -1)]
    while stack:
        (s, e), par = stack.pop()
        i = len(edge)
        edge.append((fr.order[s], fr.order[e]))
        spans.append((s, e))
        parent.append(par)
        children.append([])
        if par >= 0:
            children[par].append(i)
        if e - s >= 2:
            f = fr.face(s, e)
            face.append([fr.order[p] for p in f])
            stack.extend(((a, b), i) for a, b in reversed(list(zip(f, f[1:]))))
        else:
            face.append(None)
    size = [1] * len(edge)
    for i in range(len(edge) - 1, 0, -1):
        size[parent[i]] += size[i]
    return ExtendedDualTree(rg, edge, spans, face, parent, children, size)


def rooted_subgraph(g: OuterplaneGraph | RootedOuterplaneGraph, x: int, y: int) -> RootedOuterplaneGraph:
    """G[x, y]: the subgraph induced by x, y and the vertices CCW-between them, rooted at (x, y)."""
    base = g.graph if isinstance(g, RootedOuterplaneGraph) else g
    if not base.has_edge(x, y):
        raise GraphError(f"({x},{y}) is not an edge")
    i, j = base.index[x], base.index[y]
    length = (j - i) % base.n
    verts = [base.outer[(i + t) % base.n] for t in range(length + 1)]
    inside = set(verts)
    chords = [c for c in base.chords if c[0] in inside and c[1] in inside and c != _key(x, y)]
    sub = OuterplaneGraph(len(verts), tuple(verts), frozenset(chords))
    sub.validate()
    return RootedOuterplaneGraph(sub, x, y)

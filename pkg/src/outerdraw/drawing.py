"""Integer grid drawings and rigid transformations of them."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, OuterplaneGraph

COORD_LIMIT = 2 ** 40


class DrawingError(ValueError):
    pass


def _check(p: tuple[int, int]) -> tuple[int, int]:
    if abs(p[0]) > COORD_LIMIT or abs(p[1]) > COORD_LIMIT:
        raise DrawingError(f"coordinate {p} exceeds the 2^40 guard")
    return p


@dataclass(frozen=True)
class GridDrawing:
    """Map from vertex id to an integer point.

    ``graph`` is the drawn outerplane graph when there is one; bare cycle and
    path drawings carry an explicit ``edges`` list instead.  ``root`` is the
    (u, v) edge for uv-separated drawings.
    """

    pos: dict[int, tuple[int, int]]
    graph: OuterplaneGraph | None = None
    root: Edge | None = None
    extra_edges: tuple[Edge, ...] = field(default=())

    def edges(self) -> list[Edge]:
        if self.graph is not None:
            return self.graph.edges()
        return list(self.extra_edges)

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.pos[v]

    def replace(self, pos: dict[int, tuple[int, int]]) -> "GridDrawing":
        return GridDrawing({k: _check(p) for k, p in pos.items()}, self.graph, self.root, self.extra_edges)

    def bbox(self) -> tuple[int, int, int, int]:
        if not self.pos:
            raise DrawingError("empty drawing")
        xs = [p[0] for p in self.pos.values()]
        ys = [p[1] for p in self.pos.values()]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        x0, _, x1, _ = self.bbox()
        return x1 - x0 + 1

    @property
    def height(self) -> int:
        _, y0, _, y1 = self.bbox()
        return y1 - y0 + 1

    def normalized(self) -> "GridDrawing":
        """Translate so the bounding box starts at the origin."""
        x0, y0, _, _ = self.bbox()
        return translate(self, -x0, -y0)

    def to_dict(self) -> dict:
        if self.graph is None:
            raise DrawingError("only drawings of a graph can be serialized")
        return {"graph": self.graph.to_dict(),
                "pos": [list(self.pos[v]) for v in range(self.graph.n)]}

    @classmethod
    def from_dict(cls, d: dict) -> "GridDrawing":
        g = OuterplaneGraph.from_dict(d["graph"])
        pos = d["pos"]
        if len(pos) != g.n:
            raise DrawingError("pos must list one point per vertex")
        out = {}
        for v, p in enumerate(pos):
            if len(p) != 2 or not all(isinstance(c, int) and not isinstance(c, bool) for c in p):
                raise DrawingError(f"vertex {v}: coordinates must be two integers")
            out[v] = _check((p[0], p[1]))
        return cls(out, g)


def translate(d: GridDrawing, dx: int, dy: int) -> GridDrawing:
    return d.replace({k: (x + dx, y + dy) for k, (x, y) in d.pos.items()})


def transform(d: GridDrawing, op: str, dx: int = 0, dy: int = 0) -> GridDrawing:
    """Apply ``rotate90ccw``, ``rotate180``, ``mirror_x``, ``mirror_y`` or ``translate``."""
    if op == "rotate90ccw":
        return d.replace({k: (-y, x) for k, (x, y) in d.pos.items()})
    if op == "rotate180":
        return d.replace({k: (-x, -y) for k, (x, y) in d.pos.items()})
    if op == "mirror_x":
        return d.replace({k: (-x, y) for k, (x, y) in d.pos.items()})
    if op == "mirror_y":
        return d.replace({k: (x, -y) for k, (x, y) in d.pos.items()})
    if op == "translate":
        return translate(d, dx, dy)
    raise ValueError(f"unknown transform {op!r}")


def compose(da: GridDrawing, db: GridDrawing, shared: int) -> GridDrawing:
    """Place ``db`` to the right of ``da`` so that their copies of ``shared`` coincide.

    Apart from ``shared`` the two drawings must lie in the closed half-planes
    left and right of the vertical line through it.
    """
    common = set(da.pos) & set(db.pos)
    if common != {shared}:
        raise DrawingError(f"drawings must overlap exactly in vertex {shared}, got {sorted(common)}")
    sx, sy = da.pos[shared]
    bx, by = db.pos[shared]
    moved = {k: (x + sx - bx, y + sy - by) for k, (x, y) in db.pos.items()}
    if any(x > sx for k, (x, _) in da.pos.items() if k != shared):
        raise DrawingError("left drawing extends right of the shared vertex")
    if any(x < sx for k, (x, _) in moved.items() if k != shared):
        raise DrawingError("right drawing extends left of the shared vertex")
    pos = dict(da.pos)
    pos.update(moved)
    taken = {}
    for k, p in pos.items():
        if p in taken:
            raise DrawingError(f"vertices {taken[p]} and {k} coincide at {p}")
        taken[p] = k
    edges = tuple(sorted(set(da.edges()) | set(db.edges())))
    return GridDrawing({k: _check(p) for k, p in pos.items()}, None, None, edges)


def restrict(d: GridDrawing, vertices) -> GridDrawing:
    keep = set(vertices)
    return GridDrawing({k: p for k, p in d.pos.items() if k in keep}, None, None,
                       tuple(e for e in d.edges() if e[0] in keep and e[1] in keep))

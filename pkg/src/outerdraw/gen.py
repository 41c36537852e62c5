"""Seeded instance generators."""
from __future__ import annotations

import random

from .graph import GraphError, OuterplaneGraph

FAMILIES = ("random", "outerpath", "lb-convex", "lb-strict")

_MASK = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def instance_seed(seed: int, index: int) -> int:
    """Per-instance seed, independent of the order instances are produced in."""
    return (seed & _MASK) ^ splitmix64(index)


class _RangeMinMax:
    """Point updates, range min/max queries over positions 0..n-1."""

    def __init__(self, n):
        size = 1
        while size < n:
            size *= 2
        self.size = size
        self.lo = [n] * (2 * size)
        self.hi = [-1] * (2 * size)

    def add(self, i, val):
        i += self.size
        self.lo[i] = min(self.lo[i], val)
        self.hi[i] = max(self.hi[i], val)
        i //= 2
        while i:
            self.lo[i] = min(self.lo[2 * i], self.lo[2 * i + 1])
            self.hi[i] = max(self.hi[2 * i], self.hi[2 * i + 1])
            i //= 2

    def query(self, a, b):
        """(min, max) over [a, b)."""
        lo, hi = 1 << 62, -1
        a += self.size
        b += self.size
        while a < b:
            if a & 1:
                lo, hi = min(lo, self.lo[a]), max(hi, self.hi[a])
                a += 1
            if b & 1:
                b -= 1
                lo, hi = min(lo, self.lo[b]), max(hi, self.hi[b])
            a //= 2
            b //= 2
        return lo, hi


def gen_random(n: int, density: float, seed: int) -> OuterplaneGraph:
    """Outer cycle 0..n-1 plus non-crossing chords found by rejection sampling."""
    if n < 3:
        raise GraphError("n must be at least 3")
    if not 0 <= density <= 1:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    partners = _RangeMinMax(n)
    chords = set()
    for _ in range(3 * int(density * (n - 3))):
        a, b = rng.randrange(n), rng.randrange(n)
        if a > b:
            a, b = b, a
        if b - a < 2 or (a == 0 and b == n - 1) or (a, b) in chords:
            continue
        lo, hi = partners.query(a + 1, b)
        if lo < a or hi > b:
            continue
        chords.add((a, b))
        partners.add(a, b)
        partners.add(b, a)
    return OuterplaneGraph.build(range(n), sorted(chords))


def _chain(sizes, pick) -> OuterplaneGraph:
    """Outerpath whose i-th face has sizes[i] vertices.

    ``pick(edges)`` chooses the edge of the latest face the next face is glued to.
    """
    s0 = sizes[0]
    nxt = {i: (i + 1) % s0 for i in range(s0)}
    fresh = s0
    face_edges = [(i, (i + 1) % s0) for i in range(s0)]
    chords = []
    for s in sizes[1:]:
        a, b = pick(face_edges)
        new = list(range(fresh, fresh + s - 2))
        fresh += s - 2
        chain = [a] + new + [b]
        for x, y in zip(chain, chain[1:]):
            nxt[x] = y
        chords.append((a, b))
        face_edges = list(zip(chain, chain[1:]))
    # relabel by position on the outer cycle
    label, v = {}, 0
    for i in range(fresh):
        label[v] = i
        v = nxt[v]
    return OuterplaneGraph.build(range(fresh), [(label[a], label[b]) for a, b in chords])


def gen_outerpath(faces: int, k: int, seed: int) -> OuterplaneGraph:
    """Chain of ``faces`` faces with sizes uniform in [3, k]."""
    if faces < 1 or k < 3:
        raise GraphError("need at least one face and k >= 3")
    rng = random.Random(seed)
    sizes = [rng.randint(3, k) for _ in range(faces)]
    return _chain(sizes, rng.choice)


def gen_lb_convex(n: int) -> OuterplaneGraph:
    """Inner n/2-cycle of chords with one degree-2 ear on every inner edge."""
    if n < 6 or n % 2:
        raise GraphError("n must be even and at least 6")
    return OuterplaneGraph.build(range(n), [(2 * i, (2 * i + 2) % n) for i in range(n // 2)])


def gen_lb_strict(n: int, k: int) -> OuterplaneGraph:
    """floor((n-2)/(k-2)) faces of size exactly k, each glued to the middle edge of its predecessor."""
    if k < 3 or n < k:
        raise GraphError("need k >= 3 and n >= k")
    faces = (n - 2) // (k - 2)
    return _chain([k] * faces, lambda edges: edges[len(edges) // 2])


def generate(family: str, n: int | None = None, k: int | None = None, density: float = 0.5,
             seed: int = 0, n_faces: int | None = None) -> OuterplaneGraph:
    if family == "random":
        return gen_random(n, density, seed)
    if family == "outerpath":
        if n_faces is None:
            n_faces = max(1, round((n - 2) / ((3 + k) / 2 - 2)))
        return gen_outerpath(n_faces, k, seed)
    if family == "lb-convex":
        return gen_lb_convex(n)
    if family == "lb-strict":
        return gen_lb_strict(n, k)
    raise GraphError(f"unknown family {family!r}")

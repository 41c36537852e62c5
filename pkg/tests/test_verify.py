import itertools
import random
from fractions import Fraction

from outerdraw.convex import draw_internally_convex
from outerdraw.drawing import GridDrawing, transform
from outerdraw.gen import gen_random
from outerdraw.graph import OuterplaneGraph
from outerdraw.verify import (VerifyReport, check_block, check_faces_convex, check_grid_lines,
                              check_outer_embedding, check_planar, check_uv_separated, measure,
                              segments_conflict, verify_drawing)

from conftest import random_corpus


def _d(pos, edges=(), graph=None):
    return GridDrawing(dict(pos), graph, extra_edges=tuple(edges))


def _cycle(points):
    n = len(points)
    g = OuterplaneGraph.build(range(n))
    return GridDrawing(dict(enumerate(points)), g)


# --- planarity --------------------------------------------------------------

def test_planar_examples():
    assert check_planar(_d({0: (0, 0), 1: (0, 1), 2: (1, 1)}, [(0, 1), (1, 2), (0, 2)]))[0]
    ok, w = check_planar(_d({0: (0, 0), 1: (2, 2), 2: (0, 2), 3: (2, 0)}, [(0, 1), (2, 3)]))
    assert not ok and sorted(map(tuple, w["edges"])) == [(0, 1), (2, 3)]


def test_planar_edge_through_vertex_fails():
    d = _d({0: (0, 0), 1: (2, 0), 2: (1, 0), 3: (1, 5)}, [(0, 1), (2, 3)])
    assert not check_planar(d)[0]


def test_planar_collinear_overlap_with_shared_endpoint_fails():
    d = _d({0: (0, 0), 1: (2, 0), 2: (1, 0)}, [(0, 1), (0, 2)])
    assert not check_planar(d)[0]


def test_planar_coincident_vertices_fail():
    d = _d({0: (0, 0), 1: (0, 0), 2: (1, 1)}, [(0, 2)])
    ok, w = check_planar(d)
    assert not ok and sorted(w["vertices"]) == [0, 1]


def _rational_conflict(p1, p2, q1, q2, shared):
    """Naive oracle: parametrize both segments and solve with exact rationals."""
    P1, P2, Q1, Q2 = ([Fraction(c) for c in p] for p in (p1, p2, q1, q2))
    dx1, dy1 = P2[0] - P1[0], P2[1] - P1[1]
    dx2, dy2 = Q2[0] - Q1[0], Q2[1] - Q1[1]
    den = dx1 * dy2 - dy1 * dx2
    if den != 0:
        t = ((Q1[0] - P1[0]) * dy2 - (Q1[1] - P1[1]) * dx2) / den
        s = ((Q1[0] - P1[0]) * dy1 - (Q1[1] - P1[1]) * dx1) / den
        if not (0 <= t <= 1 and 0 <= s <= 1):
            return False
        return not (shared and t == 0 and s == 0)
    # parallel: conflict iff collinear and overlapping in more than the shared point
    if (Q1[0] - P1[0]) * dy1 - (Q1[1] - P1[1]) * dx1 != 0:
        return False
    axis = 0 if dx1 != 0 else 1
    lo1, hi1 = sorted((P1[axis], P2[axis]))
    lo2, hi2 = sorted((Q1[axis], Q2[axis]))
    lo, hi = max(lo1, lo2), min(hi1, hi2)
    if lo > hi:
        return False
    return not (shared and lo == hi)


def test_planar_agrees_with_rational_oracle():
    rng = random.Random(17)
    for trial in range(200):
        k = rng.randint(3, 9)
        span = rng.choice([3, 6, 40])
        pts = {}
        while len(pts) < k:
            p = (rng.randint(0, span), rng.randint(0, span))
            if p not in pts.values():
                pts[len(pts)] = p
        edges = sorted({tuple(sorted(rng.sample(range(k), 2))) for _ in range(rng.randint(1, 8))})
        d = _d(pts, edges)
        expect = False
        for (a, b), (c, e) in itertools.combinations(edges, 2):
            common = {a, b} & {c, e}
            if common:
                s = common.pop()
                p2, q2 = (b if s == a else a), (e if s == c else c)
                hit = _rational_conflict(pts[s], pts[p2], pts[s], pts[q2], True)
            else:
                hit = _rational_conflict(pts[a], pts[b], pts[c], pts[e], False)
            expect = expect or hit
        assert check_planar(d)[0] == (not expect), (pts, edges)


def test_scalar_predicate_matches_rational_oracle():
    rng = random.Random(3)
    for _ in range(2000):
        p = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)]
        if p[0] == p[1] or p[2] == p[3]:
            continue
        assert segments_conflict(*p) == _rational_conflict(*p, False)


def test_planar_big_coordinates_fallback():
    big = 2 ** 35
    d = _d({0: (0, 0), 1: (big, big), 2: (0, big), 3: (big, 0)}, [(0, 1), (2, 3)])
    assert not check_planar(d)[0]
    d = _d({0: (0, 0), 1: (big, 0), 2: (0, 1), 3: (big, 1)}, [(0, 1), (2, 3)])
    assert check_planar(d)[0]


# --- convexity ----------------------------------------------------------------

def test_convexity_examples():
    trap = _cycle([(-1, 1), (0, 0), (1, 0), (2, 1)])
    assert check_faces_convex(trap)[0] and check_faces_convex(trap, strict=True)[0]
    flat = _cycle([(0, 0), (1, 0), (2, 0), (1, 2)])
    assert check_faces_convex(flat)[0] and not check_faces_convex(flat, strict=True)[0]
    reflex = _cycle([(0, 0), (4, 0), (1, 1), (0, 4)])
    assert not check_faces_convex(reflex)[0] and not check_faces_convex(reflex, strict=True)[0]


def test_strict_implies_convex(small_corpus):
    for g in small_corpus:
        d = draw_internally_convex(g)
        if check_faces_convex(d, strict=True)[0]:
            assert check_faces_convex(d)[0]


# --- outer embedding ------------------------------------------------------------

def test_outer_embedding_examples():
    g = OuterplaneGraph.build([0, 1, 2])
    assert check_outer_embedding(draw_internally_convex(g))[0]
    sq = OuterplaneGraph.build([0, 1, 2, 3], [(1, 3)])
    inside = GridDrawing({0: (0, 0), 1: (4, 0), 3: (0, 4), 2: (1, 1)}, sq)
    ok, w = check_outer_embedding(inside)
    assert not ok


def test_reflection_rejected():
    g = gen_random(20, 0.5, 3)
    d = draw_internally_convex(g)
    assert check_outer_embedding(d)[0]
    assert not check_outer_embedding(transform(d, "mirror_x"))[0]


# --- uv-separated / grid lines / blocks / metrics ------------------------------

def test_uv_separated_examples():
    edge = GridDrawing({0: (0, 0), 1: (1, 0)}, OuterplaneGraph.build([0, 1]))
    assert check_uv_separated(edge)[0]
    g = OuterplaneGraph.build([0, 1, 2])
    tri = GridDrawing({0: (0, 1), 1: (1, 0), 2: (2, 1)}, g)
    assert check_uv_separated(tri)[0]
    bad = GridDrawing({0: (0, 1), 1: (1, 1), 2: (2, 1)}, g)
    ok, w = check_uv_separated(bad)
    assert not ok and w["property"] == "P.2"


def test_grid_lines_examples():
    assert check_grid_lines(_d({0: (0, 0), 1: (1, 0), 2: (2, 0)}))[0]
    ok, w = check_grid_lines(_d({0: (0, 0), 1: (2, 0)}))
    assert not ok and w == {"axis": "x", "line": 1}


def test_block_examples():
    rect = _d({0: (0, 0), 1: (0, 1), 2: (2, 1), 3: (2, 0)})
    assert check_block(rect, (0, 1), (3, 2))[0]
    tall = _d({0: (0, 0), 1: (0, 2), 2: (2, 1), 3: (2, 0)})
    assert check_block(tall, (0, 1), (3, 2))[1]["property"] == "B.1"
    crowd = _d({0: (0, 0), 1: (0, 1), 2: (2, 1), 3: (2, 0), 4: (0, 3)})
    assert check_block(crowd, (0, 1), (3, 2))[1]["property"] == "B.2"


def test_measure_examples():
    assert measure(_d({0: (5, 5)})) == {"width": 1, "height": 1, "area": 1}
    assert measure(_d({0: (0, 1), 1: (1, 0), 2: (2, 1)})) == {"width": 3, "height": 2, "area": 6}


def test_report_roundtrip():
    d = draw_internally_convex(gen_random(15, 0.5, 2))
    rep = verify_drawing(d)
    assert rep.ok
    again = VerifyReport.from_dict(rep.to_dict())
    assert again == rep and again.ok


# --- fault injection ------------------------------------------------------------

def _swap_detected(d, rng):
    g = d.graph
    while True:
        a, b = rng.sample(list(g.outer), 2)
        if not g.has_edge(a, b):
            break
    pos = dict(d.pos)
    pos[a], pos[b] = pos[b], pos[a]
    bad = GridDrawing(pos, g)
    return not (check_planar(bad)[0] and check_outer_embedding(bad)[0])


def test_swap_injection_detected():
    rng = random.Random(8)
    for g in random_corpus(50, n_lo=8, n_hi=100, seed=31):
        assert _swap_detected(draw_internally_convex(g), rng)

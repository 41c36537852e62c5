import pytest

from outerdraw.decomp import (P_EXPONENT, build_levels, ceil_sqrt, path_balance, path_spans, raw_levels,
                              raw_turn_index, select_path, turn_index, path_to_leaf)
from outerdraw.graph import OuterplaneGraph, extended_dual

from conftest import random_corpus


def _all_leaf_paths(fr, a, b):
    out = []
    stack = [[(a, b)]]
    while stack:
        p = stack.pop()
        s, e = p[-1]
        if e - s == 1:
            out.append(p)
        for c in fr.children(s, e):
            stack.append(p + [c])
    return out


def test_ceil_sqrt():
    assert [ceil_sqrt(x) for x in (1, 2, 4, 5, 16, 17)] == [1, 2, 2, 3, 4, 5]


def test_bare_root_path():
    g = OuterplaneGraph.build([0, 1])
    t = extended_dual(OuterplaneGraph.build([0, 1, 2]).rooted())
    p = select_path(t, "heavy")
    assert len(p.faces) == 2 and p.spans[-1][1] - p.spans[-1][0] == 1
    assert g.n == 2


def test_heavy_enters_larger_child():
    # root face (0,2,7): child (2,7) carries the bigger subtree
    g = OuterplaneGraph.build(range(8), [(0, 2), (2, 7), (2, 5)])
    fr = g.rooted().frame
    assert path_spans(fr, 0, 7, "heavy")[1] == (2, 7)


def test_exhaustive_is_optimal_against_brute_force():
    for g in random_corpus(40, n_hi=30, seed=2):
        fr = g.rooted().frame
        n = g.n
        best = min(path_balance(fr, p) for p in _all_leaf_paths(fr, 0, n - 1))
        got = path_balance(fr, path_spans(fr, 0, n - 1, "exhaustive"))
        assert got == pytest.approx(best)


def test_exhaustive_balance_below_one():
    for g in random_corpus(40, n_hi=200, seed=3):
        fr = g.rooted().frame
        for (a, b) in list(fr.sizes)[:60]:
            if b - a >= 2:
                assert path_balance(fr, path_spans(fr, a, b, "exhaustive")) < 1


def test_heavy_counterexample_documented():
    # heavy path breaks the balance condition here; exhaustive does not
    g = OuterplaneGraph.build(range(7), [(0, 3), (1, 3), (3, 5), (3, 6)])
    fr = g.rooted().frame
    assert path_balance(fr, path_spans(fr, 0, 6, "heavy")) > 1
    assert path_balance(fr, path_spans(fr, 0, 6, "exhaustive")) < 1


def test_unknown_strategy():
    fr = OuterplaneGraph.build([0, 1, 2]).rooted().frame
    with pytest.raises(ValueError):
        path_spans(fr, 0, 2, "greedy")


def _levels(g, strategy="exhaustive"):
    rg = g.rooted()
    return build_levels(rg, select_path(extended_dual(rg), strategy))


def test_levels_triangle():
    ls = _levels(OuterplaneGraph.build([0, 1, 2]))
    assert ls.k == 1
    assert ls.levels[1].path == (1,) and ls.levels[1].transition is None


def test_levels_square_through_middle_leaf():
    g = OuterplaneGraph.build([0, 1, 2, 3])
    rg = g.rooted(0, 3)
    path = path_to_leaf(extended_dual(rg), (1, 2))
    assert path.spans[-1] == (1, 2)
    ls = build_levels(rg, path)
    assert ls.levels[1].path == (1, 2)
    assert ls.levels[1].transition == (1, 2) and ls.levels[1].s == 1


def test_levels_three_triangles():
    g = OuterplaneGraph.build(range(5), [(0, 2), (2, 4)])
    rg = g.rooted(0, 4)
    ls = build_levels(rg, path_to_leaf(extended_dual(rg), (2, 3)))
    assert ls.vertex_sets()[0] == {0, 4}
    assert ls.levels[1].path == (1, 2, 3)
    assert ls.levels[1].transition == (2, 3)
    # the transition is the last edge crossed by the path
    assert ls.path.spans[-1] == (2, 3)


def test_level_invariants(small_corpus):
    for g in small_corpus:
        if g.n < 3:
            continue
        ls = _levels(g)
        sets = ls.vertex_sets()
        union = set().union(*sets)
        assert union == set(g.outer)
        assert sum(len(s) for s in sets) == g.n
        order = g.rooted().frame.pos
        dual_edges = set(ls.path.spans)
        for lv, raw in zip(ls.levels[1:], ls.raw[1:]):
            pos = [order[v] for v in lv.path]
            assert pos == sorted(pos)
            hits = [(a, b) for a, b in zip(raw.path, raw.path[1:]) if (a, b) in dual_edges]
            assert len(hits) <= 1
            if raw.transition is not None:
                assert hits == [raw.transition]
            assert len(sets[ls.levels.index(lv)]) == raw.size


def test_turn_index_small_k_is_case1():
    ls = _levels(OuterplaneGraph.build([0, 1, 2]))
    assert turn_index(ls, 1) is None


def _long_path_graph(faces):
    # zig-zag triangulated strip: every level is tiny, so k is large
    n = faces + 2
    chords = []
    lo, hi = 0, n - 1
    turn = 0
    while hi - lo > 2:
        if turn % 2 == 0:
            chords.append((lo + 1, hi))
            lo += 1
        else:
            chords.append((lo, hi - 1))
            hi -= 1
        turn += 1
    return OuterplaneGraph.build(range(n), chords)


def test_turn_index_case2_is_argmin():
    g = _long_path_graph(14)        # n = 16
    ls = _levels(g)
    n = g.n
    assert (ls.k - 1) ** 2 >= n
    t = turn_index(ls, n)
    assert t is not None
    hi = min(ceil_sqrt(n) + 1, ls.k)
    cands = [i for i in range(2, hi + 1) if ls.levels[i].transition is not None]
    sizes = {i: len(ls.vertex_sets()[i]) for i in cands}
    assert sizes[t] == min(sizes.values())
    assert t == min(i for i in cands if sizes[i] == sizes[t])


def test_turn_index_pigeonhole():
    seen = 0
    for g in random_corpus(80, n_hi=200, seed=9) + [_long_path_graph(f) for f in range(10, 80, 7)]:
        fr = g.rooted().frame
        for (a, b) in fr.sizes:
            if b - a < 2:
                continue
            leaf = path_spans(fr, a, b)[-1]
            levels = raw_levels(fr, a, b, leaf)
            n = b - a + 1
            t = raw_turn_index(levels, n)
            if t is None:
                continue
            seen += 1
            assert levels[t].size <= (n - 2) / ceil_sqrt(n)
    assert seen > 0


def test_build_levels_rejects_foreign_path():
    g = OuterplaneGraph.build(range(5), [(0, 2), (2, 4)])
    h = OuterplaneGraph.build(range(5), [(1, 3), (0, 3)])
    p = select_path(extended_dual(h.rooted()))
    with pytest.raises(ValueError):
        build_levels(g.rooted(), p)


def test_exponent_value():
    assert P_EXPONENT == 0.48

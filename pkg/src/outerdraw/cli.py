"""Command-line interface: gen, draw, verify, render, bench.

Exit codes: 0 success, 1 semantic failure (verification, wrong graph class),
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .convex import draw_internally_convex
from .decomp import STRATEGIES
from .drawing import DrawingError, GridDrawing
from .gen import FAMILIES, generate, instance_seed
from .graph import GraphError, OuterplaneGraph, ingest, is_outerpath
from .strict import draw_outerpath_strict
from .verify import VerifyReport, measure, verify_drawing

CSV_HEADER = ["family", "n", "k", "d", "width", "height", "area", "ratio1", "ratio2", "elapsed_ms", "seed"]
SVG_UNIT = 16


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


# ---------------------------------------------------------------------------
# file formats

def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _dump_json(obj, path):
    text = json.dumps(obj, indent=1, sort_keys=True) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def graph_from_obj(d) -> OuterplaneGraph:
    """Graph object: {n, outer, chords, added?}, or {n, walk, edges} to be ingested."""
    if not isinstance(d, dict):
        raise UsageError("graph file must hold an object")
    try:
        if "edges" in d:
            g, _ = ingest(int(d["n"]), [int(v) for v in d["walk"]], d["edges"])
            return g
        return OuterplaneGraph.from_dict(d)
    except (GraphError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid graph: {exc}") from exc


def drawing_from_obj(d) -> GridDrawing:
    try:
        return GridDrawing.from_dict(d)
    except (GraphError, DrawingError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid drawing: {exc}") from exc


def render_svg(d: GridDrawing) -> str:
    """SVG with the grid y axis pointing up, one circle per vertex, one line per input edge."""
    x0, y0, x1, y1 = d.bbox()
    pad = SVG_UNIT

    def sx(x):
        return pad + (x - x0) * SVG_UNIT

    def sy(y):
        return pad + (y1 - y) * SVG_UNIT

    w = (x1 - x0) * SVG_UNIT + 2 * pad
    h = (y1 - y0) * SVG_UNIT + 2 * pad
    edges = d.graph.input_edges() if d.graph is not None else d.edges()
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           '<g stroke="black" stroke-width="1.5">']
    for a, b in edges:
        (ax, ay), (bx, by) = d.pos[a], d.pos[b]
        out.append(f'<line x1="{sx(ax)}" y1="{sy(ay)}" x2="{sx(bx)}" y2="{sy(by)}"/>')
    out.append('</g>\n<g fill="crimson">')
    for v in sorted(d.pos):
        x, y = d.pos[v]
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3"><title>{v}</title></circle>')
    out.append("</g>\n</svg>\n")
    return "\n".join(out)


def _parse_root(text):
    if text is None:
        return None
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--root expects u,v, got {text!r}") from exc
    return u, v


def _parse_int_list(text, name):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"{name} expects comma-separated integers") from exc
    if not vals:
        raise UsageError(f"{name} must not be empty")
    return vals


# ---------------------------------------------------------------------------
# commands

def cmd_gen(args):
    fam = args.family
    if fam in ("outerpath", "lb-strict") and args.k is None:
        raise UsageError(f"--k is required for family {fam}")
    if fam == "outerpath" and args.n is None and args.n_faces is None:
        raise UsageError("outerpath needs --n or --n-faces")
    if fam != "outerpath" and args.n is None:
        raise UsageError("--n is required")
    try:
        g = generate(fam, n=args.n, k=args.k, density=args.density, seed=args.seed, n_faces=args.n_faces)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    _dump_json(g.to_dict(), args.output)
    return 0


def _draw(g, mode, root=None, strategy="exhaustive"):
    if mode == "strict":
        if not is_outerpath(g):
            raise SemanticError("strict mode needs an outerpath (weak dual is not a path)")
        return draw_outerpath_strict(g, with_blocks=True)
    try:
        return draw_internally_convex(g, root=root, strategy=strategy), ()
    except GraphError as exc:
        raise UsageError(str(exc)) from exc


def cmd_draw(args):
    g = graph_from_obj(_load_json(args.input))
    d, _ = _draw(g, args.mode, _parse_root(args.root), args.path_strategy)
    _dump_json(d.to_dict(), args.output)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(d))
    return 0


def cmd_verify(args):
    d = drawing_from_obj(_load_json(args.input))
    blocks = ()
    if args.mode == "strict" and is_outerpath(d.graph):
        blocks = _relocated_blocks(d)
    rep = verify_drawing(d, args.mode, root=_parse_root(args.root), blocks=blocks)
    _dump_json(rep.to_dict(), args.output)
    return 0 if rep.ok else 1


def _relocated_blocks(d):
    """Fan blocks of the decomposition, located in ``d`` via the drawing's own gates."""
    from .strict import fan_decompose
    out = []
    for fan in fan_decompose(d.graph).fans:
        u = fan.gate_in[0]
        oy = d.pos[u][1]
        bp = {k: (d.pos[k][0], d.pos[k][1] - oy) for k in fan.graph.outer}
        out.append((GridDrawing(bp, fan.graph), fan.gate_in, fan.gate_out))
    return out


def cmd_render(args):
    d = drawing_from_obj(_load_json(args.input))
    svg = render_svg(d)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.output, "w") as fh:
            fh.write(svg)
    return 0


def _bench_one(task):
    mode, n, k, density, seed, strategy, timing = task
    if mode == "convex":
        g = generate("random", n=n, density=density, seed=seed)
    else:
        g = generate("outerpath", n=n, k=k, seed=seed)
    t0 = time.perf_counter()
    d, blocks = _draw(g, mode, strategy=strategy)
    elapsed = int(round((time.perf_counter() - t0) * 1000)) if timing else 0
    rep = verify_drawing(d, mode, blocks=blocks)
    if not rep.ok:
        failed = sorted(name for name, c in rep.checks.items() if not c["pass"])
        return None, f"n={n} k={k} seed={seed}: failed {', '.join(failed)}"
    m = measure(d)
    kk = g.max_face_size()
    dd = g.rooted().frame.sizes[(0, g.n - 1)]
    r1 = m["height"] / math.sqrt(dd)
    r2 = m["area"] / (g.n ** 1.5) if mode == "convex" else m["area"] / (g.n * kk * kk)
    fam = "random" if mode == "convex" else "outerpath"
    return [fam, g.n, kk, dd, m["width"], m["height"], m["area"], r1, r2, elapsed, seed], None


def cmd_bench(args):
    sizes = _parse_int_list(args.sizes, "--sizes")
    ks = _parse_int_list(args.k, "--k") if args.mode == "strict" else [0]
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.mode == "strict" and any(k < 3 for k in ks):
        raise UsageError("--k values must be at least 3")
    if any(n < 3 for n in sizes):
        raise UsageError("--sizes values must be at least 3")
    tasks, groups = [], []
    densities = [float(x) for x in args.density.split(",")]
    for n in sizes:
        for k in ks:
            groups.append((n, k, len(tasks), len(tasks) + args.trials))
            for t in range(args.trials):
                seed = instance_seed(args.seed, len(tasks))
                tasks.append((args.mode, n, k, densities[t % len(densities)], seed,
                              args.path_strategy, args.timing))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_bench_one, tasks))
    else:
        results = [_bench_one(t) for t in tasks]
    for row, err in results:
        if err is not None:
            raise SemanticError(f"verification failed for {err}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)

    def fmt(row):
        return row[:7] + ["%.6f" % row[7], "%.6f" % row[8]] + row[9:]

    for row, _ in results:
        w.writerow(fmt(row))
    for n, k, lo, hi in groups:
        rows = [results[i][0] for i in range(lo, hi)]
        best = ["max"] + [max(r[c] for r in rows) for c in range(1, 10)] + [args.seed]
        w.writerow(fmt(best))
    if args.output in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        with open(args.output, "w") as fh:
            fh.write(buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="outerdraw", description="Area-efficient convex grid drawings of outerplanar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--n-faces", type=int)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("draw", help="draw a graph file")
    d.add_argument("--mode", choices=("convex", "strict"), default="convex")
    d.add_argument("-i", "--input", required=True)
    d.add_argument("-o", "--output")
    d.add_argument("--svg")
    d.add_argument("--root", help="root edge u,v (v must precede u on the outer cycle)")
    d.add_argument("--path-strategy", choices=STRATEGIES, default="exhaustive")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="check a drawing file")
    v.add_argument("--mode", choices=("convex", "strict"), default="convex")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-o", "--output")
    v.add_argument("--root")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="render a drawing file as SVG")
    r.add_argument("-i", "--input", required=True)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", help="generate, draw, verify and measure in bulk")
    b.add_argument("--mode", choices=("convex", "strict"), default="convex")
    b.add_argument("--sizes", required=True)
    b.add_argument("--k", default="4")
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--density", default="0.25,0.5,1.0", help="comma list cycled over trials")
    b.add_argument("--path-strategy", choices=STRATEGIES, default="exhaustive")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--timing", action="store_true", help="record wall-clock milliseconds (breaks byte-identical output)")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Area-efficient internally-convex grid drawings of outerplanar graphs."""
from .convex import draw_internally_convex, draw_uv_separated, shift_root_endpoints
from .drawing import GridDrawing, compose, transform
from .gen import gen_lb_convex, gen_lb_strict, gen_outerpath, gen_random
from .graph import GraphError, OuterplaneGraph, ingest, internal_faces, is_outerpath, weak_dual
from .strict import draw_outerpath_strict, fan_decompose
from .verify import VerifyReport, verify_drawing

__all__ = [
    "GraphError", "GridDrawing", "OuterplaneGraph", "VerifyReport", "compose", "draw_internally_convex",
    "draw_outerpath_strict", "draw_uv_separated", "fan_decompose", "gen_lb_convex", "gen_lb_strict",
    "gen_outerpath", "gen_random", "ingest", "internal_faces", "is_outerpath", "shift_root_endpoints",
    "transform", "verify_drawing", "weak_dual",
]

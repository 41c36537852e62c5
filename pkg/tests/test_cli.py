import json
import re

import pytest

from outerdraw.cli import main


def _run(args, capsys=None):
    return main([str(a) for a in args])


@pytest.fixture
def tmp(tmp_path):
    return tmp_path


def test_gen_lb_convex(tmp):
    out = tmp / "g.json"
    assert _run(["gen", "--family", "lb-convex", "--n", 8, "-o", out]) == 0
    g = json.loads(out.read_text())
    assert g["n"] == 8 and len(g["chords"]) == 4


def test_gen_bad_flags(tmp):
    assert _run(["gen", "--family", "lb-convex", "--n", 7]) == 2
    assert _run(["gen", "--family", "wat", "--n", 7]) == 2
    assert _run(["gen", "--family", "outerpath", "--n", 7]) == 2


def test_draw_verify_roundtrip(tmp):
    g, d, svg, rep = tmp / "g.json", tmp / "d.json", tmp / "d.svg", tmp / "r.json"
    assert _run(["gen", "--family", "random", "--n", 40, "--density", "0.7", "--seed", 4, "-o", g]) == 0
    assert _run(["draw", "--mode", "convex", "-i", g, "-o", d, "--svg", svg]) == 0
    assert _run(["verify", "-i", d, "-o", rep]) == 0
    report = json.loads(rep.read_text())
    assert all(c["pass"] for c in report["checks"].values())
    drawing = json.loads(d.read_text())
    assert drawing["graph"] == json.loads(g.read_text())
    assert report["metrics"]["width"] <= 40
    text = svg.read_text()
    m = 40 + len(drawing["graph"]["chords"])
    assert text.count("<circle") == 40 and text.count("<line") == m


def test_strict_draw_and_verify(tmp):
    g, d, svg = tmp / "g.json", tmp / "d.json", tmp / "d.svg"
    assert _run(["gen", "--family", "outerpath", "--n-faces", 3, "--k", 3, "--seed", 1, "-o", g]) == 0
    assert _run(["draw", "--mode", "strict", "-i", g, "-o", d, "--svg", svg]) == 0
    assert _run(["verify", "--mode", "strict", "-i", d]) == 0
    assert svg.exists()


def test_strict_rejects_non_outerpath(tmp):
    g = tmp / "g.json"
    _run(["gen", "--family", "lb-convex", "--n", 8, "-o", g])
    assert _run(["draw", "--mode", "strict", "-i", g]) == 1


def test_verify_detects_swap(tmp, capsys):
    g, d, rep = tmp / "g.json", tmp / "d.json", tmp / "r.json"
    _run(["gen", "--family", "random", "--n", 30, "--density", "0.5", "--seed", 2, "-o", g])
    _run(["draw", "-i", g, "-o", d])
    obj = json.loads(d.read_text())
    chords = {tuple(c) for c in obj["graph"]["chords"]}
    n = obj["graph"]["n"]
    a, b = next((a, b) for a in range(n) for b in range(a + 2, n)
                if (a, b) not in chords and not (a == 0 and b == n - 1))
    obj["pos"][a], obj["pos"][b] = obj["pos"][b], obj["pos"][a]
    d.write_text(json.dumps(obj))
    assert _run(["verify", "-i", d, "-o", rep]) == 1
    report = json.loads(rep.read_text())
    failed = [k for k, c in report["checks"].items() if not c["pass"]]
    assert failed and any("witness" in report["checks"][k] for k in failed)


def test_verify_truncated_file(tmp):
    g, d = tmp / "g.json", tmp / "d.json"
    _run(["gen", "--family", "random", "--n", 10, "-o", g])
    _run(["draw", "-i", g, "-o", d])
    d.write_text(d.read_text()[:25])
    assert _run(["verify", "-i", d]) == 2


def test_draw_with_root_and_ingest(tmp):
    g = tmp / "g.json"
    g.write_text(json.dumps({"n": 5, "walk": [0, 1, 3, 4, 1, 2],
                             "edges": [[0, 1], [1, 2], [2, 0], [1, 3], [3, 4], [4, 1]]}))
    d = tmp / "d.json"
    assert _run(["draw", "-i", g, "-o", d, "--root", "1,0"]) == 0
    assert _run(["verify", "-i", d, "--root", "1,0"]) == 0
    assert _run(["draw", "-i", g, "--root", "0,1"]) == 2
    assert _run(["draw", "-i", g, "--root", "zero"]) == 2


def test_render(tmp):
    g, d, svg = tmp / "g.json", tmp / "d.json", tmp / "x.svg"
    _run(["gen", "--family", "lb-convex", "--n", 10, "-o", g])
    _run(["draw", "-i", g, "-o", d])
    assert _run(["render", "-i", d, "-o", svg]) == 0
    assert svg.read_text().count("<circle") == 10


def _rows(text):
    lines = text.strip().splitlines()
    assert lines[0] == "family,n,k,d,width,height,area,ratio1,ratio2,elapsed_ms,seed"
    return [l.split(",") for l in lines[1:]]


def test_bench_convex_rows(tmp):
    out = tmp / "b.csv"
    assert _run(["bench", "--mode", "convex", "--sizes", "64,128,256", "--trials", 5, "--seed", 3, "-o", out]) == 0
    rows = _rows(out.read_text())
    data = [r for r in rows if r[0] != "max"]
    assert len(data) == 15 and len(rows) == 18
    for r in data:
        assert re.fullmatch(r"\d+\.\d{6}", r[7]) and r[9] == "0"
        assert int(r[6]) == int(r[4]) * int(r[5])


def test_bench_strict_rows(tmp):
    out = tmp / "b.csv"
    assert _run(["bench", "--mode", "strict", "--sizes", "300", "--k", "4,8,16", "--trials", 3,
                 "--seed", 3, "-o", out]) == 0
    data = [r for r in _rows(out.read_text()) if r[0] != "max"]
    assert len(data) == 9


def test_bench_bad_flags():
    assert _run(["bench", "--mode", "convex", "--sizes", ""]) == 2
    assert _run(["bench", "--mode", "convex", "--sizes", "a,b"]) == 2


def test_bench_deterministic(tmp):
    a, b = tmp / "a.csv", tmp / "b.csv"
    args = ["bench", "--mode", "convex", "--sizes", "50,100", "--trials", 3, "--seed", 9]
    _run(args + ["-o", a])
    _run(args + ["-o", b, "--jobs", 2])
    assert a.read_bytes() == b.read_bytes()

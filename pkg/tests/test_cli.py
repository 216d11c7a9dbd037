import json
import random
from pathlib import Path

import pytest

from raagsep import cli, io
from raagsep.fleet import random_graph, random_local_isometry
from raagsep.raag import word

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_graph_examples():
    g = io.parse_graph("vertices a b\nedge a b\n")
    assert g.vertices == ("a", "b") and g.adjacent("a", "b")
    assert str(word(g, "b a")) == "a b"
    with pytest.raises(io.ParseError) as info:
        io.parse_graph("# header\nvertices a b\nedge a c\n")
    assert info.value.line == 3


def test_parse_complex_errors():
    g = io.parse_graph("vertices a b\n")
    bad = {
        "graph x\nvertex 0\nvertex 0\nbase 0\nbase 0\n": "more than one base",
        "graph x\nvertex 0\nbase 0\nedge c 0 0\n": "unknown generator",
        "graph x\nvertex 0\nbase 0\nedge a 0 4\n": "not a declared vertex",
        "graph x\nvertex -1\nbase 0\n": "malformed",
        "graph x\nvertex 0\n": "missing base",
    }
    for text, msg in bad.items():
        with pytest.raises(io.ParseError, match=msg):
            io.parse_complex(text, g)


def test_round_trip():
    rng = random.Random(2)
    for _ in range(30):
        graph = random_graph(rng)
        text = io.format_graph(graph)
        assert io.format_graph(io.parse_graph(text)) == text
        Z = random_local_isometry(rng, graph)
        ctext = io.format_complex(Z, "g.graph")
        Z2, ref = io.parse_complex("# comment\n" + ctext.replace(" ", "   "), graph)
        assert ref == "g.graph" and io.format_complex(Z2, ref) == ctext


def test_separate_example(capsys):
    code, out = run(capsys, "separate", "-g", DATA / "zz.graph", "-z", DATA / "aloop.cplx", "-w", "b")
    assert code == 0 and out["schema"] == 1
    assert (out["index"], out["bound"], out["verified"]) == (2, 2, True)
    cover = out["cover"]
    assert cover["permutations"] == {"a": [0, 1], "b": [1, 0]} and cover["base"] == 0


def test_oracle_example(capsys):
    code, out = run(capsys, "oracle", "-g", DATA / "z.graph", "--gens", "v v v", "-w", "v", "--max", 6)
    assert code == 0 and out["min_index"] == 3


def test_normalize_example(capsys):
    code, out = run(capsys, "normalize", "-g", DATA / "zz.graph", "-w", "a a^-1")
    assert code == 0 and out["normal_form"] == [] and out["length"] == 0


def test_other_commands(capsys):
    z3 = DATA / "z3.cplx"
    assert run(capsys, "member", "-z", z3, "-w", "v v v")[1]["member"] is True
    code, out = run(capsys, "theorem-a", "-z", DATA / "aloop_f2.cplx", "-w", "b a")
    assert code == 0 and out["verified"] and out["size"] == 3
    assert run(capsys, "complete", "-z", DATA / "aloop.cplx")[1]["degree"] == 1
    assert run(capsys, "hull", "-g", DATA / "zz.graph", "--points", ",a b")[1]["size"] == 4
    assert run(capsys, "sep-growth", "-z", z3, "-n", 3, "--max", 6)[1]["value"] == 3
    assert run(capsys, "check", "-z", z3)[1]["ok"] is True
    assert run(capsys, "transversal", "-z", z3)[1]["transversal"] == [[], ["v"], ["v^-1"]]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "normalize", "-g", DATA / "zz.graph", "-w", "c")[0] == 1
    assert run(capsys, "separate", "-z", DATA / "z3.cplx", "-w", "v v v")[0] == 1
    assert run(capsys, "member", "-z", tmp_path / "missing.cplx", "-w", "v")[0] == 1
    corner = tmp_path / "corner.cplx"
    corner.write_text(f"graph {DATA / 'zz.graph'}\nvertex 0\nvertex 1\nvertex 2\nbase 0\n"
                      "edge a 0 1\nedge b 1 2\n")
    assert run(capsys, "check", "-z", corner)[0] == 2
    code, out = run(capsys, "oracle", "-g", DATA / "f2.graph", "-w", "a b a^-1 b^-1",
                    "--max", 8, "--budget", 5)
    assert code == 4 and out["error"] == "budget" and "searched_up_to" in out["partial"]


def test_construction_incomplete_exit_code(capsys, monkeypatch):
    from raagsep.construction import ConstructionIncomplete

    def stuck(Z, g):
        raise ConstructionIncomplete("no saturation rule applies")

    monkeypatch.setattr(cli, "construct", stuck)
    code, out = run(capsys, "theorem-a", "-z", DATA / "aloop.cplx", "-w", "b")
    assert code == 3 and out["error"] == "construction-incomplete"

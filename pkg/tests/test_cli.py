import json
from io import StringIO

import pytest

from clusterframe import suite
from clusterframe.cli import main


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_companion_json():
    code, text = run("companion", "--preset", "B2")
    assert code == 0
    data = json.loads(text)
    assert data["cartan_companion"] == [[2, -2], [-1, 2]]
    assert data["symmetrizer"] == ["1", "2"]
    assert data["finite_type"] is True


def test_mutate_pentagon():
    code, text = run("mutate", "--preset", "A2", "--path", "1,2,1,2,1")
    assert code == 0
    assert json.loads(text)["equivalent_to_initial"] == [2, 1]
    code, text = run("mutate", "--preset", "A2", "--path", "1", "--format", "text")
    assert "x1 = x1^-1*x2 + x1^-1*y1" in text


def test_exchange_graph_text_and_dot():
    code, text = run("exchange-graph", "--preset", "B3", "--format", "text")
    assert code == 0 and "seeds: 20" in text and "closed: True" in text
    code, text = run("exchange-graph", "--preset", "affine2", "--depth", "4", "--format", "text")
    assert code == 0 and "closed: False" in text
    code, text = run("exchange-graph", "--preset", "A2", "--format", "dot")
    assert text.count(" -- ") == 5


def test_sortables():
    code, text = run("sortables", "--preset", "A3", "--format", "text")
    assert code == 0 and len(text.split()) == 14
    data = json.loads(run("sortables", "--preset", "A2")[1])
    assert data["sortables"][0]["word"] == []


def test_cambrian_dot_hexagon():
    code, text = run("cambrian", "--preset", "B2", "--export", "dot")
    assert code == 0
    edges = [line for line in text.splitlines() if " -- " in line]
    assert len(edges) == 6
    assert text.count("taillabel=") + text.count("headlabel=") == 12
    assert 'taillabel="2a1+a2"' in text or 'headlabel="2a1+a2"' in text


def test_output_is_deterministic():
    for argv in [("cambrian", "--preset", "G2"), ("export", "--preset", "B2", "--what", "seeds"),
                 ("verify", "--types", "A2,B2")]:
        assert run(*argv) == run(*argv)


def test_verify_passes():
    code, text = run("verify", "--types", "A2,B2", "--format", "text")
    assert code == 0
    assert text.strip().endswith("ALL PASS")
    code, text = run("verify", "--suite", "matrix", "--preset", "affine2", "--length", "6")
    assert code == 0 and json.loads(text)["passed"]


def test_export_conditions():
    code, text = run("export", "--preset", "A3", "--what", "conditions")
    assert code == 0
    assert all(r["passed"] for r in json.loads(text))


def test_injected_failure_exits_one(monkeypatch):
    real = suite.verify_orientation

    def broken(*args, **kwargs):
        return real(*args, **kwargs) + [suite._entry("injected", False)]

    monkeypatch.setattr(suite, "verify_orientation", broken)
    code, text = run("verify", "--types", "A2", "--format", "text")
    assert code == 1
    assert "FAIL A2" in text and "injected" in text


@pytest.mark.parametrize("argv", [
    ("companion",),
    ("companion", "--preset", "nope"),
    ("verify", "--types", "A2,X9"),
    ("mutate", "--preset", "A2", "--path", "1,5"),
    ("mutate", "--preset", "A2", "--path", "a"),
    ("sortables", "--preset", "A2", "--length", "-1"),
    ("nonsense",),
])
def test_bad_input_exits_two(argv):
    assert run(*argv)[0] == 2


def test_matrix_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2,\n "b": [[0, 1], [-1, 0]\n}')
    assert run("companion", "--matrix", str(bad))[0] == 2
    nonsym = tmp_path / "nonsym.json"
    nonsym.write_text('{"n": 2, "b": [[0, 1], [1, 0]]}')
    assert run("companion", "--matrix", str(nonsym))[0] == 2
    cyc = tmp_path / "cyclic.json"
    cyc.write_text('{"n": 3, "b": [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]}')
    assert run("cambrian", "--matrix", str(cyc))[0] == 2
    good = tmp_path / "good.json"
    good.write_text('{"n": 2, "b": [[0, 1], [-1, 0]]}')
    assert run("sortables", "--matrix", str(good), "--format", "text")[1].split() == \
        ["e", "s1", "s2", "s1s2", "s1s2s1"]
    assert run("companion", "--matrix", str(tmp_path / "missing.json"))[0] == 2

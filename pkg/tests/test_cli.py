import json
import subprocess
import sys

import pytest

from pointscheme.cli import main
from pointscheme.corpus import GOLDEN, PRESENTATIONS, strip_comments
from pointscheme.relparse import parse_poly
from pointscheme.report import analyze, component_from_json, golden_report, to_json
from pointscheme.relparse import parse_presentation


@pytest.fixture
def alg(tmp_path):
    def write(name):
        f = tmp_path / f"{name}.alg"
        f.write_text(PRESENTATIONS[name])
        return str(f)
    return write


def test_scheme_prop1(alg, capsys):
    assert main(["scheme", alg("prop1")]) == 0
    assert capsys.readouterr().out.splitlines() == ["V(x2, x3)", "V(x2*x3 - x1*x4)"]


def test_minors_prop6(alg, capsys):
    assert main(["minors", alg("prop6")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert all(l.split("#")[0].strip().endswith("*(a1^2 - a2*a3)") for l in lines)


def test_minors_expanded(alg, capsys):
    assert main(["minors", "--expanded", alg("prop6")]) == 0
    first = capsys.readouterr().out.splitlines()[0].split("#")[0].strip()
    assert first == "a1^3*a2 - a1*a2^2*a3"


def test_fiber(alg, capsys):
    assert main(["fiber", alg("prop1"), "--alpha", "1,0,0,0", "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "rank 3" in out and "beta = (1, 0, 0, 0)" in out


def test_fiber_json(alg, capsys):
    assert main(["fiber", alg("prop3"), "--alpha", "0,1,0,0", "--q", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rank"] == 3 and doc["kernel"] == [["0", "1", "0", "0"]]


def test_fiber_bad_q_is_input_error(alg):
    assert main(["fiber", alg("prop1"), "--alpha", "1,0,0,0", "--q", "-1"]) == 1
    assert main(["fiber", alg("prop1"), "--alpha", "1,x,0,0"]) == 1


def test_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.alg"
    f.write_text("generators: x1 x2\nrel: x1*x2*x1\n")
    assert main(["scheme", str(f)]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["scheme", str(tmp_path / "missing.alg")]) == 1


def test_strict_warnings(tmp_path):
    f = tmp_path / "few.alg"
    f.write_text("generators: x1 x2 x3\nrel: x1*x2 - x2*x1\n")
    assert main(["scheme", str(f)]) == 0
    assert main(["scheme", "--strict", str(f)]) == 2


def test_strict_flags_parameter_factors(tmp_path, alg):
    # without the q^2 != 1 constraint the minors keep a parameter factor
    text = PRESENTATIONS["prop1"].replace("constraint: q^2 - 1\n", "")
    f = tmp_path / "loose.alg"
    f.write_text(text)
    assert main(["scheme", "--strict", str(f)]) == 2
    assert main(["scheme", "--strict", alg("prop1")]) == 0


def test_corpus(capsys):
    assert main(["corpus"]) == 0
    assert capsys.readouterr().out.strip() == "6/6 presentations match"


def test_corpus_mismatch_exit(monkeypatch, capsys):
    monkeypatch.setitem(GOLDEN, "prop4", GOLDEN["prop4"].replace("x3*x4", "x2*x4"))
    assert main(["corpus"]) == 3
    assert "5/6 presentations match" in capsys.readouterr().out


def test_goldens_are_current():
    for name, text in PRESENTATIONS.items():
        assert strip_comments(GOLDEN[name]) == golden_report(analyze(parse_presentation(text)))


@pytest.mark.parametrize("name", list(PRESENTATIONS))
def test_json_roundtrip_matches_internal(name, alg, capsys):
    assert main(["scheme", "--json", alg(name)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    a = analyze(parse_presentation(PRESENTATIONS[name]))
    back = [component_from_json(c, 4) for c in doc["components"]]
    assert back == list(a.scheme.components)
    assert [c["double"] for c in doc["components"]] == list(a.scheme.double)
    assert [tuple(x) for x in doc["containments"]] == list(a.scheme.containments)
    for m, (rows, scalar, canon) in zip(doc["minors"], a.minors.reduced):
        f = m["factored"]
        rebuilt = parse_poly(f"({f['unit']})*{f['monomial']}*" + "*".join(f"({c})" for c in f["cofactors"]), 4, var="a")
        assert rebuilt == canon.scale(scalar)
        assert m["rows"] == [r + 1 for r in rows]


def test_json_expanded_flag(alg, capsys):
    main(["scheme", "--json", alg("prop2")])
    assert "expanded" not in json.loads(capsys.readouterr().out)["minors"][0]
    main(["scheme", "--json", "--expanded", alg("prop2")])
    assert "expanded" in json.loads(capsys.readouterr().out)["minors"][0]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "pointscheme", "corpus"], capture_output=True, text=True)
    assert out.returncode == 0 and "6/6" in out.stdout

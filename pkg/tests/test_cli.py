import json

import pytest

from hombol.cli import main
from hombol.fixtures import fixture
from hombol.io import dumps_morphism, load_algebra, save_algebra


@pytest.fixture
def files(tmp_path):
    for name in ("example-4.1-star", "example-4.1-bol", "example-3.1-printed", "example-3.1"):
        save_algebra(fixture(name), tmp_path / f"{name}.json")
    save_algebra(fixture("zero", degrees=(0, 1, 1)), tmp_path / "zero3.json")
    g = fixture("example-4.1-star").grading
    for a, b in ((2, 3), (2, 0)):
        text = dumps_morphism(fixture("example-4.1-beta", a=a, b=b), "beta", g)
        (tmp_path / f"beta-{a}-{b}.json").write_text(text)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_exit_codes(files, capsys):
    assert run(capsys, "check", "--file", files / "example-4.1-star.json", "--suite", "right-alt")[0] == 0
    assert run(capsys, "check", "--file", files / "zero3.json", "--suite", "bol")[0] == 0
    code, out, _ = run(capsys, "check", "--file", files / "example-3.1-printed.json", "--suite", "bol")
    assert code == 1
    assert "SB1" in out and "(i, k)" in out


def test_check_json_and_dsl(files, capsys):
    code, out, _ = run(capsys, "check", "--file", files / "example-3.1-printed.json", "--suite", "bol", "--json")
    assert code == 1 and json.loads(out)["pass"] is False
    code, out, _ = run(capsys, "check", "--file", files / "example-3.1-printed.json", "--dsl", "bol", "--json")
    assert code == 1
    sb1 = next(v for v in json.loads(out)["axioms"] if v["axiom"] == "SB1")
    assert [c["args"] for c in sb1["counterexamples"]] == [["i", "k"], ["k", "i"]]
    idl = files / "skew.idl"
    idl.write_text("SKEW: [x,y] == 0 - (-1)^(|x|*|y|) * [y,x]\n")
    assert run(capsys, "check", "--file", files / "example-4.1-bol.json", "--dsl", idl)[0] == 0
    assert run(capsys, "check", "--file", files / "example-4.1-bol.json", "--suite", "bol", "--scale", "1/2")[0] == 0


def test_check_usage_errors(files, capsys):
    assert run(capsys, "check", "--file", files / "missing.json", "--suite", "bol")[0] == 2
    bad = files / "bad.json"
    bad.write_text('{"dimension": 1, "degrees": [0], "binary": [{"args": [0, 0], "value": {"0": 0.5}}]}')
    code, _, err = run(capsys, "check", "--file", bad, "--suite", "bol")
    assert code == 2 and "rational" in err
    assert run(capsys, "check", "--file", files / "zero3.json")[0] == 2
    assert run(capsys, "check", "--file", files / "zero3.json", "--suite", "nope")[0] == 2
    idl = files / "broken.idl"
    idl.write_text("X: {x,y} == 0\n")
    code, _, err = run(capsys, "check", "--file", files / "zero3.json", "--dsl", idl)
    assert code == 2 and "1:" in err
    # the suite needs a ternary product the star algebra lacks
    assert run(capsys, "check", "--file", files / "example-4.1-star.json", "--suite", "bol")[0] == 2
    assert run(capsys)[0] == 2


def test_construct_bol(files, capsys):
    out = files / "bol.json"
    assert run(capsys, "construct", "bol", "--file", files / "example-4.1-star.json", "--out", out)[0] == 0
    assert load_algebra(out).same_structure(fixture("example-4.1-bol"))
    code, text, _ = run(capsys, "construct", "bol", "--file", files / "example-4.1-star.json")
    assert code == 0 and '"args": [1, 2]' in text
    # example-3.1 carries a ternary product but is not right alternative
    code, _, err = run(capsys, "construct", "bol", "--file", files / "example-3.1.json")
    assert code == 1 and "NotRightAlternative" in err


def test_construct_other_kinds(files, capsys):
    for kind in ("plus", "minus", "lsts"):
        assert run(capsys, "construct", kind, "--file", files / "example-4.1-star.json")[0] == 0
    assert run(capsys, "construct", "plus", "--file", files / "example-4.1-star.json", "--scale", "x")[0] == 2


def test_twist(files, capsys):
    out = files / "hb.json"
    args = ("twist", "yau", "--file", files / "example-4.1-bol.json")
    assert run(capsys, *args, "--morphism", files / "beta-2-0.json", "--out", out)[0] == 0
    assert load_algebra(out).same_structure(fixture("example-4.1-hom-bol", a=2, b=0))
    # beta(2,3) is not a morphism of the bracket, so the verified twist refuses
    code, _, err = run(capsys, *args, "--morphism", files / "beta-2-3.json")
    assert code == 1 and "NotMorphism" in err
    assert run(capsys, *args, "--morphism", files / "beta-2-3.json", "--no-verify", "--out", out)[0] == 0
    assert load_algebra(out).same_structure(fixture("example-4.1-hom-bol", a=2, b=3))
    code = run(capsys, "twist", "yau", "--file", files / "example-4.1-star.json",
               "--morphism", files / "beta-2-0.json", "--out", out)[0]
    assert code == 0 and load_algebra(out).twist == fixture("example-4.1-beta", a=2)


def test_twist_power_and_derive(files, capsys):
    hb = files / "hb.json"
    save_algebra(fixture("example-4.1-hom-bol", a=2, b=0), hb)
    out = files / "out.json"
    assert run(capsys, "twist", "power", "--file", hb, "--morphism", files / "beta-2-0.json",
               "-n", 2, "--out", out)[0] == 0
    assert load_algebra(out).ternary.product(0, 1, 1).coeffs == (256, 0, 0)
    assert run(capsys, "derive", "-n", 0, "--file", hb, "--out", out)[0] == 0
    assert out.read_text() == hb.read_text()
    assert run(capsys, "derive", "-n", 1, "--file", hb, "--out", out)[0] == 0
    assert load_algebra(out).binary.product(1, 2).coeffs == (24, 0, 0)
    assert run(capsys, "derive", "-n", -1, "--file", hb)[0] == 2


def test_fixture_commands(files, capsys):
    code, out, _ = run(capsys, "fixture", "list")
    assert code == 0 and "example-4.1-star" in out.split()
    code, out, _ = run(capsys, "fixture", "emit", "example-4.1-star")
    assert code == 0 and out == (files / "example-4.1-star.json").read_text()
    code, _, err = run(capsys, "fixture", "emit", "example-4.1-beta", "--param", "a=0")
    assert code == 2 and "a must be nonzero" in err
    code, out, _ = run(capsys, "fixture", "emit", "example-4.1-beta", "--param", "a=2", "--param", "b=3")
    assert code == 0 and out == (files / "beta-2-3.json").read_text().replace('"beta"', '"example-4.1-beta"')
    assert run(capsys, "fixture", "emit", "zero", "--param", "degrees=0,1")[0] == 0
    assert run(capsys, "fixture", "emit")[0] == 2
    assert run(capsys, "fixture", "emit", "example-4.1-beta", "--param", "a")[0] == 2
    assert run(capsys, "fixture", "emit", "nope")[0] == 2


@pytest.mark.slow
def test_verify_paper_default(capsys):
    code, out, _ = run(capsys, "verify-paper", "--mutations", 2)
    # the printed Example 3.1 also breaks SB4, so check 4c stays red
    assert code == 1
    assert "12/13 checks passed" in out
    assert "failing: 4c" in out


@pytest.mark.slow
def test_verify_paper_plus_sign_names_table_mismatch(capsys):
    code, out, _ = run(capsys, "verify-paper", "--mutations", 2, "--jordan-sign", "plus")
    assert code == 1
    assert "[FAIL]   1  example-4.1-star -> Bol table" in out


@pytest.mark.slow
def test_verify_paper_half_scale(capsys):
    code, out, _ = run(capsys, "verify-paper", "--mutations", 2, "--scale", "1/2")
    assert code == 1
    failed = {line.split()[1] for line in out.splitlines() if line.startswith("[FAIL]")}
    assert failed == {"1", "2", "4c"}

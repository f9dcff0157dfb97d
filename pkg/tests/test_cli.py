import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from fprlab.cli import EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from fprlab.cli import reproduce as R
from fprlab.cli.spec import format_spec, load, parse_spec
from fprlab.errors import SpecSemanticError, SpecSyntaxError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


SPECS = [
    "sym:5", "alt:6@ksets:2", "sym:4@tuples:2", "cyclic:7@regular", "dihedral:10",
    "perm:5:(1,2,3,4,5),(1,2)", "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)",
    "wreath:sym:3:sym:2@product", "gl:2:3@vectors", "pgl:3:3", "sp:6:2@forms:minus",
    "gl:4:2@subspaces:2", "psl:2:23@projective",
]


@pytest.mark.parametrize("text", SPECS)
def test_spec_round_trip(text):
    g, a = parse_spec(text)
    canon = format_spec(g, a)
    assert parse_spec(canon) == (g, a)
    assert format_spec(*parse_spec(canon)) == canon


@given(st.sampled_from(["sym", "alt", "cyclic"]), st.integers(3, 9),
       st.sampled_from(["", "@natural", "@ksets:2", "@tuples:2"]))
def test_generated_specs_round_trip(kind, n, action):
    g, a = parse_spec(f"{kind}:{n}{action}")
    assert parse_spec(format_spec(g, a)) == (g, a)


def test_default_actions():
    assert format_spec(*parse_spec("sym:5")) == "sym:5@natural"
    assert format_spec(*parse_spec("pgl:3:3")) == "pgl:3:3@projective"


@pytest.mark.parametrize("text,pos", [
    ("sym5", 3), ("sym:x", 4), ("foo:3", 0), ("sym:5@bogus", 6), ("sym:5 junk", 5),
    ("perm:3:(1,2", 7), ("sp:6:2@forms:zero", 13),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(SpecSyntaxError) as exc:
        parse_spec(text)
    assert exc.value.position == pos
    assert f"position {pos}" in str(exc.value)


@pytest.mark.parametrize("text", [
    "sym:5@ksets:5", "sym:3@tuples:4", "gl:3:6", "sp:3:2", "sp:4:3@forms:minus",
    "sym:5@vectors", "gl:2:3@ksets:2", "sym:5@product", "dihedral:7", "gl:4:2@subspaces:4",
])
def test_semantic_errors(text):
    with pytest.raises(SpecSemanticError):
        parse_spec(text)


def test_envelope_and_byte_stability():
    code, a = run("fpr", "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", "--seed", "11")
    _, b = run("fpr", "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", "--seed", "11")
    assert code == EXIT_OK and a == b
    env = json.loads(a)
    assert env["schema"] == "fprlab/1" and env["seed"] == 11
    assert env["spec"] == "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)"
    assert {r["fpr"] for r in env["result"]["rows"]} == {"1/1", "1/3", "0/1", "1/6"}


def test_randomized_output_is_seeded():
    args = ("base", "sym:6", "--prob", "--c", "5", "--trials", "400")
    assert run(*args, "--seed", "5") == run(*args, "--seed", "5")


def test_csv_output():
    code, text = run("mu", "sym:5", "--format", "csv")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "key,value"
    assert "result.mu,2" in lines and "schema,fprlab/1" in lines


@pytest.mark.parametrize("argv,code", [
    (["classes", "alt:5"], EXIT_OK),
    (["graph", "alt:5"], EXIT_OK),
    (["spread", "alt:5"], EXIT_OK),
    (["uspread", "alt:5", "--y", "(1,2,3,4,5)", "--k", "2"], EXIT_OK),
    (["pgen2", "alt:6"], EXIT_OK),
    (["genus-screen", "alt:5", "--insoluble-filter"], EXIT_OK),
    (["ind-table", "psl:2:23"], EXIT_OK),
    (["base", "pgl:3:3"], EXIT_OK),
    (["base", "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", "--qhat", "--c", "3"], EXIT_OK),
    (["fpr", "sym:5@ksets:7"], EXIT_USAGE),
    (["fpr", "sym:5@"], EXIT_USAGE),
    (["frobnicate", "sym:5"], EXIT_USAGE),
    (["base", "sym:5", "--prob"], EXIT_USAGE),
    (["spread", "alt:7"], EXIT_CAP),
    (["pgen2", "sym:7"], EXIT_CAP),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# caps\nseed = 9\ncap.spread = 10\n")
    assert run("spread", "alt:5", "--config", str(cfg))[0] == EXIT_CAP
    code, text = run("mu", "sym:4", "--config", str(cfg))
    assert code == EXIT_OK and json.loads(text)["seed"] == 9
    bad = tmp_path / "bad.cfg"
    bad.write_text("cap.nonsense = 3\n")
    assert run("mu", "sym:4", "--config", str(bad))[0] == EXIT_USAGE


def test_genus_of_tuple_file(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("(1,3,2)  # first\n(1,2,3,4,5)\n(1,5,4)\n")
    code, text = run("genus-of", "alt:5", "--tuple", str(f))
    assert code == EXIT_OK
    res = json.loads(text)["result"]
    assert res["genus"] == 0 and res["index_sum"] == 8
    f.write_text("(1,2,3)\n")
    assert run("genus-of", "alt:5", "--tuple", str(f))[0] == EXIT_USAGE


def test_reproduce_subset_passes():
    code, text = run("reproduce", "bases")
    env = json.loads(text)
    assert code == EXIT_OK and env["result"]["failed"] == 0 and env["result"]["passed"] > 0


def test_reproduce_reports_mismatch(monkeypatch):
    real = R.load_table

    def tampered(name):
        t = real(name)
        for e in t["entries"]:
            if e["check"] == "base":
                e["expected"] = {"b": e["expected"]["b"] + 1}
        return t

    monkeypatch.setattr(R, "load_table", tampered)
    code, text = run("reproduce", "bases")
    assert code == EXIT_MISMATCH and json.loads(text)["result"]["failed"] > 0


def test_load_sets_canonical_spec():
    assert load("sym:4").meta["spec"] == "sym:4@natural"


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "fprlab.cli", "mu", "alt:5"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["result"]["mu"] == 3

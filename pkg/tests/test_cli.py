import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from montesinos.cli import KnotParseError, expand_family, main, parse_knot


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_knot_examples():
    assert parse_knot("M(1/2,1/3,-2/3)").tangles == (F(1, 2), F(1, 3), F(-2, 3))
    assert parse_knot(" M( 2/4, 1/3 ,1/7 )").tangles == (F(1, 2), F(1, 3), F(1, 7))


@pytest.mark.parametrize("text", ["M(1/2,1/3)", "M(1/2,1/x,1/3)", "N(1/2,1/3,1/5)", "M(1/2,2,1/3)", "M(1/0,1/2,1/3)"])
def test_parse_knot_errors(text):
    with pytest.raises(ValueError):
        parse_knot(text)


def test_two_bridge_message():
    with pytest.raises(KnotParseError, match="two-bridge"):
        parse_knot("M(1/2,1/3)")


def test_family_expansion():
    ks = expand_family("M(-1/3,1/3,1/n)", "n=3..5")
    assert [k.tangles[2] for k in ks] == [F(1, 3), F(1, 4), F(1, 5)]


def test_report_json(capsys):
    code, out, _ = run(["report", "--knot", "M(-1/2,1/3,1/7)"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["summary"]["diameter"] == "20"
    assert d["summary"]["crossing_number"] == "12"
    assert d["summary"]["theorem1"] == "pass"
    assert d["case_tag"] == "2-2-2-1b-b"
    assert d["tau_max"] == {"lo": "2", "hi": "2"}
    assert d["verdicts"]["theorem1"]["margins"] == ["2", "4"]
    assert d["witnesses"]["max"]["type"] == "II"


def test_report_is_deterministic(capsys):
    _, a, _ = run(["report", "--knot", "M(-1/2,2/3,2/3)"], capsys)
    _, b, _ = run(["report", "--knot", "M(-1/2,2/3,2/3)"], capsys)
    assert a == b and "meta" not in json.loads(a)
    _, c, _ = run(["report", "--knot", "M(-1/2,2/3,2/3)", "--meta"], capsys)
    assert "meta" in json.loads(c)


def test_input_errors_exit_2(capsys):
    code, _, err = run(["report", "--knot", "M(1/2,1/3)"], capsys)
    assert code == 2 and json.loads(err)["error"]["code"] == "KnotParseError"
    code, _, err = run(["report", "--knot", "M(1/2,1/3,1/8)"], capsys)
    assert code == 2 and json.loads(err)["error"]["code"] == "LinkInputError"
    with pytest.raises(SystemExit) as e:
        main(["report", "--format", "xml"])
    assert e.value.code == 2


def test_sweep_csv(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code = main(["sweep", "--max-den", "3", "--out", str(out)])
    rows = out.read_text().splitlines()
    assert code == 0
    assert rows[0].startswith("knot,case_tag")
    assert len(rows) > 1
    main(["sweep", "--max-den", "3", "--out", str(tmp_path / "t.csv")])
    assert (tmp_path / "t.csv").read_text() == out.read_text()


def test_family_sweep(capsys):
    code, out, _ = run(["sweep", "--family", "M(-1/3,1/3,1/n)", "--range", "n=3..5", "--format", "json"], capsys)
    d = json.loads(out)
    assert code == 0 and [r["knot"] for r in d["reports"]] == [
        "M(-1/3,1/3,1/3)", "M(-1/3,1/3,1/4)", "M(-1/3,1/3,1/5)"]


def test_verify_and_oracle(capsys):
    code, out, _ = run(["verify", "--knot", "M(-1/2,1/3,1/7)", "--verify", "thm1,cor14"], capsys)
    assert code == 0 and out.count("\tpass\t") == 2
    code, out, _ = run(["oracle", "--max-den", "3"], capsys)
    assert code == 0 and "all agree" in out


def test_dump_diagram(capsys):
    code, out, _ = run(["dump-diagram", "--knot", "M(-1/2,1/3,1/7)"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "record,a,b,c,d,e"
    kinds = {line.split(",")[0] for line in lines[1:]}
    assert kinds == {"vertex", "edge", "triangle", "breakpoint"}


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "montesinos", "report", "--knot", "M(1/2,1/3,1/7)"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["diameter"] == "24"

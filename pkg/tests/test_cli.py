import json
import subprocess
import sys

import pytest

from linksgould import cli
from linksgould.ring import parse
from linksgould.tangle import BraidWord, lg_from_braid


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_lg_unknot(capsys):
    rc, out, _ = run(capsys, "lg", "unknot")
    assert rc == 0 and out.strip() == "LG = 1, span 0, genus ≥ 0"


def test_lg_braid_check_alexander(capsys):
    rc, out, _ = run(capsys, "lg", "--braid", '{"strands":2,"word":[1,1,1]}', "--check-alexander")
    assert rc == 0
    assert out.count("pass  LG(") == 2 and "genus ≥ 1" in out


def test_lg_kt_qqa(capsys):
    rc, out, _ = run(capsys, "lg", "kinoshita-terasaka", "--style", "qqa")
    assert rc == 0
    assert "q^{-6α}(-q^{-8} - q^{-6} + 2q^{-4} + q^{-2} - 1)" in out
    assert out.strip().endswith("span 6, genus ≥ 2")


@pytest.mark.parametrize("style", ["qqa", "t0t1", "su"])
def test_json_round_trips_through_parser(capsys, style):
    rc, out, _ = run(capsys, "lg", "figure-eight", "--json", "--style", style, "--genus-bound")
    d = json.loads(out)
    want = lg_from_braid(BraidWord(3, (1, -2, 1, -2))).value
    assert rc == 0 and parse(d["lg"], style) == want
    assert parse(d["lg_qqa"], "qqa") == want and parse(d["lg_t0t1"], "t0t1") == want
    assert d["alexander_genus_bound"] == 1 and d["genus_lower_bound"] == 1


def test_json_schema_keys_are_stable(capsys):
    _, out, _ = run(capsys, "lg", "trefoil", "--json")
    assert set(json.loads(out)) == {
        "input", "lg_qqa", "lg_t0t1", "span", "genus_lower_bound", "dz", "dt", "known_genus", "style", "lg"
    }


def test_tangle_file_input(tmp_path, capsys):
    from linksgould.tangle import genus_one

    p = tmp_path / "t.json"
    p.write_text(genus_one(1, -1).to_json())
    rc, out, _ = run(capsys, "lg", str(p))
    assert rc == 0 and "genus ≥ 1" in out


def test_zero_polynomial_output(capsys):
    rc, out, _ = run(capsys, "lg", "--braid", '{"strands":2,"word":[]}')
    assert rc == 0 and "LG = 0" in out and "undefined" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["lg", "no-such-knot"],
        ["lg", "--braid", "{not json"],
        ["lg", "--braid", '{"strands":2,"word":[3]}'],
        ["lg"],
        ["lg", "trefoil", "--style", "bogus"],
        ["verify", "nothing"],
    ],
)
def test_parse_errors_exit_2(capsys, argv):
    rc, _, _ = run(capsys, *argv)
    assert rc == 2


def test_invariant_violation_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "reference_kt_conway", lambda: parse("1", "su"))
    rc, _, err = run(capsys, "lg", "kinoshita-terasaka")
    assert rc == 3 and "bundled reference" in err


def test_verify_suites(capsys):
    rc, out, _ = run(capsys, "verify", "relations")
    assert rc == 0 and "FAIL" not in out
    rc, out, _ = run(capsys, "verify", "degrees", "--json")
    assert rc == 0 and all(r["status"] == "pass" for r in json.loads(out))
    rc, out, _ = run(capsys, "verify", "braiding")
    assert rc == 1 and "FAIL  commutant dimension = 4  found 3" in out
    rc, out, _ = run(capsys, "verify", "matrices")
    assert rc == 1 and [l for l in out.splitlines() if l.startswith("FAIL")][0].startswith("FAIL  Atilde")


def test_knot_table_gate():
    for name in cli.GATED:
        e = cli.KNOTS[name]
        cli.gate(e, lg_from_braid(e.braid))


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "linksgould", "lg", "unknot"], capture_output=True, text=True)
    assert r.returncode == 0 and "LG = 1" in r.stdout

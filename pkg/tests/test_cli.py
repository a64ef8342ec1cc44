import json
from pathlib import Path

import jsonschema
import pytest

from gastruct.cli import main

from conftest import ideal_file

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "report_schema.json").read_text())

I2 = "vars: 2\n# the Gorenstein structure on P^2\nS1*S2\nS2 - S1^2\n"
TAU2 = "vars: 2\nS1^2\nS1*S2\nS2^2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_golden(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", ideal_file(tmp_path, "i2.txt", I2))
    assert code == 0
    assert out.splitlines()[:7] == [
        "ideal: (S1*S2, -1*S1^2 + S2)",
        "length: 3",
        "hilbert-samuel: (1, 1, 1)",
        "socle dimension: 1",
        "gorenstein: yes",
        "faithful: yes",
        "fixed-locus dimension: 1",
    ]


def test_analyze_tau2(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", ideal_file(tmp_path, "t.txt", TAU2))
    assert code == 0
    assert "length: 3" in out and "hilbert-samuel: (1, 2)" in out and "gorenstein: no" in out


def test_exit_codes(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", ideal_file(tmp_path, "bad.txt", "vars: 2\nS1*S2\n"))
    assert code == 3 and "infinite colength: no pure power of S1" in err
    code, _, err = run(capsys, "analyze", ideal_file(tmp_path, "p.txt", "vars: 2\nS1*S2 +\n"))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "analyze", ideal_file(tmp_path, "h.txt", "S1^2\n"))
    assert code == 2
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run(capsys, "analyze", ideal_file(tmp_path, "nl.txt", "vars: 1\nS1^2 - S1\n"))
    assert code == 3 and "not nilpotent" in err
    code, _, _ = run(capsys, "catalog", "show", "P7/I_1")
    assert code == 2


def test_coords(tmp_path, capsys):
    code, out, _ = run(capsys, "coords", ideal_file(tmp_path, "i2.txt", I2))
    assert code == 0 and out.splitlines()[0] == "f = (1, x1, x2 + 1/2*x1^2)"
    tau3 = "vars: 3\n" + "\n".join(f"S{i}*S{j}" for i in range(1, 4) for j in range(i, 4)) + "\n"
    code, out, _ = run(capsys, "coords", ideal_file(tmp_path, "tau3.txt", tau3))
    assert out.splitlines()[0] == "f = (1, x1, x2, x3)"
    p3 = "vars: 3\nS1^2 - S2\nS1*S2 - S3\nS1*S3\n"
    code, out, _ = run(capsys, "coords", "--check", ideal_file(tmp_path, "p3.txt", p3))
    assert code == 0 and "derivative relations: pass" in out and "solutions: pass" in out


def test_dual(tmp_path, capsys):
    code, out, _ = run(capsys, "dual", ideal_file(tmp_path, "i2.txt", I2))
    assert code == 0 and "Gorenstein: yes; self-dual: yes" in out
    code, out, _ = run(capsys, "dual", ideal_file(tmp_path, "t.txt", TAU2))
    assert code == 0 and "Gorenstein: no; self-dual: no" in out
    code, out, _ = run(capsys, "dual", ideal_file(tmp_path, "p1.txt", "vars: 1\nS1^2\n"))
    assert code == 0 and "Gorenstein: yes; self-dual: yes" in out
    code, out, _ = run(capsys, "dual", "--strict", ideal_file(tmp_path, "i2.txt", I2))
    assert code == 1 and "DISAGREE" in out


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "P4/I_9")
    assert code == 0
    assert "ideal: [S1^2 - S4, S2^2, S3^2, S1*S2, S1*S3, S1*S4, S2*S3]" in out
    assert "has rank 1" in out


def test_catalog_export(tmp_path, capsys):
    path = tmp_path / "cat.json"
    code, out, _ = run(capsys, "catalog", "export", str(path))
    assert code == 0
    records = json.loads(path.read_text())["entries"]
    assert sum(1 for r in records if not r["auxiliary"]) == 17
    assert any(r["auxiliary"] for r in records)


def test_curve_commands(tmp_path, capsys):
    f = ideal_file(tmp_path, "cusp.txt", "t^2, t^3\n")
    code, out, _ = run(capsys, "curve", "stable", f, "6")
    assert code == 0 and "N = 6: stable" in out
    code, out, _ = run(capsys, "curve", "stable", f, "6", "--span")
    assert code == 1 and "not stable" in out
    code, out, _ = run(capsys, "curve", "enumerate", "4")
    assert code == 0
    assert out.splitlines() == ["N = 4: 4 stable monomial subspaces", "  span{}", "  span{t^3}",
                                "  span{t^2, t^3}", "  span{t, t^2, t^3}", "exactly the tails: yes"]
    code, out, _ = run(capsys, "curve", "semigroup", "2", "5")
    assert code == 1 and "semigroup: not closed" in out
    code, out, _ = run(capsys, "curve", "semigroup", "3,5,6,7,8,9,10", "10")
    assert code == 0
    code, _, _ = run(capsys, "curve", "semigroup", "1", "5")
    assert code == 2
    code, _, _ = run(capsys, "curve", "enumerate", "12")
    assert code == 2


@pytest.mark.parametrize("rows,dim", [("0 1 0\n0 0 1\n0 0 0\n", 3), ("0 0\n0 0\n", 4),
                                      ("0 1 0\n0 0 0\n0 0 0\n", 5)])
def test_centralizer(tmp_path, capsys, rows, dim):
    code, out, _ = run(capsys, "centralizer", ideal_file(tmp_path, "m.txt", rows))
    assert code == 0 and out.strip() == str(dim)


def test_centralizer_bad_matrix(tmp_path, capsys):
    assert run(capsys, "centralizer", ideal_file(tmp_path, "m.txt", "1 2\n3\n"))[0] == 2
    assert run(capsys, "centralizer", ideal_file(tmp_path, "m.txt", "1 x\n3 4\n"))[0] == 2


def _json_commands(tmp_path):
    i2 = ideal_file(tmp_path, "i2.txt", I2)
    cusp = ideal_file(tmp_path, "cusp.txt", "t^2, t^3\n")
    m = ideal_file(tmp_path, "m.txt", "0 1/2\n0 0\n")
    return [
        ["analyze", i2], ["coords", "--check", i2], ["dual", i2],
        ["catalog", "show", "P3/I_2"], ["catalog", "export", str(tmp_path / "c.json")],
        ["curve", "stable", cusp, "6"], ["curve", "enumerate", "5", "--perturbations", "5"],
        ["curve", "semigroup", "2", "5"], ["centralizer", m],
    ]


def _numbers_are_strings(x):
    if isinstance(x, dict):
        return all(_numbers_are_strings(v) for v in x.values())
    if isinstance(x, list):
        return all(_numbers_are_strings(v) for v in x)
    return not isinstance(x, (int, float)) or isinstance(x, bool)


def test_json_reports_validate(tmp_path, capsys):
    for argv in _json_commands(tmp_path):
        main(argv + ["--json"])
        report = json.loads(capsys.readouterr().out)
        jsonschema.validate(report, SCHEMA)
        assert _numbers_are_strings(report), argv


def test_output_is_deterministic(tmp_path, capsys):
    for argv in _json_commands(tmp_path)[:4]:
        outs = []
        for _ in range(2):
            main(argv)
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]


def test_catalog_verify_reports_printed_p4_anomaly(capsys):
    code = main(["catalog", "verify", "--json"])
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, SCHEMA)
    # the printed P4 ideals I_3 and I_4 have length 4; verify must say so and exit nonzero
    assert code == 1
    assert report["failures"] == ["P4/I_3: length, faithful, shape_table",
                                  "P4/I_4: length, faithful, shape_table",
                                  "P4/I_3 vs P4/I_4: unknown"]

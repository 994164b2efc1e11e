"""CLI and suite-report plumbing: exit codes, JSON schema, determinism."""

import json

import numpy as np
import pytest

from sixsphere import cli, suites
from sixsphere.cstruct import j_from_octonion
from sixsphere.errors import BadConfig, UnknownSuite
from sixsphere.octonion import Octonion
from sixsphere.sampling import random_so7_float, rng_from_seed


def run_cli(argv):
    return cli.main(argv)


def test_unknown_suite_exit_code(capsys):
    assert run_cli(["verify", "--suite", "nosuch"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_run_suite_rejects_bad_config():
    with pytest.raises(UnknownSuite):
        suites.run_suite("nosuch")
    with pytest.raises(BadConfig):
        suites.run_suite("moufang", mode="approximate")
    with pytest.raises(BadConfig):
        suites.run_suite("moufang", samples=-1)


def test_verify_cli_pass(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run_cli(["verify", "--suite", "lemma34", "--samples", "50",
                    "--seed", "7", "--json", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "lemma34" in text and "pass" in text
    payload = json.loads(out.read_text())
    assert payload["suite"] == "lemma34"
    assert payload["failures"] == []
    assert payload["checked"] == 50
    assert payload["max_residual"] is None    # exact mode


def test_verify_report_determinism():
    r1 = suites.run_suite("prop31", samples=40, seed=9).to_dict()
    r2 = suites.run_suite("prop31", samples=40, seed=9).to_dict()
    r1.pop("elapsed_ms"), r2.pop("elapsed_ms")
    assert json.dumps(r1) == json.dumps(r2)
    # a different seed still passes (determinism of the verdict)
    r3 = suites.run_suite("prop31", samples=40, seed=10)
    assert r3.ok


def test_run_all_dispatches_every_suite(monkeypatch):
    called = []

    def stub(samples, mode, seed, tol, table=None):
        called.append((len(called), mode))
        return 1, [], None

    monkeypatch.setattr(suites, "SUITES", {k: stub for k in suites.SUITES})
    reports = suites.run_all(mode="exact", seed=3)
    assert len(reports) == len(suites.SUITES)
    assert all(r.ok for r in reports)


def test_degree_cli(tmp_path, capsys):
    out = tmp_path / "deg.json"
    code = run_cli(["degree", "--map", "identity", "--trials", "2",
                    "--seed", "1", "--starts", "800", "--json", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["map"] == "identity" and payload["degree"] == 1
    assert len(payload["trials"]) == 2
    assert run_cli(["degree", "--map", "bogus"]) == 2


def test_companion_cli(tmp_path, capsys):
    rng = rng_from_seed(3)
    m = random_so7_float(rng)
    path = tmp_path / "m.json"
    path.write_text(json.dumps([[float(x) for x in row] for row in m]))
    out = tmp_path / "a.json"
    code = run_cli(["companion", "--matrix", str(path), "--json", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert set(payload) == {"a", "residual", "kernel_dim"}
    assert payload["residual"] < 1e-9
    assert payload["kernel_dim"] == 2
    a = np.array([float(s) for s in payload["a"]])
    assert abs(np.linalg.norm(a) - 1.0) < 1e-9


def test_companion_cli_exact_matrix(tmp_path):
    # identity matrix as exact strings
    rows = [["1" if i == j else "0" for j in range(8)] for i in range(8)]
    path = tmp_path / "id.json"
    path.write_text(json.dumps({"rows": rows}))
    out = tmp_path / "a.json"
    assert run_cli(["companion", "--matrix", str(path), "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["a"][0] in ("1", "-1")
    assert payload["residual"] == 0.0


def test_chern_cli(tmp_path, capsys):
    code = run_cli(["chern", "--lemma22"])
    assert code == 0
    text = capsys.readouterr().out
    assert "euler number: 1" in text
    out = tmp_path / "chern.json"
    assert run_cli(["chern", "--lemma22", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["euler_number"] == 1
    assert payload["c2_normal"] == "a^2"
    assert run_cli(["chern"]) == 2


def test_homotopy_cli(tmp_path, capsys):
    assert run_cli(["homotopy", "--space", "s6", "--k", "1"]) == 0
    assert "ℤ/2" in capsys.readouterr().out
    out = tmp_path / "h.json"
    assert run_cli(["homotopy", "--space", "xg", "--genus", "3", "--k", "2",
                    "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["group"] == "ℤ/2"
    assert run_cli(["homotopy", "--space", "xg", "--k", "2"]) == 2


def test_homotopy_cli_with_table(tmp_path, capsys):
    table = tmp_path / "pi7.csv"
    table.write_text("m,group,source\n4,Z/2,user\n10,Z/24 (+) Z/5,user\n")
    assert run_cli(["homotopy", "--space", "s6", "--k", "4",
                    "--table", str(table)]) == 0
    assert "ℤ/2 ⊕ π_10(S⁷)" not in capsys.readouterr().out  # pi_10 resolves too


def test_recover_cli(tmp_path, capsys):
    from fractions import Fraction as F
    x = Octonion([F(3, 5), 0, F(4, 5), 0, 0, 0, 0, 0])
    j = j_from_octonion(x)
    path = tmp_path / "j.json"
    path.write_text(json.dumps(j.to_strings()))
    out = tmp_path / "x.json"
    assert run_cli(["recover", "--structure", str(path), "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["round_trip_distance"] == 0.0
    rec = Octonion.from_strings(payload["x"])
    from sixsphere.cstruct import equivalent
    assert equivalent(rec, x)


def test_verify_list(capsys):
    assert run_cli(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    for name in ("octonion-axioms", "moufang", "prop21", "lemma22", "prop31",
                 "lemma34", "thm33-lift", "prop41", "prop42", "degrees",
                 "homotopy-tables"):
        assert name in out


def test_verify_failure_exit_code(monkeypatch):
    def failing(samples, mode, seed, tol, table=None):
        return 1, [{"kind": "synthetic"}], None

    monkeypatch.setitem(suites.SUITES, "moufang", failing)
    assert run_cli(["verify", "--suite", "moufang"]) == 1

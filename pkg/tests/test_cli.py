from __future__ import annotations

import json

import pytest

from minuscule import cli


def _report(capsys, *argv):
    code = cli.main(["verify", *argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_weights_report_has_triples_count(capsys):
    code, rep = _report(capsys, "weights")
    by_id = {c["check_id"]: c for c in rep["checks"]}
    assert by_id["triples.count"]["expected"] == "45"
    assert by_id["triples.count"]["verdict"] == "pass"
    assert set(rep) == {"version", "timestamp", "checks", "summary"}
    # the transcribed delta is not a root, so this suite has an honest failure
    assert by_id["triples.words.mu_double_prime"]["verdict"] == "fail"
    assert by_id["triples.words.delta_repair"]["verdict"] == "pass"
    assert code == 1


def test_report_is_canonical(capsys):
    code, rep = _report(capsys, "roots")
    ids = [c["check_id"] for c in rep["checks"]]
    assert ids == sorted(ids) and len(ids) == len(set(ids))
    counts = {k: sum(c["verdict"] == v for c in rep["checks"]) for k, v in (("pass", "pass"), ("fail", "fail"), ("assumptions", "assumption-unchecked"))}
    assert rep["summary"] == {k: str(v) for k, v in counts.items()}
    assert all(isinstance(v, str) for c in rep["checks"] for v in c.values())
    assert all("elapsed_ms" not in c for c in rep["checks"])
    assert code == 0


def test_timings_flag(capsys):
    _, rep = _report(capsys, "roots", "--timings")
    assert all(c["elapsed_ms"].isdigit() for c in rep["checks"])


def test_text_summary_line(capsys):
    code = cli.main(["verify", "sl2"])
    out = capsys.readouterr().out
    assert out.strip().splitlines()[-1] == "6 pass / 0 fail / 0 assumptions"
    assert code == 0


def test_assumptions_do_not_fail(capsys):
    code, rep = _report(capsys, "exclusion")
    assert rep["summary"]["fail"] == "0"
    assert int(rep["summary"]["assumptions"]) >= 1
    assert code == 0


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code = cli.main(["verify", "sl2", "--format", "json", "--out", str(path)])
    rep = json.loads(path.read_text())
    assert rep["summary"]["pass"] == "6"
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [["verify", "bogus"], ["verify"], ["frobnicate"], ["verify", "roots", "--format", "xml"], ["verify", "roots", "--max-dim", "x"]],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code != 0


@pytest.mark.parametrize("argv", [["verify", "irreps", "--max-dim", "0"], ["verify", "seedsearch", "--seed-p", "149"], ["verify", "seedsearch", "--cap", "0"]])
def test_bad_values(argv, capsys):
    assert cli.main(argv) == 2


def test_seed_override(capsys):
    code, rep = _report(capsys, "seedsearch", "--seed-l", "41")
    by_id = {c["check_id"]: c for c in rep["checks"]}
    assert by_id["seed.torus.override"]["verdict"] == "pass"
    assert by_id["seed.constraints"]["verdict"] == "pass"


def test_seed_override_infeasible(capsys):
    _, rep = _report(capsys, "seedsearch", "--seed-l", "31", "--seed-p", "311")
    by_id = {c["check_id"]: c for c in rep["checks"]}
    assert by_id["seed.torus.override"]["verdict"] == "fail"


def test_encode():
    from fractions import Fraction

    assert cli.encode(Fraction(1, 3)) == "1/3"
    assert cli.encode((True, None, 10**40)) == "[true, none, " + str(10**40) + "]"
    assert cli.encode({2: "a", 1: "b"}) == "{1: b, 2: a}"
    with pytest.raises(TypeError):
        cli.encode(object())


def test_exit_status_is_function_of_counts():
    assert cli.exit_status({"pass": "3", "fail": "0", "assumptions": "2"}) == 0
    assert cli.exit_status({"pass": "3", "fail": "1", "assumptions": "0"}) == 1

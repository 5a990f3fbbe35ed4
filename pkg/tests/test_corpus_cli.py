import json
import subprocess
import sys

import pytest

from germlab import (
    INFINITE,
    PrimeField,
    RunConfig,
    analyze_entry,
    bundled_corpus,
    emit_csv,
    emit_json,
    entry_input,
    load_corpus,
    parse_entry,
    reports_from_json,
    run_corpus,
)

A2_TEXT = "name = A2\nvars = x, y\nf = x^3 + y^2\nexpect_mu = 2\nexpect_tau = 2\nexpect_e_crit = 2\nexpect_icis = true\n"


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "germlab", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


def test_bundled_corpus(corpus_entries):
    names = [e.name for e in corpus_entries]
    assert len(names) == 21
    assert len(set(names)) == len(names)
    assert {"A1", "E8", "SC_quadrics", "smooth_line"} <= set(names)
    by_name = {e.name: e for e in corpus_entries}
    assert by_name["cylinder"].expect_tau == INFINITE
    assert by_name["E8"].tags == ("ADE", "plane-curve", "quasihomogeneous")


def test_load_corpus(tmp_path):
    target = tmp_path / "one.corpus"
    target.write_text(A2_TEXT)
    entries = load_corpus(target)
    assert len(entries) == 1 and entries[0].name == "A2"
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "missing.corpus")


def test_entry_input_field():
    entry = parse_entry(A2_TEXT)
    s = entry_input(entry, PrimeField(7))
    assert s.context.field == PrimeField(7)
    assert s.k == 1 and s.n == 1
    assert entry_input(entry).context.field.characteristic == 0


def test_analyze_entry():
    report = analyze_entry(parse_entry(A2_TEXT), RunConfig())
    assert report.verdict == "ok"
    assert (report.mu, report.tau, report.e_crit_samuel) == (2, 2, 2)
    assert report.e_crit_generic == 2 and report.draws_agree
    assert {
        "expect_mu",
        "expect_tau",
        "expect_e_crit",
        "expect_icis",
        "bounds_critical",
        "bounds_fiber",
        "milnor_le_bound",
        "jet_tjurina",
        "jet_dimension",
    } <= set(report.checks)
    assert all(v.ok is not False for v in report.checks.values())
    assert report.timings  # measured, but never serialized


def test_run_corpus_exit_codes(corpus_entries):
    _, code = run_corpus([], RunConfig())
    assert code == 2

    doctored = parse_entry(A2_TEXT.replace("expect_mu = 2", "expect_mu = 99"))
    reports, code = run_corpus([doctored], RunConfig())
    assert code == 1
    assert reports[0].verdict == "fail"
    assert reports[0].checks["expect_mu"].ok is False

    starved, code = run_corpus([parse_entry(A2_TEXT)], RunConfig(step_budget=1))
    assert code == 3
    assert starved[0].verdict == "error"
    assert "budget" in starved[0].error

    good, code = run_corpus([parse_entry(A2_TEXT)], RunConfig())
    assert code == 0 and good[0].verdict == "ok"


def test_json_deterministic(corpus_entries):
    config = RunConfig(checks=("inequality",))
    subset = [e for e in corpus_entries if e.name in {"A1", "D4", "SC_quadrics"}]
    first, _ = run_corpus(subset, config)
    second, _ = run_corpus(subset, config)
    assert emit_json(first, config) == emit_json(second, config)

    parallel, _ = run_corpus(subset, RunConfig(checks=("inequality",), jobs=2))
    assert emit_json(parallel, config) == emit_json(first, config)


def test_json_round_trip(corpus_entries):
    config = RunConfig(checks=())
    subset = [e for e in corpus_entries if e.name in {"A1", "cylinder"}]
    reports, _ = run_corpus(subset, config)
    payload = emit_json(reports, config)
    data = json.loads(payload)
    assert data["field"] == "QQ" and data["seed"] == 0
    assert [e["name"] for e in data["entries"]] == ["A1", "cylinder"]
    assert data["entries"][1]["tau"] == "infinite"

    revived = reports_from_json(payload)
    assert revived[1].tau == INFINITE
    assert [r.verdict for r in revived] == [r.verdict for r in reports]
    assert emit_json(revived, config) == payload


def test_csv_output(corpus_entries):
    config = RunConfig(checks=())
    subset = [e for e in corpus_entries if e.name in {"A1", "cylinder"}]
    reports, _ = run_corpus(subset, config)
    lines = emit_csv(reports).decode().splitlines()
    assert lines[0] == "name,n,k,icis,mu,tau,e_crit,ratio,verdict"
    assert lines[1] == "A1,1,1,true,1,1,1,1.0,ok"
    assert lines[2] == "cylinder,2,1,false,,infinite,,,ok"


def test_prime_field_matches_rationals(corpus_entries):
    subset = [e for e in corpus_entries if e.name in {"E7", "SC_cusps"}]
    over_q, _ = run_corpus(subset, RunConfig(checks=()))
    over_p, _ = run_corpus(subset, RunConfig(field_char=32003, checks=()))
    for a, b in zip(over_q, over_p):
        assert (a.mu, a.tau, a.e_crit_samuel) == (b.mu, b.tau, b.e_crit_samuel)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(field_char=4)
    with pytest.raises(ValueError):
        RunConfig(field_char=2)
    with pytest.raises(ValueError):
        RunConfig(window=0)
    with pytest.raises(ValueError):
        RunConfig(checks=("bounds", "nope"))
    with pytest.raises(ValueError):
        RunConfig(jobs=0)


def test_cli_csv_stdout(tmp_path):
    target = tmp_path / "a2.corpus"
    target.write_text(A2_TEXT)
    proc = run_cli(str(target), "--format", "csv")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("A2,1,1,true,2,2,2")
    assert "1 entries:" in proc.stderr


def test_cli_out_file(tmp_path):
    target = tmp_path / "a2.corpus"
    target.write_text(A2_TEXT)
    out = tmp_path / "report.json"
    proc = run_cli(str(target), "--out", str(out), "--checks", "bounds")
    assert proc.returncode == 0
    data = json.loads(out.read_bytes())
    assert data["checks"] == ["bounds"]
    assert data["entries"][0]["name"] == "A2"


def test_cli_error_paths(tmp_path):
    missing = run_cli(str(tmp_path / "no.corpus"))
    assert missing.returncode == 2
    assert "no.corpus" in missing.stderr

    bad = tmp_path / "bad.corpus"
    bad.write_text("name = a\nvars = x\nf = x ^ -2\n")
    broken = run_cli(str(bad))
    assert broken.returncode == 2
    assert "line 3" in broken.stderr

    usage = run_cli("--field", "2")
    assert usage.returncode == 2
    assert "field" in usage.stderr


def test_cli_bundled_default():
    proc = run_cli("--checks", "inequality", "--format", "csv")
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 22  # header + 21 bundled entries

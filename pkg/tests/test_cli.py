import csv
import json

import pytest

from qrdet.cli import main
from qrdet.sweep import SweepSpec, iter_records, parse_range, sweep_points, write_report


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, printed", [(("2", "15"), "1"), (("1", "9"), "1"), (("-1", "7"), "-1"), (("6", "3"), "0")])
def test_jacobi_verb(capsys, argv, printed):
    code, out, _ = run(capsys, "jacobi", *argv)
    assert code == 0 and out.strip() == printed


def test_jacobi_even_modulus_is_usage_error(capsys):
    code, _, err = run(capsys, "jacobi", "2", "4")
    assert code == 2 and "odd" in err


def test_check_thm11(capsys):
    code, out, _ = run(capsys, "check", "thm11", "--n", "15", "--d", "1")
    rec = json.loads(out)
    assert code == 0
    assert rec["status"] == "PASS" and rec["theorem"] == "THM11"
    assert rec["params"] == {"n": "15", "d": "1"}


def test_check_thm13_witness(capsys):
    code, out, _ = run(capsys, "check", "thm13", "--p", "5", "--c", "1", "--d", "1")
    assert code == 0
    assert json.loads(out)["witness"]["det_mod_p"] == "3"


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "thm12", "--n", "2", "--c", "0", "--d", "1"),
        ("check", "thm12", "--n", "4", "--c", "0"),
        ("check", "nosuch", "--n", "4"),
        ("sweep", "thm11", "--n", "5..9", "--d", "1", "--sampling", "random"),
        ("sweep", "thm11", "--n", "5..9", "--d", "1", "--sampling", "random:3"),
        ("sweep", "thm11", "--n", "5..9", "--p", "5"),
        ("sweep", "thm31", "--n", "2..3"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_check_fail_exit_code(capsys, monkeypatch):
    from qrdet import sweep, verify

    def broken(d):
        rec = verify.check_remark11(d)
        return verify.VerificationRecord(rec.theorem, rec.params, verify.Status.FAIL, rec.witness)

    monkeypatch.setitem(sweep.CHECKS, "rem11", sweep.CheckInfo(broken, ("d",)))
    code, out, _ = run(capsys, "check", "rem11", "--d", "1")
    assert code == 1 and json.loads(out)["status"] == "FAIL"


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("-2..2") == [-2, -1, 0, 1, 2]
    assert parse_range("5..11:2") == [5, 7, 9, 11]
    assert parse_range("1,4..5,9") == [1, 4, 5, 9]
    with pytest.raises(ValueError):
        parse_range("1..5:0")
    with pytest.raises(ValueError):
        parse_range(",")


def test_sweep_thm11_report(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    code, stdout, _ = run(capsys, "sweep", "thm11", "--n", "5..21", "--d=-2..2", "--out", str(out))
    lines = out.read_text().splitlines()
    recs = [json.loads(line) for line in lines]
    assert code == 0
    # even n are outside the hypothesis and become SKIP
    assert stdout.startswith("PASS=45 FAIL=0 SKIP=40 ")
    assert len(recs) == 85
    assert set(recs[0]) == {"theorem", "params", "status", "witness"}
    assert [r["params"]["n"] for r in recs[:6]] == ["5"] * 5 + ["6"]
    assert all(isinstance(v, str) for r in recs for v in {**r["params"], **r["witness"]}.values())


def test_sweep_thm13_counts_excluded_points(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    code, stdout, _ = run(capsys, "sweep", "thm13", "--p", "1..13", "--out", str(out))
    # odd primes 3..13 are kept; p | cd points among p^2 residue pairs number 2p - 1
    primes = [3, 5, 7, 11, 13]
    passed = sum((p - 1) ** 2 for p in primes)
    skipped = sum(2 * p - 1 for p in primes)
    assert code == 0
    assert stdout.startswith(f"PASS={passed} FAIL=0 SKIP={skipped} ")
    assert len(out.read_text().splitlines()) == passed + skipped


def test_sweep_csv(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, _, _ = run(
        capsys, "sweep", "thm31", "--n", "2..4", "--sampling", "random:5", "--seed", "9", "--out", str(out), "--format", "csv"
    )
    rows = list(csv.DictReader(out.open()))
    assert code == 0 and len(rows) == 15
    assert {"theorem", "status", "params.n", "params.seed", "witness.lhs", "witness.rhs"} <= set(rows[0])
    assert all(r["witness.lhs"] == r["witness.rhs"] for r in rows)


def test_sweep_thm31_explicit_seed_range(capsys):
    code, out, err = run(capsys, "sweep", "thm31", "--n", "2..8", "--seed", "1..25")
    assert code == 0
    assert len(out.splitlines()) == 7 * 25
    assert err.startswith("PASS=175 FAIL=0 SKIP=0")


def test_sweep_timing_flag(capsys):
    _, out, _ = run(capsys, "sweep", "lem52", "--p", "5..13", "--timing")
    assert all("elapsed_us" in json.loads(line) for line in out.splitlines())


def test_sweep_unwritable_output(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "rem11", "--d", "1", "--out", str(tmp_path / "missing" / "x.jsonl"))
    assert code == 2 and "cannot write" in err


def test_sweep_fail_exit_code(capsys, monkeypatch):
    from qrdet import sweep, verify

    def flaky(d):
        rec = verify.check_remark11(d)
        status = verify.Status.FAIL if d == 2 else rec.status
        return verify.VerificationRecord(rec.theorem, rec.params, status, rec.witness)

    monkeypatch.setitem(sweep.CHECKS, "rem11", sweep.CheckInfo(flaky, ("d",)))
    code, _, err = run(capsys, "sweep", "rem11", "--d", "0..4", "--jobs", "1")
    assert code == 1 and err.startswith("PASS=4 FAIL=1 SKIP=0")


def test_reports_identical_across_jobs(tmp_path, capsys):
    paths = []
    for jobs in ("1", "3"):
        path = tmp_path / f"r{jobs}.jsonl"
        run(capsys, "sweep", "thm13", "--p", "5..23", "--sampling", "random:30", "--seed", "4", "--jobs", jobs, "--out", str(path))
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_jobs_env_variable(monkeypatch):
    from qrdet.sweep import default_jobs

    monkeypatch.setenv("QRDET_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.delenv("QRDET_JOBS")
    assert default_jobs() >= 1


def test_random_sampling_is_seeded():
    spec = SweepSpec("thm13", {"p": [11, 13]}, ("random", 10), seed=5)
    again = SweepSpec("thm13", {"p": [11, 13]}, ("random", 10), seed=5)
    other = SweepSpec("thm13", {"p": [11, 13]}, ("random", 10), seed=6)
    assert list(sweep_points(spec)) == list(sweep_points(again))
    assert list(sweep_points(spec)) != list(sweep_points(other))
    with pytest.raises(ValueError):
        SweepSpec("thm13", {"p": [11]}, ("random", 10))


def test_summary_counts_match_records():
    import io

    spec = SweepSpec("thm13", {"p": list(range(3, 20))})
    recs = list(iter_records(spec))
    s = write_report(recs, io.StringIO())
    assert s.total == len(recs)
    assert s.passed == sum(r.passed for r in recs)


def test_prime_parameter_domains():
    assert [pt[0] for pt in sweep_points(SweepSpec("lem52", {"p": list(range(1, 20))}))] == [3, 5, 7, 11, 13, 17, 19]
    lem21 = {pt[0] for pt in sweep_points(SweepSpec("lem21", {"p": list(range(1, 8))}))}
    assert lem21 == {2, 3, 5, 7}

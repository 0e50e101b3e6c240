"""The acceptance suite: each criterion runs a full sweep and returns (ok, detail).

Shared by ``qrdet selftest`` and ``tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import time
from fractions import Fraction

from .exactla import det_bareiss
from .identities import Family, FamilyParams, build_family, small_a, small_b_normalized
from .numtheory import product_factorials, product_odd_factorials
from .sweep import SweepSpec, Summary, iter_records, write_report
from .verify import Status, check_eqP, check_thm31

THM13_RANDOM_SEED = 20131
THM13_RANDOM_COUNT = 200


def _sweep(spec: SweepSpec, jobs: int = 1) -> tuple[Summary, list]:
    recs = list(iter_records(spec, jobs))
    s = Summary()
    for r in recs:
        s.add(r)
    return s, recs


def _all_pass(spec, jobs=1, allow_skip=False):
    s, recs = _sweep(spec, jobs)
    bad = [r for r in recs if r.status is Status.FAIL or (r.status is Status.SKIP and not allow_skip)]
    detail = f"{s.line().rsplit(' ', 1)[0]}"
    if bad:
        detail += f" first offender {bad[0].theorem.value} {bad[0].params}"
    return not bad and s.passed > 0, detail


def criterion_1(jobs=1):
    """thm11 for odd 5 <= n <= 151, -6 <= d <= 6."""
    return _all_pass(SweepSpec("thm11", {"n": list(range(5, 152, 2)), "d": list(range(-6, 7))}), jobs)


def criterion_2(jobs=1):
    return _all_pass(SweepSpec("rem11", {"d": list(range(-10, 11))}), jobs)


def criterion_3(jobs=1):
    ds = [d for d in range(-5, 6) if d]
    cs = list(range(-4, 5))
    ok, detail = _all_pass(SweepSpec("thm12", {"n": list(range(3, 13)), "c": cs, "d": ds}), jobs)
    mismatches = 0
    for d in ds:
        for c in cs:
            for n in (2, 3, 4):
                a_n = det_bareiss(build_family(FamilyParams(Family.A_N, n, d, c)))
                mismatches += a_n != small_a(n, c, d)
        for n in (2, 3, 4, 5):
            b_n = det_bareiss(build_family(FamilyParams(Family.B_N, n, d)))
            den = d ** (n * (n - 1) // 2) * 2 * product_factorials(n) * product_odd_factorials(n)
            mismatches += Fraction(b_n, den) != small_b_normalized(n, d)
    return ok and mismatches == 0, f"{detail}; small-n polynomial mismatches={mismatches}"


def criterion_4(jobs=1):
    """200 seeded (x, y) pairs with lengths cycling through 1..8."""
    recs = [check_thm31(1 + (s - 1) % 8, s) for s in range(1, 201)]
    bad = [r.params for r in recs if not r.passed]
    return not bad, f"{len(recs) - len(bad)}/200 equal" + (f"; first offender {bad[0]}" if bad else "")


def criterion_5(jobs=1):
    """100 seeded polynomials with n cycling through 1..9, plus |(i+j)^(n-1)| for n <= 10."""
    recs = [check_eqP(1 + (s - 1) % 9, s) for s in range(1, 101)]
    special = [check_eqP(n, 0) for n in range(1, 11)]
    bad = [r.params for r in recs + special if not r.passed]
    lowered = sum(1 for r in recs if r.witness["a_top"] == 0)
    detail = f"random {sum(r.passed for r in recs)}/100 ({lowered} with a_top = 0), special {sum(r.passed for r in special)}/10"
    return not bad, detail + (f"; first offender {bad[0]}" if bad else "")


def criterion_6_specs():
    exhaustive = SweepSpec("thm13", {"p": list(range(5, 38))})
    sampled = SweepSpec(
        "thm13",
        {"p": list(range(41, 152))},
        sampling=("random", THM13_RANDOM_COUNT),
        seed=THM13_RANDOM_SEED,
    )
    return exhaustive, sampled


def criterion_6_report(jobs=1) -> tuple[bytes, Summary, list]:
    """JSONL report of both thm13 sweeps, concatenated in canonical order."""
    buf = io.StringIO()
    total = Summary()
    bad = []
    t0 = time.perf_counter()
    for spec in criterion_6_specs():
        recs = list(iter_records(spec, jobs))
        write_report(recs, buf, "jsonl")
        for r in recs:
            total.add(r)
            p, c, d = r.params["p"], r.params["c"], r.params["d"]
            if r.status is Status.FAIL or (r.status is Status.SKIP and (c * d) % p):
                bad.append(r.params)
    total.elapsed = time.perf_counter() - t0
    return buf.getvalue().encode(), total, bad


def criterion_6(jobs=1, report=None):
    _, s, bad = report or criterion_6_report(jobs)
    detail = s.line().rsplit(" ", 1)[0]
    return not bad and s.passed > 0, detail + (f"; first offender {bad[0]}" if bad else "")


def criterion_7(jobs=1):
    ok21, d21 = _all_pass(SweepSpec("lem21", {"p": list(range(2, 51))}), jobs)
    s, recs = _sweep(SweepSpec("lem52", {"p": list(range(3, 1001))}), jobs)
    ok52 = all(r.passed for r in recs if r.params["p"] % 4 == 1) and s.failed == 0 and s.passed > 0
    return ok21 and ok52, f"lem21: {d21}; lem52: PASS={s.passed} FAIL={s.failed}"


def criterion_8(jobs=1):
    return _all_pass(SweepSpec("proofcong", {"p": list(range(5, 51))}), jobs)


def criterion_9(jobs=1):
    return _all_pass(SweepSpec("s0", {"p": list(range(3, 61))}), jobs)


def criterion_10(jobs=1, report=None):
    first = (report or criterion_6_report(1))[0]
    second = criterion_6_report(8)[0]
    return first == second, f"{len(first)} bytes, identical={first == second}"


CRITERIA = [
    (1, "thm11: det vanishes mod n", criterion_1),
    (2, "rem11: n = 3 values", criterion_2),
    (3, "thm12: normalised ratios and small-n polynomials", criterion_3),
    (4, "thm31: power-sum product form", criterion_4),
    (5, "eqp: leading-coefficient identity", criterion_5),
    (6, "thm13: residue symbol table", criterion_6),
    (7, "lem21 and lem52", criterion_7),
    (8, "proofcong: row-combination congruence", criterion_8),
    (9, "s0: symbol or vanishing", criterion_9),
    (10, "Report determinism across --jobs", criterion_10),
]


def format_line(number: int, title: str, ok: bool, detail: str, seconds: float) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title}: {detail} ({seconds:.1f}s)"


def run_all(jobs: int = 1, echo=print) -> bool:
    report = None
    all_ok = True
    for number, title, fn in CRITERIA:
        t0 = time.perf_counter()
        if number == 6:
            report = criterion_6_report(jobs)
            ok, detail = fn(jobs, report)
        elif number == 10:
            ok, detail = fn(jobs, report if jobs == 1 else None)
        else:
            ok, detail = fn(jobs)
        echo(format_line(number, title, ok, detail, time.perf_counter() - t0))
        all_ok = all_ok and ok
    return all_ok

"""Exit criteria. Each test prints one [PASS]/[FAIL] line, even under output capture."""

import time

import pytest

from qrdet import acceptance

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def thm13_report():
    return acceptance.criterion_6_report(jobs=1)


@pytest.fixture
def report_line(capsys):
    def run(number, fn, *args):
        title = next(t for n, t, _ in acceptance.CRITERIA if n == number)
        t0 = time.perf_counter()
        ok, detail = fn(*args)
        with capsys.disabled():
            print("\n" + acceptance.format_line(number, title, ok, detail, time.perf_counter() - t0))
        assert ok, detail

    return run


def test_criterion_01_thm11_sweep(report_line):
    report_line(1, acceptance.criterion_1)


def test_criterion_02_remark11(report_line):
    report_line(2, acceptance.criterion_2)


def test_criterion_03_thm12_sweep(report_line):
    report_line(3, acceptance.criterion_3)


def test_criterion_04_thm31_oracle(report_line):
    report_line(4, acceptance.criterion_4)


def test_criterion_05_leading_coefficient_identity(report_line):
    report_line(5, acceptance.criterion_5)


def test_criterion_06_thm13(report_line, thm13_report):
    report_line(6, acceptance.criterion_6, 1, thm13_report)


def test_criterion_07_lemmas(report_line):
    report_line(7, acceptance.criterion_7)


def test_criterion_08_row_congruence(report_line):
    report_line(8, acceptance.criterion_8)


def test_criterion_09_s0(report_line):
    report_line(9, acceptance.criterion_9)


def test_criterion_10_determinism(report_line, thm13_report):
    report_line(10, acceptance.criterion_10, 1, thm13_report)

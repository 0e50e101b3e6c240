"""Parameter sweeps over the checkers, with canonical-order report writing."""

from __future__ import annotations

import csv
import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import verify
from .numtheory import is_prime
from .rng import SplitMix64, derive_seed
from .verify import PreconditionError, Status, VerificationRecord

__all__ = [
    "CHECKS",
    "SweepSpec",
    "parse_range",
    "sweep_points",
    "run_point",
    "iter_records",
    "write_report",
    "Summary",
    "default_jobs",
]


@dataclass(frozen=True)
class CheckInfo:
    func: Callable[..., VerificationRecord]
    params: tuple[str, ...]
    # Domain of a parameter when no range is given, as a function of the outer value.
    defaults: dict[str, Callable[[int], list[int]]] = field(default_factory=dict)
    odd_p: bool = True


# Case seeds drawn under random sampling; exhaustive sweeps must list seeds explicitly.
_CASE_SEEDS = range(1, 1 << 32)


def _residues(p):
    return list(range(p))


def _nonzero_residues(p):
    return list(range(1, p))


CHECKS: dict[str, CheckInfo] = {
    "thm11": CheckInfo(verify.check_thm11, ("n", "d")),
    "rem11": CheckInfo(verify.check_remark11, ("d",)),
    "thm12": CheckInfo(verify.check_thm12, ("n", "c", "d")),
    "thm13": CheckInfo(verify.check_thm13, ("p", "c", "d"), {"c": _residues, "d": _residues}),
    "thm31": CheckInfo(verify.check_thm31, ("n", "seed"), {"seed": lambda _: _CASE_SEEDS}),
    "eqp": CheckInfo(verify.check_eqP, ("n", "seed"), {"seed": lambda _: _CASE_SEEDS}),
    "lem21": CheckInfo(
        verify.check_lemma21, ("p", "k"), {"k": lambda p: list(range(3 * (p - 1) + 1))}, odd_p=False
    ),
    "lem52": CheckInfo(verify.check_lemma52, ("p",)),
    "proofcong": CheckInfo(verify.check_proof_congruence, ("p", "d"), {"d": _residues}),
    "s0": CheckInfo(verify.check_s0, ("p", "d"), {"d": _nonzero_residues}),
}


def parse_range(text: str) -> list[int]:
    """Parse ``a``, ``a..b``, ``a..b:step`` or comma-separated mixes of them (inclusive)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, _, rest = part.partition("..")
            hi, _, step = rest.partition(":")
            step_v = int(step) if step else 1
            if step_v <= 0:
                raise ValueError(f"step must be positive in {part!r}")
            out.extend(range(int(lo), int(hi) + 1, step_v))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep.

    ``ranges`` maps parameter names to explicit value lists. A parameter
    named ``p`` only takes its prime values (odd primes, except for the
    power-sum lemma). Parameters missing from
    ``ranges`` fall back to the checker's default domain, which depends on
    the first (outer) parameter. ``sampling`` is ``"exhaustive"`` or
    ``("random", count)``; random sampling draws ``count`` inner points per
    outer value and requires ``seed``.
    """

    theorem: str
    ranges: dict[str, list[int]]
    sampling: object = "exhaustive"
    seed: int | None = None

    def __post_init__(self):
        if self.theorem not in CHECKS:
            raise ValueError(f"unknown theorem {self.theorem!r}; choose from {sorted(CHECKS)}")
        names = CHECKS[self.theorem].params
        unknown = set(self.ranges) - set(names)
        if unknown:
            raise ValueError(f"{self.theorem} takes parameters {names}, not {sorted(unknown)}")
        if self.sampling != "exhaustive":
            kind, count = self.sampling
            if kind != "random" or count < 1:
                raise ValueError(f"bad sampling {self.sampling!r}")
            if self.seed is None:
                raise ValueError("random sampling requires an explicit seed")


def _domain(info: CheckInfo, name: str, ranges, outer: int, exhaustive: bool = True):
    if name in ranges:
        values = list(ranges[name])
    elif name in info.defaults:
        values = info.defaults[name](outer)
        if exhaustive and values is _CASE_SEEDS:
            raise ValueError("exhaustive sweeps need an explicit seed range")
    else:
        raise ValueError(f"no range given for parameter {name!r}")
    if name == "p":
        lo = 3 if info.odd_p else 2
        values = [v for v in values if lo <= v < 1 << 64 and is_prime(v)]
    return values


def sweep_points(spec: SweepSpec) -> Iterator[tuple[int, ...]]:
    """Parameter tuples in canonical order: outer value first, then inner values lexicographically."""
    info = CHECKS[spec.theorem]
    outer_name, inner_names = info.params[0], info.params[1:]
    exhaustive = spec.sampling == "exhaustive"
    for outer in _domain(info, outer_name, spec.ranges, 0):
        inner = [_domain(info, name, spec.ranges, outer, exhaustive) for name in inner_names]
        if exhaustive:
            for rest in itertools.product(*inner):
                yield (outer, *rest)
        else:
            _, count = spec.sampling
            if any(not values for values in inner):
                continue
            rng = SplitMix64(derive_seed(spec.seed, outer))
            for _ in range(count):
                yield (outer, *(rng.choice(values) for values in inner))


def run_point(theorem: str, point: tuple[int, ...]) -> VerificationRecord:
    info = CHECKS[theorem]
    try:
        return info.func(*point)
    except PreconditionError:
        return VerificationRecord(verify.TheoremId[theorem.upper()], dict(zip(info.params, point)), Status.SKIP)


def _run_packed(args):
    return run_point(*args)


def default_jobs() -> int:
    env = os.environ.get("QRDET_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def iter_records(spec: SweepSpec, jobs: int = 1) -> Iterator[VerificationRecord]:
    """Evaluate every point; records come out in canonical order whatever ``jobs`` is."""
    work = ((spec.theorem, pt) for pt in sweep_points(spec))
    if jobs <= 1:
        yield from map(_run_packed, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # Executor.map preserves input order.
        yield from pool.map(_run_packed, work, chunksize=16)


@dataclass
class Summary:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    elapsed: float = 0.0

    def add(self, rec: VerificationRecord):
        if rec.status is Status.PASS:
            self.passed += 1
        elif rec.status is Status.FAIL:
            self.failed += 1
        else:
            self.skipped += 1

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped

    def line(self) -> str:
        return f"PASS={self.passed} FAIL={self.failed} SKIP={self.skipped} elapsed={self.elapsed:.3f}s"


def write_report(records: Iterable[VerificationRecord], fh, fmt: str = "jsonl", timing: bool = False) -> Summary:
    """Stream records to ``fh`` and tally them.

    JSONL is written one record per line as records arrive. CSV needs the
    union of parameter and witness keys for its header, so it buffers.
    """
    summary = Summary()
    t0 = time.perf_counter()
    if fmt == "jsonl":
        for rec in records:
            summary.add(rec)
            fh.write(json.dumps(rec.to_dict(timing), separators=(",", ":")) + "\n")
    elif fmt == "csv":
        rows = []
        param_keys: dict[str, None] = {}
        witness_keys: dict[str, None] = {}
        for rec in records:
            summary.add(rec)
            param_keys.update(dict.fromkeys(rec.params))
            witness_keys.update(dict.fromkeys(rec.witness))
            rows.append(rec)
        header = ["theorem", "status"]
        header += [f"params.{k}" for k in param_keys]
        header += [f"witness.{k}" for k in witness_keys]
        if timing:
            header.append("elapsed_us")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for rec in rows:
            row = [rec.theorem.value, rec.status.value]
            row += [str(rec.params.get(k, "")) for k in param_keys]
            row += [str(rec.witness.get(k, "")) for k in witness_keys]
            if timing:
                row.append(rec.elapsed_us)
            writer.writerow(row)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    summary.elapsed = time.perf_counter() - t0
    return summary

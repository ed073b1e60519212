"""Range sweeps over (p, h) pairs with oracle verdicts attached.

Each scanned pair carries the degree of the predictor polynomial, its
factor profile, and whichever h- divisibility oracle the configuration
selects; `consistent` is the biconditional "degree != 0 iff h divides
h-".  Work is partitioned by p so one power table and one determinant
elimination amortize across all h, and records are emitted in a fixed
(p, h, v) order regardless of worker count, so output is byte-stable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from .errors import ParameterError
from .ffpoly import ModPoly, factorize, poly_gcd, reduce
from .hminus import exact_hminus, hminus_valuation, irregular_index
from .primes import odd_primes_in_range, primes_in_range
from .stickelberger import (
    DEFAULT_ROOT_ENUMERATION_BOUND,
    all_primitive_roots,
    build_P,
    build_Q,
    build_power_table,
    smallest_primitive_root,
)

ORACLE_MODES = ("exact", "valuation", "none")
ROOT_MODES = ("smallest", "all")
H_MODES = ("absolute", "p-squared")


@dataclass(frozen=True)
class ScanConfig:
    p_min: int
    p_max: int
    h_max: int | None = None
    h_mode: str = "absolute"  # "absolute" uses h_max; "p-squared" means h < p*p
    oracle: str = "exact"
    roots: str = "smallest"
    threads: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.p_min < 3:
            raise ParameterError("p_min must be at least 3")
        if self.p_max < self.p_min:
            raise ParameterError(f"empty p range [{self.p_min}, {self.p_max}]")
        if self.h_mode not in H_MODES:
            raise ParameterError(f"h_mode must be one of {H_MODES}, got {self.h_mode!r}")
        if self.h_mode == "absolute" and (self.h_max is None or self.h_max < 3):
            raise ParameterError("h_max >= 3 required when h_mode is 'absolute'")
        if self.oracle not in ORACLE_MODES:
            raise ParameterError(f"oracle must be one of {ORACLE_MODES}, got {self.oracle!r}")
        if self.roots not in ROOT_MODES:
            raise ParameterError(f"roots must be one of {ROOT_MODES}, got {self.roots!r}")
        if self.threads < 1:
            raise ParameterError("threads must be at least 1")


@dataclass(frozen=True)
class ScanRecord:
    p: int
    h: int
    v: int
    degree: int
    factor_summary: tuple[tuple[int, int], ...]  # (degree, multiplicity) pairs
    oracle: str  # exact | valuation | irregular | none | skipped
    h_divides_hminus: bool | None
    valuation: int | None
    consistent: bool | None
    repeated_factors: bool
    reference_rank: int | None
    rank_match: bool | None


@dataclass
class HuntReport:
    total: int = 0
    consistent_count: int = 0
    inconsistent_count: int = 0
    skipped_count: int = 0
    violations: list[ScanRecord] = field(default_factory=list)
    rank_mismatches: list[ScanRecord] = field(default_factory=list)
    repeated_factor_records: list[ScanRecord] = field(default_factory=list)

    @property
    def reconciled(self) -> bool:
        return self.total == self.consistent_count + self.inconsistent_count + self.skipped_count


def _int_valuation(n: int, h: int) -> int:
    v = 0
    while n % h == 0:
        n //= h
        v += 1
    return v


def _resolve_oracle(p: int, h: int, mode: str, exact_value: int | None):
    """Return (tag, h_divides_hminus, valuation) for one pair, never raising."""
    if mode == "none":
        return ("none", None, None)
    if mode == "exact":
        if exact_value is None:
            return ("skipped", None, None)
        val = _int_valuation(exact_value, h)
        return ("exact", val > 0, val)
    if h == p:
        try:
            idx = irregular_index(p)
        except ParameterError:
            return ("skipped", None, None)
        return ("irregular", idx > 0, None)
    try:
        res = hminus_valuation(p, h)
    except ParameterError:
        return ("skipped", None, None)
    return ("valuation", res.valuation > 0, res.valuation)


def _records_for_prime(task) -> list[ScanRecord]:
    p, config, reference = task
    if config.h_mode == "p-squared":
        h_hi = p * p - 1
    else:
        h_hi = config.h_max
    hs = odd_primes_in_range(3, h_hi)
    if config.roots == "smallest":
        roots = [smallest_primitive_root(p)]
    else:
        roots = all_primitive_roots(p, bound=max(DEFAULT_ROOT_ENUMERATION_BOUND, p))

    exact_value = None
    if config.oracle == "exact":
        try:
            exact_value = exact_hminus(p).value
        except ParameterError:
            exact_value = None

    tables = {v: build_power_table(p, v) for v in roots}
    p_polys = {v: build_P(tables[v]) for v in roots}
    q_polys = {}
    m = (p - 1) // 2

    records = []
    for h in hs:
        tag, divides, valuation = _resolve_oracle(p, h, config.oracle, exact_value)
        cyclo_half = ModPoly(h, (1,) + (0,) * (m - 1) + (1,))
        for v in roots:
            if h == p:
                if v not in q_polys:
                    q_polys[v] = build_Q(tables[v])
                operand = q_polys[v]
            else:
                operand = p_polys[v]
            dee = poly_gcd(reduce(operand, h), cyclo_half)
            seed = ((config.seed * 1_000_003 + p) * 1_000_003 + h) * 1_000_003 + v
            fac = factorize(dee, seed=seed)
            degree = len(dee.coeffs) - 1
            consistent = None if divides is None else ((degree != 0) == divides)
            rank = reference.get((p, h)) if reference else None
            records.append(
                ScanRecord(
                    p=p,
                    h=h,
                    v=v,
                    degree=degree,
                    factor_summary=fac.degree_profile,
                    oracle=tag,
                    h_divides_hminus=divides,
                    valuation=valuation,
                    consistent=consistent,
                    repeated_factors=any(mult > 1 for _, mult in fac.factors),
                    reference_rank=rank,
                    rank_match=None if rank is None else (rank == degree),
                )
            )
    return records


def scan(config: ScanConfig, reference_ranks: dict | None = None) -> Iterator[ScanRecord]:
    """Yield one record per (p, h, v) in deterministic ascending order."""
    ps = [q for q in primes_in_range(max(3, config.p_min), config.p_max) if q % 2 == 1]
    tasks = [(p, config, reference_ranks) for p in ps]
    if config.threads == 1 or len(tasks) <= 1:
        for task in tasks:
            yield from _records_for_prime(task)
        return
    with ProcessPoolExecutor(max_workers=config.threads) as pool:
        for recs in pool.map(_records_for_prime, tasks, chunksize=1):
            yield from recs


def hunt_counterexamples(
    config: ScanConfig,
    reference_ranks: dict | None = None,
    sink: Callable[[ScanRecord], None] | None = None,
) -> HuntReport:
    """Scan and classify: equivalence violations, rank mismatches, repeated factors.

    A violation means the biconditional "degree(D) != 0 iff h | h-" failed
    for a pair whose oracle ran; a rank mismatch means ingested reference
    data disagrees with degree(D) and is a reportable finding, not an error.
    """
    report = HuntReport()
    for rec in scan(config, reference_ranks):
        if sink is not None:
            sink(rec)
        report.total += 1
        if rec.consistent is None:
            report.skipped_count += 1
        elif rec.consistent:
            report.consistent_count += 1
        else:
            report.inconsistent_count += 1
            report.violations.append(rec)
        if rec.rank_match is False:
            report.rank_mismatches.append(rec)
        if rec.repeated_factors:
            report.repeated_factor_records.append(rec)
    return report


def ingest_reference_ranks(source) -> dict[tuple[int, int], int]:
    """Load a `p,h,rank` table; missing file means an empty table.

    Rows are `p,h,rank` decimal integers under a literal `p,h,rank` header;
    rank 0 is allowed and means h does not divide h-.  Malformed rows are
    rejected with their line number.
    """
    path = Path(source)
    if not path.exists():
        return {}
    table: dict[tuple[int, int], int] = {}
    header_seen = False
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        text = line.strip()
        if not text:
            continue
        if not header_seen:
            if text != "p,h,rank":
                raise ParameterError(
                    f"line {lineno}: expected header 'p,h,rank', got {text!r}"
                )
            header_seen = True
            continue
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise ParameterError(f"line {lineno}: malformed row {line!r}")
        try:
            p, h, rank = (int(part) for part in parts)
        except ValueError:
            raise ParameterError(f"line {lineno}: malformed row {line!r}") from None
        if p < 3 or h < 3 or rank < 0:
            raise ParameterError(f"line {lineno}: out-of-range row {line!r}")
        table[(p, h)] = rank
    return table

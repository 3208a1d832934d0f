"""Period distributions over whole parameter families, analytic and exhaustive."""

from __future__ import annotations

import csv
import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, TextIO, Union

from .errors import FamilyMismatch, TooLarge
from .field import PrimeModulus, divisors, euler_phi, modulus
from .generator import IprngParams, measure_period

MAX_BRUTE_N = 512


class Family(enum.Enum):
    AB_ZERO = "ab-zero"
    UNITS = "units"
    ALL = "all"

    def size(self, n: int) -> int:
        return {Family.AB_ZERO: 2 * n * n - n, Family.UNITS: n * (n - 1) ** 2, Family.ALL: n**3}[self]

    def pairs(self, n: int, a: int) -> Iterator[int]:
        """Admissible b values for a given a, ascending."""
        if self is Family.ALL:
            return iter(range(n))
        if self is Family.UNITS:
            return iter(range(1, n)) if a else iter(())
        return iter(range(n)) if a == 0 else iter((0,))

    def a_values(self, n: int) -> range:
        return range(1, n) if self is Family.UNITS else range(n)


class Source(enum.Enum):
    ANALYTIC = "analytic"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class DistributionTable:
    modulus: int
    family: Family
    counts: Dict[int, int]
    source: Source

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class CensusRow(NamedTuple):
    period: int
    analytic_count: Optional[int]
    measured_count: Optional[int]
    match: Optional[bool]


@dataclass
class CensusReport:
    modulus: int
    family: Family
    rows: List[CensusRow] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def mismatches(self) -> List[int]:
        return [row.period for row in self.rows if not row.match]


class ScatterRecord(NamedTuple):
    index: int
    a: int
    b: int
    x0: int
    period: int


def _family(family: Union[str, Family]) -> Family:
    return family if isinstance(family, Family) else Family(family)


def _ab_zero_counts(n: int) -> Counter:
    return Counter({1: n * n + 2 * n - 2, 2: (n - 2) * (n - 1)})


def _units_counts(n: int) -> Counter:
    counts: Counter = Counter()
    counts[1] += (n - 2) * (n - 1)
    counts[n - 1] += (n - 1) ** 2
    for k in divisors(n - 1):
        if k <= 2:
            continue
        classes = euler_phi(k) // 2
        counts[k - 1] += (k - 1) * (n - 1) * classes
        if k < n - 1:
            # x0 budget: N minus the two roots minus the k-1 zero-hitting starts
            counts[k] += (n - k - 1) * (n - 1) * classes
    for k in divisors(n + 1):
        if k <= 2:
            continue
        classes = euler_phi(k) // 2
        counts[k - 1] += (k - 1) * (n - 1) * classes
        if k < n + 1:
            counts[k] += (n - (k - 1)) * (n - 1) * classes
    return counts


def analytic_distribution(n: Union[int, PrimeModulus], family: Union[str, Family]) -> DistributionTable:
    m = modulus(n)
    fam = _family(family)
    nv = m.value
    if fam is Family.AB_ZERO:
        counts = _ab_zero_counts(nv)
    elif fam is Family.UNITS:
        counts = _units_counts(nv)
    else:
        counts = _ab_zero_counts(nv) + _units_counts(nv)
    return DistributionTable(nv, fam, dict(sorted(counts.items())), Source.ANALYTIC)


def achievable_periods(n: Union[int, PrimeModulus]) -> List[int]:
    table = analytic_distribution(n, Family.ALL)
    return [p for p, c in table.counts.items() if c > 0]


def _check_size(nv: int, force_large: bool) -> None:
    if nv > MAX_BRUTE_N and not force_large:
        raise TooLarge(f"exhaustive enumeration at N={nv} exceeds the N <= {MAX_BRUTE_N} guard")


def _slice_periods(nv: int, fam: Family, a: int) -> List[ScatterRecord]:
    out = []
    for b in fam.pairs(nv, a):
        for x0 in range(nv):
            period = measure_period(IprngParams.of(nv, a, b, x0)).period
            out.append(ScatterRecord(-1, a, b, x0, period))
    return out


def _slice_histogram(nv: int, fam: Family, a: int) -> Counter:
    return Counter(rec.period for rec in _slice_periods(nv, fam, a))


def _map_slices(func, nv: int, fam: Family, workers: int) -> Iterator:
    a_values = list(fam.a_values(nv))
    if workers <= 1:
        return (func(nv, fam, a) for a in a_values)
    pool = ProcessPoolExecutor(max_workers=workers)
    results = pool.map(func, [nv] * len(a_values), [fam] * len(a_values), a_values)

    def drain():
        try:
            yield from results
        finally:
            pool.shutdown()

    return drain()


def brute_force_distribution(
    n: Union[int, PrimeModulus], family: Union[str, Family], workers: int = 1, force_large: bool = False
) -> DistributionTable:
    """Histogram of measured periods over every (a, b, x0) in the family.

    The sweep is split by a; per-slice histograms are merged, so the result
    does not depend on ``workers``.
    """
    m = modulus(n)
    fam = _family(family)
    _check_size(m.value, force_large)
    total: Counter = Counter()
    for hist in _map_slices(_slice_histogram, m.value, fam, workers):
        total.update(hist)
    return DistributionTable(m.value, fam, dict(sorted(total.items())), Source.BRUTE_FORCE)


def compare(analytic: DistributionTable, brute: DistributionTable) -> CensusReport:
    if analytic.modulus != brute.modulus or analytic.family is not brute.family:
        raise FamilyMismatch(
            f"cannot compare N={analytic.modulus}/{analytic.family.value} "
            f"with N={brute.modulus}/{brute.family.value}"
        )
    report = CensusReport(analytic.modulus, analytic.family)
    for period in sorted(set(analytic.counts) | set(brute.counts)):
        want = analytic.counts.get(period, 0)
        got = brute.counts.get(period, 0)
        report.rows.append(CensusRow(period, want, got, want == got))
    return report


def analytic_report(table: DistributionTable) -> CensusReport:
    """Report rows carrying only the analytic counts (no verification run)."""
    rows = [CensusRow(p, c, None, None) for p, c in table.counts.items()]
    return CensusReport(table.modulus, table.family, rows)


def scatter_dump(
    n: Union[int, PrimeModulus], family: Union[str, Family], workers: int = 1, force_large: bool = False
) -> Iterator[ScatterRecord]:
    """One record per instance in lexicographic (a, b, x0) order, index from 0."""
    m = modulus(n)
    fam = _family(family)
    _check_size(m.value, force_large)
    index = 0
    for chunk in _map_slices(_slice_periods, m.value, fam, workers):
        for rec in chunk:
            yield rec._replace(index=index)
            index += 1


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_census_csv(report: CensusReport, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["period", "analytic_count", "measured_count", "match"])
    for row in report.rows:
        writer.writerow([_fmt(v) for v in row])


def write_scatter_csv(records: Iterable[ScatterRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "a", "b", "x0", "period"])
    writer.writerows(records)

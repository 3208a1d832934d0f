"""Construct generator parameters that achieve a requested period."""

from __future__ import annotations

from typing import Iterator, List, Union

from .analytic import RootLocation, find_roots, gamma_classes, a_from_gamma, ratio_in_omega
from .census import achievable_periods
from .errors import BadTarget, IprngError
from .field import FpElem, PrimeModulus, modulus
from .generator import IprngParams, measure_period


class VerificationFailed(IprngError):
    """A constructed triple did not measure to its target period."""


class Unachievable(BadTarget):
    def __init__(self, n: int, period: int, achievable: List[int]):
        self.achievable = achievable
        super().__init__(f"period {period} is not achievable for N={n}")


def _fixed_point_candidates(n: int) -> Iterator[IprngParams]:
    # a = 0 collapses every orbit onto b
    for b in range(n):
        for x0 in range(n):
            yield IprngParams.of(n, 0, b, x0)


def _swap_candidates(n: int) -> Iterator[IprngParams]:
    # b = 0, x0 != 0, a != x0^2: x0 and a/x0 alternate
    for x0 in range(1, n):
        for a in range(1, n):
            if a != x0 * x0 % n:
                yield IprngParams.of(n, a, 0, x0)


def _double_root_candidates(n: int) -> Iterator[IprngParams]:
    # f(t) = (t - alpha)^2, x0 != alpha visits every nonzero state but one
    for alpha in range(1, n):
        a, b = -alpha * alpha % n, 2 * alpha % n
        for x0 in range(n):
            if x0 != alpha:
                yield IprngParams.of(n, a, b, x0)


def _ratio_candidates(m: PrimeModulus, k: int, hits_zero: bool) -> Iterator[IprngParams]:
    """Triples whose root ratio has order k, x0 on (or off) the zero-hitting set."""
    n = m.value
    try:
        reps = gamma_classes(m, k)
    except BadTarget:
        return
    for gamma in reps:
        for b in range(1, n):
            a = a_from_gamma(gamma, FpElem(b, m))
            roots = find_roots(m, a, b)
            if roots.location is RootLocation.DOUBLE:
                continue
            for x0 in range(n):
                x = FpElem(x0, m)
                if x == roots.alpha or x == roots.beta:
                    continue
                if ratio_in_omega(roots, x, k) == hits_zero:
                    yield IprngParams(m, a, FpElem(b, m), x)


def _candidates(m: PrimeModulus, period: int) -> Iterator[IprngParams]:
    n = m.value
    if period == 1:
        yield from _fixed_point_candidates(n)
    elif period == 2:
        yield from _swap_candidates(n)
    if period == n - 1:
        yield from _double_root_candidates(n)
    # zero-hitting orbits have period k - 1, zero-free ones period k (k < group order)
    yield from _ratio_candidates(m, period + 1, hits_zero=True)
    if period != n - 1:
        # a primitive ratio leaves no zero-free start outside the two roots
        yield from _ratio_candidates(m, period, hits_zero=False)


def design(n: Union[int, PrimeModulus], period: int, count: int = 1) -> List[IprngParams]:
    """Up to ``count`` distinct triples whose measured period equals ``period``.

    Every triple is checked with measure_period before it is returned.
    Raises Unachievable when no triple of that period exists.
    """
    m = modulus(n)
    achievable = achievable_periods(m)
    if period not in achievable:
        raise Unachievable(m.value, period, achievable)
    found: List[IprngParams] = []
    seen = set()
    for params in _candidates(m, period):
        key = params.as_ints()
        if key in seen:
            continue
        measured = measure_period(params).period
        if measured != period:
            raise VerificationFailed(f"{key[1:]} measured period {measured}, wanted {period}")
        seen.add(key)
        found.append(params)
        if len(found) >= count:
            break
    return found

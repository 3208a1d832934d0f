"""The inversive generator x -> a/x + b over Z_N and its companion LFSR."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from .field import Elem, FpElem, PrimeModulus, modulus


@dataclass(frozen=True)
class IprngParams:
    modulus: PrimeModulus
    a: FpElem
    b: FpElem
    x0: FpElem

    @classmethod
    def of(cls, n: Union[int, PrimeModulus], a: int, b: int, x0: int) -> "IprngParams":
        """Build from plain integers, reducing each mod N."""
        m = modulus(n)
        return cls(m, FpElem(a, m), FpElem(b, m), FpElem(x0, m))

    def with_x0(self, x0: Union[int, FpElem]) -> "IprngParams":
        return IprngParams(self.modulus, self.a, self.b, FpElem(int(x0), self.modulus))

    def as_ints(self) -> Tuple[int, int, int, int]:
        return self.modulus.value, self.a.residue, self.b.residue, self.x0.residue


@dataclass(frozen=True)
class PeriodResult:
    preperiod: int
    period: int
    hits_zero: bool


def step(params: IprngParams, x: FpElem) -> FpElem:
    if not x:
        return params.b
    return params.a * x.inverse() + params.b


def sequence(params: IprngParams, count: int) -> List[FpElem]:
    """x_1 .. x_count."""
    out = []
    x = params.x0
    for _ in range(count):
        x = step(params, x)
        out.append(x)
    return out


@lru_cache(maxsize=64)
def inverse_table(n: int) -> Tuple[int, ...]:
    """inv[x] = x^-1 mod n, with inv[0] = 0 so that a*inv[0] + b == b."""
    table = [0] * n
    table[1] = 1
    for x in range(2, n):
        table[x] = (n - (n // x) * table[n % x] % n) % n
    return tuple(table)


def orbit_structure(n: int, a: int, b: int, x0: int, inv: Tuple[int, ...]) -> Tuple[int, int, bool]:
    """(preperiod, period, hits_zero) on raw residues; inv from inverse_table(n)."""
    seen = [-1] * n
    x, i = x0, 0
    while seen[x] < 0:
        seen[x] = i
        x = (a * inv[x] + b) % n
        i += 1
    start = seen[x]
    hits_zero = seen[0] >= start
    return start, i - start, hits_zero


def measure_period(params: IprngParams) -> PeriodResult:
    """Exact preperiod and period by first-revisit detection over the N states."""
    n, a, b, x0 = params.as_ints()
    pre, per, hz = orbit_structure(n, a, b, x0, inverse_table(n))
    return PeriodResult(pre, per, hz)


def lfsr_sequence(params: IprngParams, count: int) -> List[FpElem]:
    """y_0 .. y_{count-1} of y_{n+2} = b*y_{n+1} + a*y_n with y_0 = 1, y_1 = x_0."""
    ys = [FpElem(1, params.modulus), params.x0][:count]
    while len(ys) < count:
        ys.append(params.b * ys[-1] + params.a * ys[-2])
    return ys


def closed_form_double(alpha: FpElem, x0: FpElem, n: int) -> FpElem:
    """General term of the LFSR when t^2 - b t - a = (t - alpha)^2.

    y_n = alpha^n * (1 + n * (x0/alpha - 1)); satisfies y_0 = 1 and y_1 = x0.
    """
    return alpha**n * (1 + n * (x0 / alpha - 1))


def closed_form_double_as_printed(alpha: FpElem, x0: FpElem, n: int) -> FpElem:
    """alpha^n * (n*x0/alpha - 1) + 1. Kept only to pin that it breaks y_0 = 1."""
    return alpha**n * (n * (x0 / alpha) - 1) + 1


def closed_form_split(alpha: Elem, beta: Elem, x0: FpElem, n: int) -> Elem:
    """General term of the LFSR for distinct roots alpha != beta."""
    return ((x0 - beta) * alpha**n + (alpha - x0) * beta**n) / (alpha - beta)


def check_lemma1(params: IprngParams, horizon: int) -> bool:
    """Check x_n = y_{n+1} / y_n against the orbit while the y prefix stays nonzero.

    The first zero of the x orbit must coincide with the first zero of
    y_1, y_2, ...: x_m = 0 exactly when y_{m+1} = 0.
    """
    xs = [params.x0] + sequence(params, horizon)
    ys = lfsr_sequence(params, horizon + 2)
    for n in range(horizon):
        if not ys[n]:
            break
        if xs[n] != ys[n + 1] / ys[n]:
            return False
        if not ys[n + 1]:
            # first y zero: x_n must be the first zero of the orbit
            return not xs[n] and all(xs[:n])
    first_x_zero = next((m for m in range(horizon) if not xs[m]), None)
    if first_x_zero is None:
        return True
    return not ys[first_x_zero + 1]

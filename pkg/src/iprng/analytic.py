"""Closed-form period prediction for the inversive generator.

Everything follows from the characteristic polynomial f(t) = t^2 - b t - a of
the companion LFSR. With roots alpha, beta and ratio gamma = alpha/beta of
order k, a zero-hitting orbit has period k - 1 and a zero-free orbit has
period k. Whether the orbit hits zero is decided by testing whether
(x0 - alpha)/(x0 - beta) is a power of gamma.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union

from .errors import BadTarget, DegenerateRoots, RootHit
from .field import (
    Elem,
    Fp2Elem,
    FpElem,
    PrimeModulus,
    euler_phi,
    legendre,
    modulus,
    mult_order,
    norm,
    sqrt,
)
from .generator import IprngParams


class RootLocation(enum.Enum):
    SUBFIELD = "SUBFIELD"
    EXTENSION = "EXTENSION"
    DOUBLE = "DOUBLE"


class Tag(enum.Enum):
    A_ZERO = "A_ZERO"
    B_ZERO_FIXED = "B_ZERO_FIXED"
    B_ZERO_SWAP = "B_ZERO_SWAP"
    DOUBLE_ROOT_FIXED = "DOUBLE_ROOT_FIXED"
    DOUBLE_ROOT_FULL = "DOUBLE_ROOT_FULL"
    SPLIT_FIXED = "SPLIT_FIXED"
    SPLIT_HITS_ZERO = "SPLIT_HITS_ZERO"
    SPLIT_NO_ZERO = "SPLIT_NO_ZERO"
    INERT_HITS_ZERO = "INERT_HITS_ZERO"
    INERT_NO_ZERO = "INERT_NO_ZERO"


ZERO_HITTING = frozenset({Tag.SPLIT_HITS_ZERO, Tag.INERT_HITS_ZERO, Tag.DOUBLE_ROOT_FULL})


@dataclass(frozen=True)
class RootData:
    location: RootLocation
    alpha: Elem
    beta: Elem
    gamma: Optional[Elem]


@dataclass(frozen=True)
class PeriodClass:
    tag: Tag
    k: Optional[int]
    predicted_period: int


def _as_fp(m: PrimeModulus, x: Union[int, FpElem]) -> FpElem:
    return x if isinstance(x, FpElem) else FpElem(x, m)


def find_roots(n: Union[int, PrimeModulus], a: Union[int, FpElem], b: Union[int, FpElem]) -> RootData:
    """Roots of t^2 - b t - a by the quadratic formula, in Z_N or GF(N^2).

    alpha is always the root with the smaller (c0, c1) encoding.
    """
    m = modulus(n)
    a, b = _as_fp(m, a), _as_fp(m, b)
    half = FpElem(2, m).inverse()
    disc = b * b + 4 * a
    ls = legendre(disc)
    if ls == 0:
        alpha = b * half
        return RootData(RootLocation.DOUBLE, alpha, alpha, None)
    if ls == 1:
        r, _ = sqrt(disc)
        roots = sorted(((b + r) * half, (b - r) * half), key=FpElem.sort_key)
        location = RootLocation.SUBFIELD
    else:
        # disc = r^2 * c, so sqrt(disc) = r * w
        r, _ = sqrt(disc / m.nonresidue)
        root_disc = Fp2Elem(0, r.residue, m)
        roots = sorted(((root_disc + b) * half, (b - root_disc) * half), key=Fp2Elem.sort_key)
        location = RootLocation.EXTENSION
    alpha, beta = roots
    gamma = alpha / beta if beta else None
    return RootData(location, alpha, beta, gamma)


def gamma_order(roots: RootData) -> int:
    """k = ord(alpha/beta); divides N - 1 (split) or N + 1 (inert)."""
    if roots.location is RootLocation.DOUBLE or roots.gamma is None:
        raise DegenerateRoots("root ratio is undefined for a double or zero root")
    return mult_order(roots.gamma)


def ratio_in_omega(roots: RootData, x0: FpElem, k: Optional[int] = None) -> bool:
    """True when (x0 - alpha)/(x0 - beta) is a nontrivial power of gamma,
    i.e. when the orbit from x0 reaches 0."""
    if x0 == roots.alpha or x0 == roots.beta:
        raise RootHit(f"x0={x0.residue} is a root of the characteristic polynomial")
    if k is None:
        k = gamma_order(roots)
    r = (x0 - roots.alpha) / (x0 - roots.beta)
    if __debug__ and roots.location is RootLocation.EXTENSION:
        assert norm(r) == 1
    return r**k == 1


@lru_cache(maxsize=8192)
def _unit_profile(n: int, a: int, b: int) -> Tuple[RootData, Optional[int]]:
    roots = find_roots(n, a, b)
    k = None if roots.location is RootLocation.DOUBLE else gamma_order(roots)
    return roots, k


def predict_period(params: IprngParams) -> PeriodClass:
    """Eventual period of the orbit from x0, without iterating the generator."""
    n, a, b, x0 = params.as_ints()
    if a == 0:
        return PeriodClass(Tag.A_ZERO, None, 1)
    if b == 0:
        if x0 == 0 or a == x0 * x0 % n:
            return PeriodClass(Tag.B_ZERO_FIXED, None, 1)
        return PeriodClass(Tag.B_ZERO_SWAP, None, 2)
    roots, k = _unit_profile(n, a, b)
    if roots.location is RootLocation.DOUBLE:
        if params.x0 == roots.alpha:
            return PeriodClass(Tag.DOUBLE_ROOT_FIXED, None, 1)
        return PeriodClass(Tag.DOUBLE_ROOT_FULL, None, n - 1)
    if roots.location is RootLocation.SUBFIELD:
        if params.x0 == roots.alpha or params.x0 == roots.beta:
            return PeriodClass(Tag.SPLIT_FIXED, k, 1)
        if ratio_in_omega(roots, params.x0, k):
            return PeriodClass(Tag.SPLIT_HITS_ZERO, k, k - 1)
        return PeriodClass(Tag.SPLIT_NO_ZERO, k, k)
    if ratio_in_omega(roots, params.x0, k):
        return PeriodClass(Tag.INERT_HITS_ZERO, k, k - 1)
    return PeriodClass(Tag.INERT_NO_ZERO, k, k)


def _primitive_root(m: PrimeModulus) -> FpElem:
    n = m.value
    for g in range(2, n):
        if all(pow(g, (n - 1) // p, n) != 1 for p in m.factor_n_minus_1):
            return FpElem(g, m)
    raise AssertionError("no primitive root")  # unreachable for prime N


def _norm_one_element(m: PrimeModulus, k: int) -> Fp2Elem:
    """Some element of order k in the norm-1 subgroup of GF(N^2)^x (k | N+1).

    u^(N-1) always has norm 1; powering by (N+1)/k lands in the order-k
    subgroup. Candidates u are scanned in a fixed order for reproducibility.
    """
    n = m.value
    for v in range(1, n):
        for u in range(n):
            cand = Fp2Elem(u, v, m) ** ((n - 1) * ((n + 1) // k))
            if mult_order(cand) == k:
                return cand
    raise AssertionError(f"no norm-1 element of order {k}")


def gamma_classes(n: Union[int, PrimeModulus], k: int) -> list:
    """One representative of each class {gamma, 1/gamma} with ord(gamma) = k.

    There are phi(k)/2 of them. k must exceed 2 and divide N - 1 or N + 1.
    """
    m = modulus(n)
    nv = m.value
    if k <= 2 or ((nv - 1) % k and (nv + 1) % k):
        raise BadTarget(f"no root ratio of order {k} for N={nv}")
    if (nv - 1) % k == 0:
        base: Elem = _primitive_root(m) ** ((nv - 1) // k)
    else:
        base = _norm_one_element(m, k)
    exps = [j for j in range(1, (k + 1) // 2) if math.gcd(j, k) == 1]
    reps = [base**j for j in exps]
    assert len(reps) == euler_phi(k) // 2
    return reps


def a_from_gamma(gamma: Elem, b: FpElem) -> FpElem:
    """a = -b^2 / (gamma + 1/gamma + 2), the inverse of a^-1 b^2 = -(gamma + 1/gamma + 2)."""
    trace = gamma + gamma.inverse()
    if isinstance(trace, Fp2Elem):
        assert trace.in_subfield
        trace = trace.c0
    return -(b * b) / (trace + 2)


def a_from_gamma_as_printed(gamma: Elem, b: FpElem) -> FpElem:
    """a = b^2 (gamma + 1/gamma - 2). Does not reproduce gamma; kept for regression tests."""
    trace = gamma + gamma.inverse()
    if isinstance(trace, Fp2Elem):
        trace = trace.c0
    return b * b * (trace - 2)


def params_from_gamma(n: Union[int, PrimeModulus], k: int, b: Union[int, FpElem], which: int = 0) -> Tuple[FpElem, FpElem]:
    """(a, b) whose root ratio has order k; ``which`` picks among the phi(k)/2 classes."""
    m = modulus(n)
    b = _as_fp(m, b)
    if not b:
        raise BadTarget("b must be a unit")
    reps = gamma_classes(m, k)
    gamma = reps[which % len(reps)]
    return a_from_gamma(gamma, b), b

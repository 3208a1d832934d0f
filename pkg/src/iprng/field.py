"""Arithmetic in Z_N and GF(N^2), plus the integer number theory behind it.

GF(N^2) is represented as Z_N[w]/(w^2 - c) where c is the smallest
quadratic non-residue mod N, so every element is u + v*w with u, v in Z_N.
Elements are immutable; all arithmetic returns new objects.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from .errors import ModulusTooSmall, NotASquare, NotPrime, RepeatedRoot, ZeroInverse, ZeroOrder

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6
_SMALL_PRIMES: List[int] = []


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes() -> List[int]:
    if not _SMALL_PRIMES:
        sieve = bytearray([1]) * (_TRIAL_LIMIT + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _SMALL_PRIMES.extend(i for i, flag in enumerate(sieve) if flag)
    return _SMALL_PRIMES


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n (Pollard rho, Brent variant)."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}, ascending by prime."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    factors: Dict[int, int] = {}
    limit = math.isqrt(n)
    if limit > 1000:
        candidates = _small_primes()
    else:
        candidates = [p for p in range(2, limit + 1) if all(p % q for q in range(2, math.isqrt(p) + 1))]
    for p in candidates:
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
            else:
                d = _brent(m, rng)
                stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def _legendre_int(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def _sqrt_int(x: int, p: int) -> int:
    """Tonelli-Shanks; returns some root of a residue x mod the odd prime p."""
    x %= p
    if x == 0:
        return 0
    if p % 4 == 3:
        return pow(x, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _legendre_int(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(x, q, p), pow(x, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class PrimeModulus:
    """A prime N > 3 with the factorizations of N - 1 and N + 1 cached.

    Construct through :func:`modulus`, which validates and memoizes.
    """

    __slots__ = ("value", "factor_n_minus_1", "factor_n_plus_1", "nonresidue")

    def __init__(self, value: int):
        if not is_prime(value):
            raise NotPrime(f"{value} is not prime")
        if value <= 3:
            raise ModulusTooSmall(f"modulus must be a prime > 3, got {value}")
        if value >= 2**64:
            raise ValueError("modulus must fit in 64 bits")
        self.value = value
        self.factor_n_minus_1 = factorize(value - 1)
        self.factor_n_plus_1 = factorize(value + 1)
        c = 2
        while _legendre_int(c, value) != -1:
            c += 1
        self.nonresidue = c

    @property
    def factor_group2(self) -> Dict[int, int]:
        """Factorization of N^2 - 1, the order of GF(N^2)^x."""
        merged = dict(self.factor_n_minus_1)
        for p, e in self.factor_n_plus_1.items():
            merged[p] = merged.get(p, 0) + e
        return dict(sorted(merged.items()))

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.value == self.value

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeModulus({self.value})"

    def __call__(self, residue: int) -> "FpElem":
        return FpElem(residue, self)

    def __reduce__(self):
        return (modulus, (self.value,))


@lru_cache(maxsize=None)
def modulus(n: Union[int, PrimeModulus]) -> PrimeModulus:
    if isinstance(n, PrimeModulus):
        return n
    return PrimeModulus(int(n))


class FpElem:
    """A residue of Z_N."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, mod: Union[int, PrimeModulus]):
        self.modulus = modulus(mod)
        self.residue = int(residue) % self.modulus.value

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus.value} vs {other.modulus.value}")
            return other.residue
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * FpElem(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o

    def __neg__(self):
        return FpElem(-self.residue, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        return FpElem(pow(self.residue, e, self.modulus.value), self.modulus)

    def inverse(self) -> "FpElem":
        if self.residue == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.modulus.value}")
        return FpElem(pow(self.residue, -1, self.modulus.value), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, Fp2Elem):
            return other == self
        if isinstance(other, int):
            return self.residue == other % self.modulus.value
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus.value))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    __index__ = __int__

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus.value})"

    def sort_key(self) -> Tuple[int, int]:
        return (self.residue, 0)


class Fp2Elem:
    """u + v*w in GF(N^2) with w^2 = c, c the modulus' fixed non-residue."""

    __slots__ = ("u", "v", "modulus")

    def __init__(self, u: int, v: int, mod: Union[int, PrimeModulus]):
        self.modulus = modulus(mod)
        n = self.modulus.value
        self.u = int(u) % n
        self.v = int(v) % n

    @classmethod
    def lift(cls, x: Union[FpElem, "Fp2Elem"]) -> "Fp2Elem":
        if isinstance(x, Fp2Elem):
            return x
        return cls(x.residue, 0, x.modulus)

    @property
    def c0(self) -> FpElem:
        return FpElem(self.u, self.modulus)

    @property
    def c1(self) -> FpElem:
        return FpElem(self.v, self.modulus)

    @property
    def nonresidue(self) -> FpElem:
        return FpElem(self.modulus.nonresidue, self.modulus)

    @property
    def in_subfield(self) -> bool:
        return self.v == 0

    def _coerce(self, other):
        if isinstance(other, Fp2Elem):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.u, other.v
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.residue, 0
        if isinstance(other, int):
            return other, 0
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.u + o[0], self.v + o[1], self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.u - o[0], self.v - o[1], self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(o[0] - self.u, o[1] - self.v, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        u, v = _mul2(self.u, self.v, o[0], o[1], self.modulus.nonresidue, self.modulus.value)
        return Fp2Elem(u, v, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp2Elem(o[0], o[1], self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(o[0], o[1], self.modulus) * self.inverse()

    def __neg__(self):
        return Fp2Elem(-self.u, -self.v, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        u, v = _pow2(self.u, self.v, e, self.modulus.nonresidue, self.modulus.value)
        return Fp2Elem(u, v, self.modulus)

    def inverse(self) -> "Fp2Elem":
        n, c = self.modulus.value, self.modulus.nonresidue
        d = (self.u * self.u - c * self.v * self.v) % n
        if d == 0:
            raise ZeroInverse("0 has no inverse in GF(N^2)")
        d_inv = pow(d, -1, n)
        return Fp2Elem(self.u * d_inv, -self.v * d_inv, self.modulus)

    def __eq__(self, other):
        if isinstance(other, Fp2Elem):
            return self.modulus == other.modulus and (self.u, self.v) == (other.u, other.v)
        if isinstance(other, FpElem):
            return self.modulus == other.modulus and self.v == 0 and self.u == other.residue
        if isinstance(other, int):
            return self.v == 0 and self.u == other % self.modulus.value
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash((self.u, self.modulus.value))
        return hash((self.u, self.v, self.modulus.value))

    def __bool__(self):
        return bool(self.u or self.v)

    def __repr__(self):
        return f"{self.u} + {self.v}w (mod {self.modulus.value}, w^2={self.modulus.nonresidue})"

    def sort_key(self) -> Tuple[int, int]:
        return (self.u, self.v)


def _mul2(u1: int, v1: int, u2: int, v2: int, c: int, n: int) -> Tuple[int, int]:
    return (u1 * u2 + c * v1 * v2) % n, (u1 * v2 + u2 * v1) % n


def _pow2(u: int, v: int, e: int, c: int, n: int) -> Tuple[int, int]:
    ru, rv = 1, 0
    while e:
        if e & 1:
            ru, rv = _mul2(ru, rv, u, v, c, n)
        u, v = _mul2(u, v, u, v, c, n)
        e >>= 1
    return ru, rv


Elem = Union[FpElem, Fp2Elem]


def inv(x: Elem) -> Elem:
    return x.inverse()


def legendre(x: FpElem) -> int:
    """Euler's criterion: 0 for zero, +1 for a nonzero square, -1 otherwise."""
    return _legendre_int(x.residue, x.modulus.value)


def sqrt(x: FpElem) -> Tuple[FpElem, FpElem]:
    """Both square roots of x, smaller residue first."""
    if legendre(x) == -1:
        raise NotASquare(f"{x.residue} is not a square mod {x.modulus.value}")
    n = x.modulus.value
    r = _sqrt_int(x.residue, n)
    r = min(r, (n - r) % n)
    return FpElem(r, x.modulus), FpElem(-r, x.modulus)


def find_nonresidue(n: Union[int, PrimeModulus]) -> FpElem:
    m = modulus(n)
    return FpElem(m.nonresidue, m)


def frobenius(x: Elem) -> Elem:
    """x -> x^N. Uses w^N = c^((N-1)/2) * w rather than assuming it is -w."""
    if isinstance(x, FpElem):
        return x
    n, c = x.modulus.value, x.modulus.nonresidue
    return Fp2Elem(x.u, x.v * pow(c, (n - 1) // 2, n), x.modulus)


def norm(x: Elem) -> FpElem:
    if isinstance(x, FpElem):
        return x * x
    prod = x * frobenius(x)
    assert prod.v == 0
    return prod.c0


def mult_order(x: Elem) -> int:
    """Multiplicative order, found by stripping primes from the group order."""
    if not x:
        raise ZeroOrder("0 has no multiplicative order")
    if isinstance(x, FpElem):
        group = x.modulus.value - 1
        factors = x.modulus.factor_n_minus_1
    else:
        group = x.modulus.value**2 - 1
        factors = x.modulus.factor_group2
    order = group
    one = 1
    for p, e in factors.items():
        for _ in range(e):
            if x ** (order // p) == one:
                order //= p
            else:
                break
    return order


def quadratic_per(roots: Tuple[Elem, Elem], distinct: bool = True) -> int:
    """Period of (t - alpha)(t - beta): lcm of the root orders (squarefree case only)."""
    alpha, beta = roots
    if not distinct or alpha == beta:
        raise RepeatedRoot("period via root orders needs distinct roots")
    return math.lcm(mult_order(alpha), mult_order(beta))

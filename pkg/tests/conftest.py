"""Brute-force oracles shared by the test modules.

These deliberately avoid the package's own algorithms: trial division,
exhaustive scans and Floyd cycle finding stand in for Miller-Rabin,
Tonelli-Shanks, order stripping and the first-seen table.
"""

import math
import sys

import pytest

SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]
SWEEP_PRIMES = SMALL_PRIMES


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def naive_factor(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_order(x, n):
    """Order of x in Z_n^x by repeated multiplication."""
    y, e = x % n, 1
    while y != 1:
        y = y * x % n
        e += 1
    return e


def naive_step(n, a, b, x):
    if x == 0:
        return b
    inv = next(y for y in range(1, n) if x * y % n == 1)
    return (a * inv + b) % n


def floyd_period(n, a, b, x0):
    """(preperiod, period) by Floyd's tortoise and hare."""
    f = lambda x: naive_step(n, a, b, x)  # noqa: E731
    tort, hare = f(x0), f(f(x0))
    while tort != hare:
        tort, hare = f(tort), f(f(hare))
    mu, tort = 0, x0
    while tort != hare:
        tort, hare = f(tort), f(hare)
        mu += 1
    lam, hare = 1, f(tort)
    while tort != hare:
        hare = f(hare)
        lam += 1
    return mu, lam


@pytest.fixture(scope="session")
def small_primes():
    return SMALL_PRIMES


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)

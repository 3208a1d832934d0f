import itertools
import random

import pytest

from conftest import floyd_period
from iprng.analytic import RootLocation, find_roots
from iprng.field import Fp2Elem, modulus
from iprng.generator import (
    IprngParams,
    check_lemma1,
    closed_form_double,
    closed_form_double_as_printed,
    closed_form_split,
    lfsr_sequence,
    measure_period,
    sequence,
    step,
)


def ints(xs):
    return [x.residue for x in xs]


@pytest.mark.parametrize("n, a, b, x, expected", [(7, 1, 1, 0, 1), (7, 1, 1, 2, 5), (7, 3, 0, 2, 5)])
def test_step(n, a, b, x, expected):
    params = IprngParams.of(n, a, b, 0)
    assert step(params, modulus(n)(x)) == expected


def test_sequence_examples():
    assert ints(sequence(IprngParams.of(7, 1, 1, 1), 7)) == [2, 5, 4, 3, 6, 0, 1]
    assert ints(sequence(IprngParams.of(7, 0, 4, 2), 3)) == [4, 4, 4]
    assert sequence(IprngParams.of(7, 3, 2, 1), 0) == []


@pytest.mark.parametrize(
    "n, a, b, x0, pre, per",
    [(7, 1, 1, 1, 0, 7), (5, 1, 1, 0, 0, 4), (7, 0, 4, 2, 1, 1)],
)
def test_measure_period_examples(n, a, b, x0, pre, per):
    result = measure_period(IprngParams.of(n, a, b, x0))
    assert (result.preperiod, result.period) == (pre, per)


def test_measure_period_hits_zero_is_cycle_only():
    assert measure_period(IprngParams.of(7, 1, 1, 1)).hits_zero
    # a = 0: x0 = 0 is left immediately and never revisited
    assert not measure_period(IprngParams.of(7, 0, 4, 0)).hits_zero
    assert measure_period(IprngParams.of(7, 0, 0, 3)).hits_zero


@pytest.mark.parametrize("n", [5, 7, 11, 13])
def test_measure_period_matches_floyd(n):
    for a, b, x0 in itertools.product(range(n), repeat=3):
        r = measure_period(IprngParams.of(n, a, b, x0))
        assert (r.preperiod, r.period) == floyd_period(n, a, b, x0)


@pytest.mark.parametrize("n", [5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_orbit_fits_in_state_space(n):
    for a, b, x0 in itertools.product(range(n), repeat=3):
        r = measure_period(IprngParams.of(n, a, b, x0))
        assert r.period >= 1 and r.preperiod + r.period <= n


@pytest.mark.parametrize("n", [7, 13, 31])
def test_shift_invariance(n):
    rng = random.Random(n)
    for _ in range(100):
        params = IprngParams.of(n, rng.randrange(n), rng.randrange(n), rng.randrange(n))
        base = measure_period(params)
        orbit = [params.x0] + sequence(params, base.preperiod + base.period)
        for x in orbit[base.preperiod :]:
            shifted = measure_period(params.with_x0(x))
            assert (shifted.preperiod, shifted.period) == (0, base.period)


@pytest.mark.parametrize("n", [5, 7, 11, 31])
def test_b_zero_orbit_alternates(n):
    for a in range(1, n):
        for x0 in range(1, n):
            if a == x0 * x0 % n:
                continue
            xs = ints(sequence(IprngParams.of(n, a, 0, x0), 8))
            assert all(xs[i + 2] == xs[i] for i in range(6))
            assert xs[0] != xs[1]


def test_lfsr_examples():
    assert ints(lfsr_sequence(IprngParams.of(7, 1, 1, 1), 5)) == [1, 1, 2, 3, 5]
    assert ints(lfsr_sequence(IprngParams.of(7, 1, 2, 3), 2)) == [1, 3]
    assert ints(lfsr_sequence(IprngParams.of(5, 4, 2, 4), 6)) == [1, 4, 2, 0, 3, 1]


def test_closed_form_double_examples():
    m = modulus(11)
    alpha, x0 = m(3), m(7)
    assert closed_form_double(alpha, x0, 0) == 1
    assert closed_form_double(alpha, x0, 1) == x0
    for n in range(25):
        assert closed_form_double(alpha, 2 * alpha, n) == (n + 1) * alpha**n


def test_closed_form_double_as_printed_breaks_first_seed():
    m = modulus(11)
    for alpha in range(1, 11):
        for x0 in range(11):
            assert closed_form_double_as_printed(m(alpha), m(x0), 0) == 0


def test_closed_form_split_examples():
    m = modulus(7)
    alpha, beta, x0 = m(2), m(3), m(1)
    assert closed_form_split(alpha, beta, x0, 0) == 1
    assert closed_form_split(alpha, beta, x0, 1) == x0
    # alpha=2, beta=3 gives a = -6 = 1, b = 5; y_2 = b*x0 + a
    assert closed_form_split(alpha, beta, x0, 2) == 6
    assert lfsr_sequence(IprngParams.of(7, 1, 5, 1), 3)[2] == 6


@pytest.mark.parametrize("n", [5, 7, 11, 13, 31])
def test_closed_forms_match_recurrence(n):
    m = modulus(n)
    rng = random.Random(1000 + n)
    doubles = splits = 0
    while doubles < 200 or splits < 200:
        a, b, x0 = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        roots = find_roots(m, a, b)
        if roots.location is RootLocation.DOUBLE:
            if not roots.alpha or doubles >= 200:
                continue
            doubles += 1
            ys = lfsr_sequence(IprngParams.of(n, a, b, x0), 2 * n + 1)
            assert all(closed_form_double(roots.alpha, m(x0), i) == ys[i] for i in range(2 * n + 1))
        else:
            if splits >= 200:
                continue
            splits += 1
            ys = lfsr_sequence(IprngParams.of(n, a, b, x0), 2 * n + 1)
            for i in range(2 * n + 1):
                y = closed_form_split(roots.alpha, roots.beta, m(x0), i)
                if isinstance(y, Fp2Elem):
                    assert y.in_subfield
                assert y == ys[i]


def test_check_lemma1_examples():
    assert check_lemma1(IprngParams.of(7, 1, 1, 1), 7)
    assert check_lemma1(IprngParams.of(5, 1, 1, 0), 5)
    rng = random.Random(31)
    for _ in range(100):
        params = IprngParams.of(31, rng.randrange(31), rng.randrange(31), rng.randrange(31))
        assert check_lemma1(params, 31)


def test_lemma1_zero_correspondence():
    # N=7, a=b=1, x0=1: x_6 = 0 is the first zero and y_7 is the first zero of y
    params = IprngParams.of(7, 1, 1, 1)
    xs = ints([params.x0] + sequence(params, 7))
    ys = ints(lfsr_sequence(params, 9))
    assert xs.index(0) == 6
    assert ys.index(0) == 7

"""Inversive pseudorandom generators over prime fields: periods, census, design."""

from .analytic import PeriodClass, RootData, Tag, find_roots, gamma_order, params_from_gamma, predict_period, ratio_in_omega
from .census import (
    DistributionTable,
    Family,
    achievable_periods,
    analytic_distribution,
    brute_force_distribution,
    compare,
    scatter_dump,
)
from .design import design
from .field import Fp2Elem, FpElem, PrimeModulus, modulus
from .generator import IprngParams, PeriodResult, measure_period, sequence, step

__version__ = "0.1.0"

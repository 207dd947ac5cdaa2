"""Arbitrary-precision Bessel moments, Hilbert-transform sum rules and exact sequences.

Numerical results come back as :class:`Numeric` objects holding decimal strings
(``value``, ``error_bound``); exact sequence values come back as ``int`` or
``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import (
    BesselMomentsError,
    ConsistencyError,
    DivergenceError,
    DomainError,
    InvalidSpecError,
    Numeric,
    OverflowError,
    PrecisionError,
    alpha_beta_numeric,
    crandall_numeric,
    hilbert_pv,
    ladder_product_check,
    moment,
    rogers_check,
    verify_sum_rule,
)

__all__ = [
    "BesselMomentsError",
    "ConsistencyError",
    "DivergenceError",
    "DomainError",
    "InvalidSpecError",
    "Numeric",
    "OverflowError",
    "PrecisionError",
    "alpha",
    "alpha_beta_numeric",
    "alpha_m",
    "beta_m",
    "broadhurst_roberts",
    "crandall",
    "crandall_numeric",
    "domb",
    "hilbert_pv",
    "ladder",
    "ladder_product_check",
    "moment",
    "rogers_check",
    "sum_rule_terms",
    "verify_sum_rule",
]


def domb(n: int) -> int:
    return int(_core.domb(n))


def alpha(ell: int) -> int:
    return int(_core.alpha(ell))


def alpha_m(m: int, n: int) -> int:
    return int(_core.alpha_m(m, n))


def crandall(n: int) -> int:
    return int(_core.crandall(n))


def beta_m(m: int, n: int) -> Fraction:
    return Fraction(_core.beta_m(m, n))


def broadhurst_roberts(M: int, n: int) -> int:
    return int(_core.broadhurst_roberts(M, n))


def ladder(kind: str, ell: int):
    """Terms (coeff, iota_pow, kappa_pow) of zeta_ell or eta_ell."""
    return [(int(c), i, k) for c, i, k in _core.ladder(kind, ell)]


def sum_rule_terms(family: str, n: int, k: int):
    """Terms (coeff, a, b, c, pi_power) of the Z or Y sum rule."""
    return [(int(c), a, b, cc, p) for c, a, b, cc, p in _core.sum_rule_terms(family, n, k)]

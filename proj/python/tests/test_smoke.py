from decimal import Decimal, getcontext
from fractions import Fraction
import math

import pytest

import besselmoments as bm

getcontext().prec = 60


def test_closed_form_moment():
    r = bm.moment(0, 2, 0, digits=30)
    assert Decimal(r.value) - Decimal(math.pi) ** 2 / 4 < Decimal("1e-14")
    assert r.value.startswith("2.4674011002723396547086227499")
    assert Decimal(r.error_bound) < Decimal("1e-30")
    assert r.digits == 30


def test_pi_weighting_matches():
    plain = Decimal(bm.moment(1, 3, 1, digits=30).value)
    weighted = Decimal(bm.moment(1, 3, 1, pi_power=-2, digits=30).value)
    assert abs(weighted * Decimal(math.pi) ** 2 / plain - 1) < Decimal("1e-14")


def test_sum_rules():
    z = bm.verify_sum_rule("Z", 3, 1, digits=30)
    assert z.passed
    assert abs(Decimal(z.value)) < Decimal("1e-30")
    y = bm.verify_sum_rule("Y", 4, 1, digits=30, fused=True)
    assert y.passed
    assert bm.sum_rule_terms("Z", 2, 1) == [(1, 2, 2, 0, 2), (-1, 0, 4, 0, 0)]


def test_crandall_and_alpha_beta():
    c = bm.crandall_numeric(3, digits=30)
    assert c.passed and c.reference == "2"
    a = bm.alpha_beta_numeric(1, 2, digits=30)
    assert abs(Decimal(a.value) - Decimal(1) / 2) < Decimal("1e-25")


def test_hilbert_and_rogers():
    h = bm.hilbert_pv("kappa_sq", "1", digits=25)
    assert h.passed
    assert abs(Decimal(h.value) - Decimal(h.reference)) < Decimal("1e-20")
    r = bm.rogers_check("1/16", 120, digits=40)
    assert r.passed and Decimal(r.value) < Decimal("1e-30")


def test_exact_sequences():
    assert [bm.domb(n) for n in range(6)] == [1, 4, 28, 256, 2716, 31504]
    assert [bm.crandall(n) for n in range(1, 7)] == [0, 1, 2, 15, 302, 12559]
    assert bm.alpha(4) == 144
    assert bm.alpha_m(2, 2) == 2
    assert bm.beta_m(1, 2) == Fraction(1, 2)
    assert bm.broadhurst_roberts(4, 3) == bm.crandall(4)
    assert bm.ladder("eta", 3) == [(-3, 2, 4), (1, 0, 6)]
    assert bm.ladder_product_check(5, 7)


def test_errors():
    with pytest.raises(bm.DivergenceError):
        bm.moment(3, 2, 0)
    with pytest.raises(bm.InvalidSpecError):
        bm.verify_sum_rule("Z", 3, 2)
    with pytest.raises(bm.DomainError):
        bm.hilbert_pv("kappa_sq", "0")
    with pytest.raises(bm.PrecisionError):
        bm.moment(0, 2, 0, max_level=3)
    with pytest.raises(bm.InvalidSpecError):
        bm.domb(-1)
    assert issubclass(bm.PrecisionError, bm.BesselMomentsError)

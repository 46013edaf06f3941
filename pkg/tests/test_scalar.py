import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
import hypothesis.strategies as st

from biortho.scalar import (
    GammaRatio,
    PoleError,
    beta_moment_ratio,
    beta_ratio,
    binomial,
    delta_params,
    gamma_shift,
    log_gamma_complex,
    pochhammer,
    to_rational,
)
from conftest import rationals


@pytest.mark.parametrize("text,value", [
    ("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), ("0.125", Fraction(1, 8)), ("1e-3", Fraction(1, 1000)),
])
def test_to_rational_strings(text, value):
    assert to_rational(text) == value


def test_to_rational_rejects_floats():
    with pytest.raises(TypeError):
        to_rational(0.5)


@given(rationals(), st.integers(0, 8))
def test_pochhammer_recursion(a, k):
    assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


@given(rationals(), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_split(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


@given(st.integers(1, 4), rationals(), st.integers(0, 5))
def test_block_identity(v, g, k):
    block = math.prod((pochhammer(d, k) for d in delta_params(v, g)), start=Fraction(1))
    assert Fraction(v) ** (v * k) * block == pochhammer(g, v * k)


def test_delta_params_values():
    assert delta_params(3, Fraction(1)) == [Fraction(1, 3), Fraction(2, 3), Fraction(1)]


@given(rationals(1, 10).filter(lambda a: a.denominator != 1), st.integers(-4, 6))
def test_gamma_shift_matches_mpmath(a, k):
    expected = mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator + k) / mpmath.gamma(
        mpmath.mpf(a.numerator) / a.denominator)
    assert float(gamma_shift(a, k)) == pytest.approx(float(expected), rel=1e-12)


@given(st.integers(-6, 10), st.integers(0, 6))
def test_binomial_integer(n, j):
    expected = Fraction(math.comb(n, j)) if n >= 0 else Fraction((-1) ** j * math.comb(j - n - 1, j))
    assert binomial(n, j) == expected


@pytest.mark.parametrize("j,k", [(0, 0), (1, 0), (0, 3), (2, -2), (4, 1)])
def test_beta_moment_ratio_oracle(j, k):
    a, b = Fraction(3, 2), Fraction(11, 2)
    value = mpmath.beta(1.5 + j, 5.5 + k) / mpmath.beta(1.5, 5.5)
    assert float(beta_moment_ratio(a, b, j, k)) == pytest.approx(float(value), rel=1e-13)


def test_gamma_ratio_reduces_to_rational():
    # B(2, 3) = 1/12
    assert beta_ratio(2, 3).exact() == Fraction(1, 12)
    # G(7/2)/G(3/2) = 15/4
    assert GammaRatio(Fraction(1), (Fraction(7, 2),), (Fraction(3, 2),)).exact() == Fraction(15, 4)


def test_gamma_ratio_irrational_float():
    r = beta_ratio(Fraction(1, 2), Fraction(1, 2))
    assert r.exact() is None
    assert float(r) == pytest.approx(math.pi, rel=1e-14)


def test_gamma_ratio_pole():
    with pytest.raises(PoleError):
        GammaRatio(Fraction(1), (Fraction(-2),), ()).reduced()


@given(st.floats(-15, 15), st.floats(-30, 30))
def test_log_gamma_matches_mpmath(re, im):
    z = complex(re, im)
    if abs(z - round(re)) < 1e-3 and re <= 0.5:
        return
    expected = complex(mpmath.loggamma(mpmath.mpc(re, im)))
    got = log_gamma_complex(z)
    assert abs(got - expected) <= 1e-11 * max(1.0, abs(expected))


@given(st.floats(-12, 12), st.floats(-20, 20))
def test_log_gamma_functional_equation(re, im):
    z = complex(re, im)
    if abs(im) < 1e-3 and re <= 0.5 and abs(re - round(re)) < 1e-3:
        return
    lhs = log_gamma_complex(z + 1)
    rhs = log_gamma_complex(z) + complex(mpmath.log(mpmath.mpc(re, im)))
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_log_gamma_pole():
    with pytest.raises(PoleError):
        log_gamma_complex(-3)

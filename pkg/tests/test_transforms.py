import math
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from biortho.families import ParamSet, finite_m
from biortho.report import Verdict
from biortho.scalar import PoleError, pochhammer
from biortho.transforms import (
    FracKind,
    FracOrder,
    GammaMonomialSum,
    Variant,
    fractional_shift,
    laplace_closed_form,
    laplace_quadrature,
    laplace_quadrature_check,
    laplace_termwise,
    monomial_ratios,
)
from biortho.poly import Polynomial
from conftest import rationals

F = Fraction


def test_laplace_n0_both_variants():
    for variant in Variant:
        value = laplace_closed_form(ParamSet(5, F(1, 2), 2, 0), 0, 3, F(7, 2), variant)
        assert value.ratio == 1
        assert float(value) == pytest.approx(math.gamma(1.5) / 3.5 ** 1.5)


def test_laplace_fixture():
    ps = ParamSet(8, 1, 2, 1)
    assert laplace_closed_form(ps, 1, 1, 2, Variant.CORRECTED).exact() == F(39, 4)
    assert laplace_closed_form(ps, 1, 1, 2, Variant.PRINTED).exact() == F(21, 16)
    # direct: x (-6 + 30 x^2) -> -6 * 1!/2^2 + 30 * 3!/2^4
    assert F(-6, 4) + F(30 * 6, 16) == F(39, 4)


def test_laplace_quadrature_examples():
    assert laplace_quadrature(ParamSet(5, 0, 1, 0), 0, 1, 1) == pytest.approx(1.0, abs=1e-10)
    assert laplace_quadrature(ParamSet(8, 1, 2, 1), 1, 1, 2) == pytest.approx(39 / 4, rel=1e-9)
    assert laplace_quadrature_check(ParamSet(10, F(1, 2), 2, 2), 2, F(1, 3), 1) <= 1e-8


@given(st.integers(1, 3), st.integers(0, 4), rationals(0, 30), rationals(-1, 5).filter(lambda q: q > -1),
       rationals(-3, 3).filter(bool), rationals(1, 10).filter(lambda a: a > 0))
def test_laplace_corrected_matches_termwise(v, n, dp, q, w, alpha):
    ps = ParamSet((v + 1) * n + 1 + dp + F(1, 9), q, v, n)
    assert laplace_closed_form(ps, n, w, alpha).ratio == laplace_termwise(ps, n, w, alpha).ratio


@given(rationals(-3, 3), rationals(-3, 3))
def test_laplace_linear_in_polynomial(a, b):
    # termwise transform is linear: L[a M_1 + b M_2] = a L[M_1] + b L[M_2] (ratios, shared prefactor)
    ps = ParamSet(20, F(1, 3), 2, 2)
    alpha = F(5, 2)
    l1, l2 = laplace_termwise(ps, 1, 1, alpha).ratio, laplace_termwise(ps, 2, 1, alpha).ratio
    combo = finite_m(20, F(1, 3), 2, 1) * a + finite_m(20, F(1, 3), 2, 2) * b
    direct = sum((c * pochhammer(F(4, 3), k) / alpha ** k for k, c in enumerate(combo.coeffs)), F(0))
    assert direct == a * l1 + b * l2


def test_fractional_examples():
    shift = fractional_shift(ParamSet(8, 1, 2, 1), 1, FracOrder(F(1, 2)))
    assert shift.report.verdict is Verdict.PASS
    assert monomial_ratios(1, 2, 1, F(1, 2)) == [1, F(2 * 3, 1) / (F(5, 2) * F(7, 2))]
    # n = 0, mu = 1: prefactor G(q+1)/G(q+2) = 1/(q+1)
    shift0 = fractional_shift(ParamSet(5, F(2, 3), 1, 0), 0, FracOrder(1))
    assert shift0.prefactor.exact() == F(3, 5)
    der = fractional_shift(ParamSet(5, 0, 2, 1), 1, FracOrder(F(1, 2), FracKind.DERIVATIVE))
    assert der.report.verdict is Verdict.PASS


def test_fractional_divergent():
    shift = fractional_shift(ParamSet(5, 0, 1, 1), 1, FracOrder(F(3, 2), FracKind.DERIVATIVE))
    assert shift.report.verdict is Verdict.DIVERGENT


def test_frac_order_rejects_nonpositive():
    with pytest.raises(ValueError):
        FracOrder(0)


def _src(q, n):
    return GammaMonomialSum.from_power(q, finite_m(30, q, 2, n))


ORDERS = st.sampled_from([F(1, 2), F(1), F(3, 2), F(1, 3), F(5, 2)])


@given(ORDERS, ORDERS, rationals(0, 5), st.integers(0, 3))
def test_semigroup(mu, lam, q, n):
    src = _src(q, n)
    a = src.integrate(mu).integrate(lam).to_power()
    b = src.integrate(mu + lam).to_power()
    assert a[0] == b[0] and a[1] == b[1] and a[2].reduced() == b[2].reduced()


@given(ORDERS, rationals(0, 5), st.integers(0, 3))
def test_derivative_inverts_integral(lam, q, n):
    src = _src(q, n)
    back = src.integrate(lam).apply(FracOrder(lam, FracKind.DERIVATIVE)).to_power()
    orig = src.to_power()
    assert back[0] == orig[0] and back[1] == orig[1]


@given(st.lists(rationals(-5, 5, 4), min_size=1, max_size=5))
def test_integer_orders_collapse(cs):
    f = Polynomial(cs)
    if f.is_zero():
        return
    base, img, factor = GammaMonomialSum.from_power(0, f).integrate(1).to_power()
    assert base == 1 and img.shift_degree(1) * factor.exact() == f.antiderivative()
    base, img, factor = GammaMonomialSum.from_power(1, f).apply(FracOrder(1, FracKind.DERIVATIVE)).to_power()
    assert base == 0 and img * factor.exact() == f.shift_degree(1).derivative()


def test_nonintegrable_power():
    with pytest.raises(PoleError):
        GammaMonomialSum.from_power(-1, Polynomial([F(1)]))

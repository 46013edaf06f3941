"""Laplace transform and Riemann-Liouville operators applied to M_n.

Closed forms are checked against an exact monomial calculus: functions of
the form ``(x-a)^beta * poly(x-a)`` are kept in the Gamma-normalized basis
``(x-a)^(beta+k) / Gamma(beta+k+1)``, on which the fractional integral of
order ``mu`` only moves ``beta`` to ``beta + mu`` and ``d/dx`` moves it to
``beta - 1``. No Gamma function is ever evaluated on that path.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .families import ParamSet, finite_m, hyp_terminating
from .poly import Polynomial
from .report import Mode, ResidualReport, Verdict, exact_verdict
from .scalar import (
    GammaRatio,
    PoleError,
    delta_params,
    is_nonpositive_integer,
    pochhammer,
    to_rational,
)


class ConvergenceError(RuntimeError):
    """Numeric integration did not reach the requested accuracy."""


class Variant(str, enum.Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"


# -- Laplace transform -----------------------------------------------------

@dataclass(frozen=True)
class LaplaceValue:
    """``ratio * Gamma(q+1) / alpha^(q+1)``."""

    ratio: Fraction
    q: Fraction
    alpha: Fraction

    def exact(self) -> Fraction | None:
        if self.q.denominator != 1:
            return None
        k = int(self.q)
        return self.ratio * math.factorial(k) / self.alpha ** (k + 1)

    def __float__(self) -> float:
        return float(self.ratio) * math.exp(math.lgamma(float(self.q) + 1)) / float(self.alpha) ** (float(self.q) + 1)


def laplace_closed_form(params: ParamSet, n: int, w, alpha, variant=Variant.CORRECTED) -> LaplaceValue:
    """Laplace transform of ``x^q M_n(p, q, v; w x)`` at ``alpha``.

    ``(-1)^n G(vn+q+1)/alpha^(q+1) * _{v+1}F_0[-n, D(v, n+1-p); -; A]`` with
    ``A = (-w/alpha)^v`` as printed, or ``(-v w/alpha)^v`` once the block
    factor ``v^(vj)`` hidden in ``(n+1-p)_{vj}`` is restored.
    """
    p, q, v = params.p, params.q, params.upsilon
    w, alpha = to_rational(w), to_rational(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    variant = Variant(variant)
    base = -w / alpha if variant is Variant.PRINTED else -v * w / alpha
    arg = Polynomial([base ** v])
    numer = [Fraction(-n)] + delta_params(v, n + 1 - p)
    series = hyp_terminating(numer, [], arg, n)[0] if n else Fraction(1)
    ratio = (-1) ** n * pochhammer(q + 1, v * n) * series
    return LaplaceValue(ratio, q, alpha)


def laplace_termwise(params: ParamSet, n: int, w, alpha) -> LaplaceValue:
    """Oracle: transform each monomial with ``int e^(-ax) x^s = G(s+1)/a^(s+1)``."""
    p, q, v = params.p, params.q, params.upsilon
    w, alpha = to_rational(w), to_rational(alpha)
    poly = finite_m(p, q, v, n)
    ratio = sum(
        (c * w ** k * pochhammer(q + 1, k) / alpha ** k for k, c in enumerate(poly.coeffs) if c),
        Fraction(0),
    )
    return LaplaceValue(ratio, q, alpha)


def _tail_cut(poly: Polynomial, q: float, alpha: float, tol: float = 1e-12) -> float:
    scale = sum(abs(float(c)) for c in poly.coeffs) or 1.0
    x = 1.0
    while True:
        bound = scale * math.exp(-alpha * x) * max(1.0, x) ** (q + poly.degree + 1) / alpha
        if bound < tol * 1e-3 and x > 10.0 / alpha:
            return x
        x *= 1.5


def laplace_quadrature(params: ParamSet, n: int, w, alpha) -> float:
    """Adaptive numeric value of ``int_0^X e^(-alpha x) x^q M_n(w x) dx``."""
    from scipy import integrate

    q = float(params.q)
    a = float(to_rational(alpha))
    poly = finite_m(params.p, params.q, params.upsilon, n).scale_argument(to_rational(w))
    fcoeffs = [float(c) for c in poly.coeffs]

    def f(x):
        acc = 0.0
        for c in reversed(fcoeffs):
            acc = acc * x + c
        return math.exp(-a * x) * acc

    X = _tail_cut(poly, q, a)
    breaks = [X * k / 8 for k in range(9)]
    total, err = 0.0, 0.0
    for lo, hi in zip(breaks, breaks[1:]):
        if lo == 0.0 and q != 0.0:
            val, e = integrate.quad(f, lo, hi, weight="alg", wvar=(q, 0.0), epsabs=0.0, epsrel=1e-13, limit=200)
        else:
            g = (lambda x: f(x) * x ** q) if q != 0.0 else f
            val, e = integrate.quad(g, lo, hi, epsabs=0.0, epsrel=1e-13, limit=200)
        total += val
        err += e
    scale = sum(abs(float(c)) * math.gamma(q + k + 1) / a ** (q + k + 1) for k, c in enumerate(poly.coeffs))
    if err > 1e-9 * max(abs(total), scale * 1e-6):
        raise ConvergenceError(f"quadrature error estimate {err:.3g} too large")
    return total


def laplace_quadrature_check(params: ParamSet, n: int, w, alpha) -> float:
    """Relative residual between quadrature and the corrected closed form."""
    exact = float(laplace_closed_form(params, n, w, alpha, Variant.CORRECTED))
    numeric = laplace_quadrature(params, n, w, alpha)
    return abs(numeric - exact) / abs(exact)


# -- Riemann-Liouville calculus --------------------------------------------

class FracKind(str, enum.Enum):
    INTEGRAL = "integral"
    DERIVATIVE = "derivative"


@dataclass(frozen=True)
class FracOrder:
    value: Fraction
    kind: FracKind = FracKind.INTEGRAL
    a: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "value", to_rational(self.value))
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "kind", FracKind(self.kind))
        if self.value <= 0:
            raise ValueError("fractional order must be positive")

    @property
    def r(self) -> int:
        """Integer order of the outer derivative, ``floor(value) + 1``."""
        return math.floor(self.value) + 1

    @property
    def signed(self) -> Fraction:
        return self.value if self.kind is FracKind.INTEGRAL else -self.value


@dataclass(frozen=True)
class GammaMonomialSum:
    """``const * sum_k c_k (x-a)^(base+k) / Gamma(base+k+1)``."""

    base: Fraction
    coeffs: tuple
    const: GammaRatio = GammaRatio()

    @classmethod
    def from_power(cls, base, poly: Polynomial) -> "GammaMonomialSum":
        """Represent ``(x-a)^base * poly(x-a)``."""
        base = to_rational(base)
        if is_nonpositive_integer(base + 1):
            raise PoleError(f"(x-a)^{base} is not locally integrable")
        cs = tuple(c * pochhammer(base + 1, k) for k, c in enumerate(poly.coeffs))
        return cls(base, cs, GammaRatio(Fraction(1), (base + 1,), ()))

    def integrate(self, mu) -> "GammaMonomialSum":
        """Riemann-Liouville integral of order ``mu`` from ``a``."""
        return GammaMonomialSum(self.base + to_rational(mu), self.coeffs, self.const)

    def differentiate(self, times: int = 1) -> "GammaMonomialSum":
        out = self
        for _ in range(times):
            cs = tuple(
                Fraction(0) if is_nonpositive_integer(out.base + k) else c
                for k, c in enumerate(out.coeffs)
            )
            out = GammaMonomialSum(out.base - 1, cs, out.const)
        return out

    def apply(self, order: FracOrder) -> "GammaMonomialSum":
        if order.kind is FracKind.INTEGRAL:
            return self.integrate(order.value)
        return self.integrate(order.r - order.value).differentiate(order.r)

    def to_power(self) -> tuple[Fraction, Polynomial, GammaRatio]:
        """Back to ``factor * (x-a)^base * poly(x-a)``; returns
        ``(base, poly, factor)`` with ``factor = const / Gamma(base+1)``."""
        if is_nonpositive_integer(self.base + 1):
            raise PoleError(f"result exponent {self.base} sits on a Gamma pole")
        poly = Polynomial([c / pochhammer(self.base + 1, k) for k, c in enumerate(self.coeffs)])
        factor = self.const * GammaRatio(Fraction(1), (), (self.base + 1,))
        return self.base, poly, factor


@dataclass
class FractionalShift:
    """Claimed image ``prefactor * (x-a)^q_new * M_n(p, q_new, v; w(x-a))``
    and its exact check against the monomial calculus."""

    p: Fraction
    q: Fraction
    q_new: Fraction
    upsilon: int
    n: int
    w: Fraction
    order: FracOrder
    prefactor: GammaRatio
    lhs: Polynomial
    rhs: Polynomial
    report: ResidualReport


def fractional_shift(params: ParamSet, n: int, order: FracOrder, w=Fraction(1)) -> FractionalShift:
    p, q, v = params.p, params.q, params.upsilon
    w = to_rational(w)
    q_new = q + order.signed
    claim = "rl-integral" if order.kind is FracKind.INTEGRAL else "rl-derivative"
    sample = {**params.as_dict(), "n": n, "order": str(order.value), "a": str(order.a), "w": str(w)}
    if q <= -1 or q_new <= -1:
        rep = ResidualReport(claim, Mode.EXACT_POLY, Verdict.DIVERGENT, None, [sample],
                             notes=f"shifted parameter q={q_new} leaves q > -1")
        empty = Polynomial()
        return FractionalShift(p, q, q_new, v, n, w, order, GammaRatio(), empty, empty, rep)
    source = GammaMonomialSum.from_power(q, finite_m(p, q, v, n).scale_argument(w))
    base, lhs, _ = source.apply(order).to_power()
    assert base == q_new
    # both sides share Gamma(q+1)/Gamma(q_new+1); what is left is rational
    rhs = finite_m(p, q_new, v, n).scale_argument(w) * (
        pochhammer(q + 1, v * n) / pochhammer(q_new + 1, v * n)
    )
    prefactor = GammaRatio(Fraction(1), (v * n + q + 1,), (v * n + q_new + 1,))
    residual = lhs - rhs
    rep = ResidualReport(claim, Mode.EXACT_POLY, exact_verdict(residual), residual, [sample])
    rep.details = {"prefactor": prefactor}
    return FractionalShift(p, q, q_new, v, n, w, order, prefactor, lhs, rhs, rep)


def monomial_ratios(q, upsilon: int, n: int, mu) -> list[Fraction]:
    """``(q+1)_{vj} / (q+mu+1)_{vj}``: per-monomial Gamma ratio of the
    fractional integral relative to the ``j = 0`` term."""
    q, mu = to_rational(q), to_rational(mu)
    return [pochhammer(q + 1, upsilon * j) / pochhammer(q + mu + 1, upsilon * j) for j in range(n + 1)]

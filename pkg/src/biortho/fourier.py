"""The Gamma-weighted function pair obtained from the Fourier transform.

``Phi`` and ``chi`` are finite sums evaluated in complex double precision;
the biorthogonality integral over the real line is done by adaptive
quadrature with a cutoff taken from the ``exp(-2 pi |x|)`` decay of the
four-Gamma weight.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .families import finite_m, finite_mfrak
from .report import Mode, ResidualReport, Verdict
from .scalar import (
    PoleError,
    complex_pochhammer,
    delta_params,
    log_gamma_complex,
    pochhammer,
    to_rational,
)


class Normalization(str, enum.Enum):
    TWO_PI = "TWO_PI"
    TWO_PI_I = "TWO_PI_I"

    @property
    def factor(self) -> complex:
        return 2 * math.pi if self is Normalization.TWO_PI else 2j * math.pi


@dataclass(frozen=True)
class FourierParams:
    gamma1: Fraction
    gamma2: Fraction
    lambda1: Fraction
    lambda2: Fraction
    upsilon: int = 1

    def __post_init__(self):
        for name in ("gamma1", "gamma2", "lambda1", "lambda2"):
            value = to_rational(getattr(self, name))
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)
        if self.upsilon < 1:
            raise ValueError("upsilon must be >= 1")

    def check(self, n: int) -> None:
        if self.gamma2 + self.lambda1 <= n + self.upsilon * n:
            raise ValueError(
                f"gamma2 + lambda1 = {self.gamma2 + self.lambda1} must exceed n(1+upsilon) = {n * (1 + self.upsilon)}"
            )

    @property
    def total(self) -> Fraction:
        return self.gamma1 + self.gamma2 + self.lambda1 + self.lambda2

    def as_dict(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("gamma1", "gamma2", "lambda1", "lambda2")} | {
            "upsilon": self.upsilon
        }


class PhiVariant(str, enum.Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"


def eval_phi(fp: FourierParams, n: int, z: complex, variant=PhiVariant.PRINTED) -> complex:
    """``_{v+1}F_{2v}[-n, D(v, n-g2-l1); D(v, g1+l2), D(v, 1-g2-z); 1]``.

    The corrected variant adds the numerator block ``D(v, g1-z)``: the
    Beta integral of the ``u^(vj)`` term contributes ``(g1-z)_{vj}``, which
    the closed form of the pair needs.
    """
    v = fp.upsilon
    numer = [complex(-n)] + [complex(a) for a in delta_params(v, n - fp.gamma2 - fp.lambda1)]
    if PhiVariant(variant) is PhiVariant.CORRECTED:
        numer += [(complex(fp.gamma1) - z + i) / v for i in range(v)]
    denom = [complex(b) for b in delta_params(v, fp.gamma1 + fp.lambda2)]
    denom += [(1 - complex(fp.gamma2) - z + i) / v for i in range(v)]
    total, term = complex(1), complex(1)
    for j in range(n):
        num = 1
        for a in numer:
            num *= a + j
        den = 1
        for b in denom:
            den *= b + j
        if num == 0:
            break
        if den == 0:
            raise PoleError(f"Phi denominator vanishes at index {j}")
        term *= num / (den * (j + 1))
        total += term
    return total


def eval_chi(fp: FourierParams, n: int, z: complex) -> complex:
    """``1/(1-l1-z)_n * sum_r (S-n)_r (l2-z)_r / ((l1+l2-n)_r r!) * sum_s (-r)_s/s! ((s+g1+l2)/v)_n``."""
    z = complex(z)
    v = fp.upsilon
    pre = complex_pochhammer(1 - complex(fp.lambda1) - z, n)
    if pre == 0:
        raise PoleError("chi prefactor (1 - lambda1 - z)_n vanishes")
    total = complex(0)
    for r in range(n + 1):
        inner = sum(
            pochhammer(Fraction(-r), s) / math.factorial(s)
            * pochhammer((s + fp.gamma1 + fp.lambda2) / v, n)
            for s in range(r + 1)
        )
        den = pochhammer(fp.lambda1 + fp.lambda2 - n, r)
        if den == 0:
            raise PoleError("chi denominator (lambda1+lambda2-n)_r vanishes")
        coeff = pochhammer(fp.total - n, r) / (den * math.factorial(r)) * inner
        total += float(coeff) * complex_pochhammer(complex(fp.lambda2) - z, r)
    return total / pre


def gamma_weight(fp: FourierParams, x: float) -> complex:
    """``G(g1-ix) G(g2+ix) G(l1-ix) G(l2+ix)``."""
    ix = 1j * x
    return cmath.exp(
        log_gamma_complex(complex(fp.gamma1) - ix)
        + log_gamma_complex(complex(fp.gamma2) + ix)
        + log_gamma_complex(complex(fp.lambda1) - ix)
        + log_gamma_complex(complex(fp.lambda2) + ix)
    )


def pair_integrand(fp: FourierParams, n: int, m: int, x: float, variant=PhiVariant.PRINTED) -> complex:
    return gamma_weight(fp, x) * eval_phi(fp, n, 1j * x, variant) * eval_chi(fp, m, -1j * x)


def _lgamma(x: Fraction) -> float:
    return math.lgamma(float(x))


def closed_form(fp: FourierParams, n: int, m: int, normalization=Normalization.TWO_PI) -> complex:
    """Stated right side:
    ``n! N B(g1+g2, l1+l2) G(g1+l2) G(g2+l1+1) (1-S)_n
    / ((g2+l1-n-vn) (1-l1-l2)_n (-g2-l1)_n) delta_nm`` with ``N`` the
    chosen normalization constant."""
    if n != m:
        return complex(0)
    g1, g2, l1, l2, v = fp.gamma1, fp.gamma2, fp.lambda1, fp.lambda2, fp.upsilon
    log_part = (
        _lgamma(g1 + g2) + _lgamma(l1 + l2) - _lgamma(fp.total)
        + _lgamma(g1 + l2) + _lgamma(g2 + l1 + 1)
    )
    rational = (
        math.factorial(n) * pochhammer(1 - fp.total, n)
        / ((g2 + l1 - n - v * n) * pochhammer(1 - l1 - l2, n) * pochhammer(-g2 - l1, n))
    )
    return Normalization(normalization).factor * float(rational) * math.exp(log_part)


def barnes_value(a, b, c, d) -> float:
    """``int G(a+ix) G(b+ix) G(c-ix) G(d-ix) dx`` by Barnes' first lemma."""
    a, b, c, d = (float(to_rational(t)) for t in (a, b, c, d))
    return 2 * math.pi * math.exp(
        math.lgamma(a + c) + math.lgamma(a + d) + math.lgamma(b + c) + math.lgamma(b + d)
        - math.lgamma(a + b + c + d)
    )


def _cutoff(f, tol: float, start: float = 4.0) -> float:
    ref = max(abs(f(0.0)), 1e-300)
    x = start
    while abs(f(x)) + abs(f(-x)) > tol * ref * 1e-2:
        x *= 1.25
        if x > 400:
            break
    return x


def integrate_line(f, tol: float = 1e-12, cutoff: float | None = None) -> tuple[complex, float]:
    """Integral of a complex function over the real line, truncated where
    ``|f|`` has decayed below ``tol`` relative to ``|f(0)|``; panels are
    summed in a fixed order."""
    from scipy import integrate

    X = cutoff if cutoff is not None else _cutoff(f, tol)
    floor = 1e-15 * abs(f(0.0)) * X
    edges = [-X + 2 * X * k / 16 for k in range(17)]
    re_total = im_total = 0.0
    err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        re, e1 = integrate.quad(lambda t: f(t).real, lo, hi, epsabs=floor, epsrel=1e-12, limit=200)
        im, e2 = integrate.quad(lambda t: f(t).imag, lo, hi, epsabs=floor, epsrel=1e-12, limit=200)
        re_total += re
        im_total += im
        err += e1 + e2
    return complex(re_total, im_total), X


def pair_integral(fp: FourierParams, n: int, m: int, cutoff: float | None = None,
                  variant=PhiVariant.PRINTED) -> tuple[complex, float]:
    return integrate_line(lambda x: pair_integrand(fp, n, m, x, variant), cutoff=cutoff)


def verify_parseval_pair(fp: FourierParams, n: int, m: int, normalization=None,
                         tol: float = 1e-6, variant=PhiVariant.PRINTED) -> ResidualReport:
    """Numeric biorthogonality integral of ``Phi_n`` and ``chi_m`` against
    both normalizations of the stated norm.

    Off-diagonal pairs are judged relative to the diagonal scale (the
    ``n = m = 0`` weight mass). If ``normalization`` is given the verdict is
    for that one only.
    """
    fp.check(max(n, m))
    variant = PhiVariant(variant)
    value, X = pair_integral(fp, n, m, variant=variant)
    scale = abs(barnes_value(fp.gamma2, fp.lambda2, fp.gamma1, fp.lambda1))
    residuals = {}
    for norm in Normalization:
        target = closed_form(fp, n, m, norm)
        denom = abs(target) if n == m else scale
        residuals[norm.value] = abs(value - target) / denom
    if normalization is not None:
        chosen = [Normalization(normalization).value]
    else:
        chosen = [k for k, r in residuals.items() if r <= tol]
    verdict = Verdict.PASS if any(residuals[k] <= tol for k in chosen) else Verdict.FAIL
    matched = [k for k, r in residuals.items() if r <= tol]
    best = min(residuals.values()) if normalization is None else residuals[chosen[0]]
    sample = {**fp.as_dict(), "n": n, "m": m}
    notes = f"integral={value.real:.12g}{value.imag:+.12g}j cutoff={X:.4g}; matches: {matched or 'none'}"
    norm_label = Normalization(normalization).value if normalization else "auto"
    rep = ResidualReport(f"fourier-pair-{variant.value}", Mode.NUMERIC_LIMIT, verdict, best, [sample],
                         variant=f"{variant.value}/{norm_label}", notes=notes)
    rep.details = {"integral": value, "residuals": residuals}
    return rep


# -- Parseval at the level of the transformed functions --------------------

def _beta_complex(a: complex, b: complex) -> complex:
    return cmath.exp(log_gamma_complex(a) + log_gamma_complex(b) - log_gamma_complex(a + b))


def fourier_s(p, q, upsilon: int, n: int, gamma1, gamma2, omega: float) -> complex:
    """Fourier transform of ``e^(g1 x) (1+e^x)^(-g1-g2) M_n(p,q,v; e^x)``,
    summed monomial by monomial as Beta integrals."""
    g1, g2 = complex(to_rational(gamma1)), complex(to_rational(gamma2))
    poly = finite_m(p, q, upsilon, n)
    return sum(
        float(c) * _beta_complex(g1 - 1j * omega + k, g2 + 1j * omega - k)
        for k, c in enumerate(poly.coeffs) if c
    )


def fourier_r(a, b, upsilon: int, m: int, lambda1, lambda2, omega: float) -> complex:
    """Fourier transform of ``e^(l2 x) (1+e^x)^(-l1-l2) Mfrak_m(a,b,v; e^x)``."""
    l1, l2 = complex(to_rational(lambda1)), complex(to_rational(lambda2))
    poly = finite_mfrak(a, b, upsilon, m)
    return sum(
        float(c) * _beta_complex(l2 - 1j * omega + k, l1 + 1j * omega - k)
        for k, c in enumerate(poly.coeffs) if c
    )


def parseval_check(fp: FourierParams, p, q, a, b, n: int, m: int, tol: float = 1e-8) -> ResidualReport:
    """``int s r dx = 1/(2 pi) int F[s] conj(F[r]) dw`` with the left side
    evaluated exactly as a Beta-integral sum."""
    v = fp.upsilon
    g1, g2, l1, l2 = fp.gamma1, fp.gamma2, fp.lambda1, fp.lambda2
    mp, mfr = finite_m(p, q, v, n), finite_mfrak(a, b, v, m)
    prod = mp * mfr
    if prod.degree >= g2 + l1:
        raise ValueError("left-hand integral diverges for these parameters")
    lhs, scale = 0.0, 0.0
    for k, c in enumerate(prod.coeffs):
        if c:
            term = float(c) * math.exp(_lgamma(g1 + l2 + k) + _lgamma(g2 + l1 - k) - _lgamma(fp.total))
            lhs += term
            scale += abs(term)
    value, X = integrate_line(
        lambda w: fourier_s(p, q, v, n, g1, g2, w) * fourier_r(a, b, v, m, l1, l2, w).conjugate()
    )
    value /= 2 * math.pi
    # cancellation can make the left side ~0; judge against the term scale
    residual = abs(value - lhs) / scale
    sample = {**fp.as_dict(), "p": str(p), "q": str(q), "a": str(a), "b": str(b), "n": n, "m": m}
    return ResidualReport(
        "parseval", Mode.NUMERIC_LIMIT, Verdict.PASS if residual <= tol else Verdict.FAIL,
        residual, [sample], notes=f"lhs={lhs:.15g} rhs={value.real:.15g}{value.imag:+.3g}j",
    )

"""Exact moment functionals and the orthogonality checks built on them.

Inner products are returned normalized by the weight mass ``m0``; the mass
itself is a :class:`~biortho.scalar.GammaRatio` token, so the whole
verification stays in rational arithmetic for rational ``p, q``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .families import (
    ParamSet,
    classic_m,
    finite_m,
    finite_mfrak,
    jacobi_j,
    jacobi_k,
    konhauser_y,
    konhauser_z,
)
from .poly import Polynomial
from .report import Mode, ResidualReport, Verdict, exact_verdict
from .scalar import GammaRatio, beta_ratio, pochhammer, to_rational


class DivergentError(ArithmeticError):
    """A requested moment of the weight does not exist."""


class WeightKind(str, enum.Enum):
    M_WEIGHT = "M_WEIGHT"    # x^q (1+x)^-(p+q) on (0, inf)
    LAGUERRE = "LAGUERRE"    # x^gamma e^-x on (0, inf)
    JACOBI = "JACOBI"        # (1-x)^p (1+x)^q on (-1, 1)


@dataclass(frozen=True)
class WeightSpec:
    kind: WeightKind
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    @classmethod
    def m_weight(cls, p, q) -> "WeightSpec":
        return cls(WeightKind.M_WEIGHT, to_rational(p), to_rational(q))

    @classmethod
    def laguerre(cls, gamma) -> "WeightSpec":
        return cls(WeightKind.LAGUERRE, Fraction(0), to_rational(gamma))

    @classmethod
    def jacobi(cls, p, q) -> "WeightSpec":
        return cls(WeightKind.JACOBI, to_rational(p), to_rational(q))

    @property
    def gamma(self) -> Fraction:
        return self.q

    def mass(self) -> GammaRatio:
        """``m0``: the integral of the weight itself."""
        if self.kind is WeightKind.M_WEIGHT:
            return beta_ratio(self.q + 1, self.p - 1)
        if self.kind is WeightKind.LAGUERRE:
            return GammaRatio(Fraction(1), (self.q + 1,), ())
        return beta_ratio(self.p + 1, self.q + 1) * GammaRatio(pow2=self.p + self.q + 1)

    def max_moment(self) -> float:
        if self.kind is WeightKind.M_WEIGHT:
            return float(self.p) - 1
        return math.inf

    def moment(self, k: int) -> Fraction:
        """Normalized moment ``m_k / m_0`` of ``x^k``."""
        p, q = self.p, self.q
        if self.kind is WeightKind.M_WEIGHT:
            if k >= p - 1:
                raise DivergentError(f"moment {k} diverges for p={p}")
            return pochhammer(q + 1, k) / pochhammer(p - 1 - k, k)
        if self.kind is WeightKind.LAGUERRE:
            return pochhammer(q + 1, k)
        # x = 1 - 2u, u = (1-x)/2 has moments (p+1)_k / (p+q+2)_k
        x_in_u = Polynomial([Fraction(1), Fraction(-2)]) ** k
        return sum((c * self.u_moment(i) for i, c in enumerate(x_in_u.coeffs)), Fraction(0))

    def u_moment(self, k: int) -> Fraction:
        """JACOBI only: normalized moment of ``((1-x)/2)^k``."""
        return pochhammer(self.p + 1, k) / pochhammer(self.p + self.q + 2, k)

    def mixed_moment(self, a: int, b: int) -> Fraction:
        """JACOBI only: ``int (1-x)^(p+a) (1+x)^(q+b) / int (1-x)^p (1+x)^q``."""
        p, q = self.p, self.q
        return 2 ** (a + b) * pochhammer(p + 1, a) * pochhammer(q + 1, b) / pochhammer(p + q + 2, a + b)


@dataclass(frozen=True)
class MomentTable:
    weight: WeightSpec
    normalized_moments: tuple

    @classmethod
    def build(cls, weight: WeightSpec, size: int) -> "MomentTable":
        return cls(weight, tuple(weight.moment(k) for k in range(size)))


def inner(weight: WeightSpec, f: Polynomial, g: Polynomial) -> Fraction:
    """``<f, g> / m0`` against the weight, exact."""
    h = f * g
    if h.is_zero():
        return Fraction(0)
    if weight.kind is WeightKind.M_WEIGHT and h.degree >= weight.p - 1:
        raise DivergentError(
            f"deg f + deg g = {h.degree} is not below p - 1 = {weight.p - 1}"
        )
    if weight.kind is WeightKind.JACOBI:
        hu = h.compose(Polynomial([Fraction(1), Fraction(-2)]))
        return sum((c * weight.u_moment(k) for k, c in enumerate(hu.coeffs)), Fraction(0))
    return sum((c * weight.moment(k) for k, c in enumerate(h.coeffs) if c), Fraction(0))


def inner_absolute(weight: WeightSpec, f: Polynomial, g: Polynomial) -> GammaRatio:
    return weight.mass() * inner(weight, f, g)


def mort_norm(p, q, upsilon: int, n: int) -> Fraction:
    """Right side of the finite biorthogonality relation divided by ``m0``.

    ``n! G(p-n) G(q+1+vn) / ((p-1-n-vn) G(p+q-n))`` over
    ``B(q+1, p-1)``, reduced to
    ``n! (p-1) (q+1)_{vn} (p+q-n)_n / ((p-n)_n (p-1-n-vn))``.
    """
    p, q = to_rational(p), to_rational(q)
    return (
        math.factorial(n) * (p - 1) * pochhammer(q + 1, upsilon * n) * pochhammer(p + q - n, n)
        / (pochhammer(p - n, n) * (p - 1 - n - upsilon * n))
    )


def _divergent(claim: str, sample: dict, note: str) -> ResidualReport:
    return ResidualReport(claim, Mode.EXACT_SCALAR, Verdict.DIVERGENT, None, [sample], notes=note)


def verify_Mort(params: ParamSet, n: int, m: int) -> ResidualReport:
    """``<M_n, Mfrak_m>`` against ``delta_{nm}`` times the closed-form norm."""
    p, q, v = params.p, params.q, params.upsilon
    sample = {**params.as_dict(), "n": n, "m": m}
    w = WeightSpec.m_weight(p, q)
    try:
        lhs = inner(w, finite_m(p, q, v, n), finite_mfrak(p, q, v, m))
    except DivergentError as exc:
        return _divergent("mort", sample, str(exc))
    rhs = mort_norm(p, q, v, n) if n == m else Fraction(0)
    residual = lhs - rhs
    report = ResidualReport("mort", Mode.EXACT_SCALAR, exact_verdict(residual), residual, [sample])
    report.details = {"lhs_normalized": lhs, "rhs_normalized": rhs, "mass": w.mass()}
    absolute = (w.mass() * lhs).exact()
    if absolute is not None:
        report.details["lhs_absolute"] = absolute
    return report


def verify_monomial_conditions(params: ParamSet, n: int) -> ResidualReport:
    """``<M_n, x^j>`` and ``<Mfrak_n, x^(vj)>`` vanish for ``j < n`` only."""
    p, q, v = params.p, params.q, params.upsilon
    sample = {**params.as_dict(), "n": n}
    w = WeightSpec.m_weight(p, q)
    mn, mfn = finite_m(p, q, v, n), finite_mfrak(p, q, v, n)
    try:
        first = [inner(w, mn, Polynomial.monomial(j)) for j in range(n + 1)]
        second = [inner(w, mfn, Polynomial.monomial(v * j)) for j in range(n + 1)]
    except DivergentError as exc:
        return _divergent("monomial", sample, str(exc))
    residual = first[:-1] + second[:-1]
    ok = all(r == 0 for r in residual) and first[-1] != 0 and second[-1] != 0
    notes = "vacuous below j=0" if n == 0 else ""
    report = ResidualReport(
        "monomial", Mode.EXACT_SCALAR, Verdict.PASS if ok else Verdict.FAIL,
        residual, [sample], notes=notes,
    )
    report.details = {"diagonal": (first[-1], second[-1])}
    return report


def verify_konhauser(gamma, upsilon: int, n: int, m: int) -> ResidualReport:
    """Laguerre-weight biorthogonality of ``Z_n`` and ``Y_m``; the norm
    ``G(vn+gamma+1)/n!`` is compared after dividing by ``G(gamma+1)``."""
    gamma = to_rational(gamma)
    w = WeightSpec.laguerre(gamma)
    lhs = inner(w, konhauser_z(gamma, upsilon, n), konhauser_y(gamma, upsilon, m))
    rhs = pochhammer(gamma + 1, upsilon * n) / math.factorial(n) if n == m else Fraction(0)
    residual = lhs - rhs
    sample = {"gamma": str(gamma), "upsilon": upsilon, "n": n, "m": m}
    report = ResidualReport("konhauser", Mode.EXACT_SCALAR, exact_verdict(residual), residual, [sample])
    report.details = {"lhs_normalized": lhs, "rhs_normalized": rhs, "mass": w.mass()}
    absolute = (w.mass() * lhs).exact()
    if absolute is not None:
        report.details["lhs_absolute"] = absolute
    return report


def jacobi_norm(p, q, upsilon: int, n: int) -> Fraction:
    """``2^(p+q+1) G(p+vn+1) G(q+n+1) / (n! G(p+q+n+1) (p+q+vn+n+1))`` over
    the mass ``2^(p+q+1) B(p+1, q+1)``."""
    p, q = to_rational(p), to_rational(q)
    return (
        pochhammer(p + 1, upsilon * n) * pochhammer(q + 1, n) * (p + q + 1)
        / (math.factorial(n) * pochhammer(p + q + 1, n) * (p + q + upsilon * n + n + 1))
    )


def verify_jacobi_biorth(p, q, upsilon: int, n: int, m: int) -> ResidualReport:
    p, q = to_rational(p), to_rational(q)
    w = WeightSpec.jacobi(p, q)
    lhs = inner(w, jacobi_j(p, q, upsilon, n), jacobi_k(p, q, upsilon, m))
    rhs = jacobi_norm(p, q, upsilon, n) if n == m else Fraction(0)
    residual = lhs - rhs
    sample = {"p": str(p), "q": str(q), "upsilon": upsilon, "n": n, "m": m}
    report = ResidualReport("jacobi-biorth", Mode.EXACT_SCALAR, exact_verdict(residual), residual, [sample])
    report.details = {"lhs_normalized": lhs, "rhs_normalized": rhs, "mass": w.mass()}
    absolute = (w.mass() * lhs).exact()
    if absolute is not None:
        report.details["lhs_absolute"] = absolute
    return report


def verify_classic_orth(p, q, n: int, m: int) -> ResidualReport:
    """Orthogonality of the classical finite ``M_n^(p,q)`` (norm from the
    same weight; ``n!G(p-n)G(q+n+1)/((p-2n-1)G(p+q-n))``)."""
    p, q = to_rational(p), to_rational(q)
    w = WeightSpec.m_weight(p, q)
    sample = {"p": str(p), "q": str(q), "n": n, "m": m}
    try:
        lhs = inner(w, classic_m(p, q, n, strict=False), classic_m(p, q, m, strict=False))
    except DivergentError as exc:
        return _divergent("classic-orth", sample, str(exc))
    rhs = (
        math.factorial(n) * (p - 1) * pochhammer(q + 1, n) * pochhammer(p + q - n, n)
        / (pochhammer(p - n, n) * (p - 2 * n - 1))
        if n == m else Fraction(0)
    )
    residual = lhs - rhs
    return ResidualReport("classic-orth", Mode.EXACT_SCALAR, exact_verdict(residual), residual, [sample])

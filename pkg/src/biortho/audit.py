"""Executable claims for every identity of the finite pair and its relatives.

Each claim is a pure function of ``(AuditConfig, rng)`` returning a
:class:`~biortho.report.ResidualReport`. Polynomial identities in ``p, q``
are certified by exact evaluation at random rational parameter points, more
of them than twice the degree bound of the residual in ``(p, q)``; a single
nonzero residual is a counterexample, and for a nonzero polynomial residual
a zero at every sample has probability zero.

Where the stated form of an identity is refuted, a derived variant is
registered next to it (``*-corrected``, ``*-repaired``); the printed form is
never replaced. ``EXPECTED`` fixes the verdict of every claim and
``LOCKED_IDS`` names the exact nonzero residuals of the refuted forms, so
``run_claims`` can report drift in either direction.
"""
from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .families import (
    ParamSet,
    classic_m,
    finite_m,
    finite_mfrak,
    jacobi_j,
    jacobi_k,
    konhauser_y,
    konhauser_z,
    m_hypergeometric_display,
)
from .fourier import (
    FourierParams,
    Normalization,
    PhiVariant,
    parseval_check,
    verify_parseval_pair,
)
from .inner import (
    verify_classic_orth,
    verify_jacobi_biorth,
    verify_konhauser,
    verify_monomial_conditions,
    verify_Mort,
)
from .poly import (
    Polynomial,
    TruncSeries,
    series_compose,
    series_exp_linear,
    series_pow,
    theta,
    theta_shifted_product,
)
from .report import Mode, ResidualReport, Verdict, is_zero_residual
from .scalar import binomial, pochhammer, to_rational
from .transforms import (
    FracKind,
    FracOrder,
    GammaMonomialSum,
    Variant,
    fractional_shift,
    laplace_closed_form,
    laplace_termwise,
)

NUMERIC_TOL = 1e-9
X = Polynomial.x()
ONE_PLUS_X = Polynomial([Fraction(1), Fraction(1)])


@dataclass(frozen=True)
class AuditConfig:
    seed: int = 0
    n_max: int = 4
    trials: int = 20
    upsilons: tuple = (1, 2, 3)

    @property
    def series_order(self) -> int:
        return self.n_max + 4


# -- sampling ---------------------------------------------------------------

def random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 13) -> Fraction:
    den = rng.randint(2, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def formal_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Random ``(p, q)`` with ``p``, ``q`` and ``p + q`` all non-integers, so
    no Pochhammer denominator of the audited identities can vanish."""
    while True:
        p, q = random_rational(rng, -20, 40), random_rational(rng, -5, 15)
        if all(v.denominator != 1 for v in (p, q, p + q)):
            return p, q


def admissible_point(rng: random.Random, upsilon: int, n_max: int) -> tuple[Fraction, Fraction]:
    bound = (upsilon + 1) * n_max + 1
    p = bound + Fraction(rng.randint(1, 200), rng.randint(1, 7))
    q = -1 + Fraction(rng.randint(1, 60), rng.randint(1, 7))
    return p, q


def sample_count(cfg: AuditConfig, degree_bound: int) -> int:
    return max(cfg.trials, 2 * degree_bound + 1)


# -- report assembly ----------------------------------------------------------

class _Collector:
    """Accumulates samples; keeps the first nonzero residual."""

    def __init__(self, claim: str, mode: Mode, variant: str = ""):
        self.claim, self.mode, self.variant = claim, mode, variant
        self.samples: list = []
        self.failures: list = []
        self.residual = None
        self.worst = 0.0

    def exact(self, sample: dict, residual) -> None:
        self.samples.append(sample)
        if not is_zero_residual(residual):
            self.failures.append(sample)
            if self.residual is None:
                self.residual = residual
        elif self.residual is None and not self.failures:
            self.residual = residual

    def numeric(self, sample: dict, residual: float, tol: float = NUMERIC_TOL) -> None:
        self.samples.append(sample)
        if not residual <= tol:
            self.failures.append(sample)
        self.worst = max(self.worst, residual) if residual == residual else math.inf

    def report(self, notes: str = "") -> ResidualReport:
        verdict = Verdict.FAIL if self.failures else Verdict.PASS
        shown = self.failures[:5] if self.failures else self.samples[:10]
        tail = f"{len(self.samples)} samples, {len(self.failures)} failing"
        residual = self.residual if self.mode.exact else self.worst
        return ResidualReport(
            self.claim, self.mode, verdict, residual, shown, self.variant,
            notes=f"{notes}; {tail}" if notes else tail,
        )


def _merge(claim: str, reports: list[ResidualReport], variant: str = "", notes: str = "") -> ResidualReport:
    """Combine sub-reports of one claim (FAIL dominates, then DIVERGENT)."""
    failing = [r for r in reports if r.verdict is Verdict.FAIL]
    divergent = [r for r in reports if r.verdict is Verdict.DIVERGENT]
    verdict = Verdict.FAIL if failing else (Verdict.DIVERGENT if divergent and len(divergent) == len(reports) else Verdict.PASS)
    chosen = failing or [r for r in reports if r.verdict is Verdict.PASS] or reports
    mode = reports[0].mode
    if mode.exact:
        residual = chosen[0].residual
    else:
        residual = max((float(r.residual) for r in reports if r.residual is not None), default=0.0)
    samples = [s for r in chosen[:5] for s in r.samples]
    tail = f"{len(reports)} cases, {len(failing)} failing, {len(divergent)} divergent"
    return ResidualReport(claim, mode, verdict, residual, samples[:10], variant,
                          notes=f"{notes}; {tail}" if notes else tail)


# -- derivative relations ---------------------------------------------------

def _d15(p, q, v, n, variant) -> Polynomial:
    lhs = finite_m(p, q, v, n).derivative()
    if variant is Variant.PRINTED:
        inner = finite_m(1 - p - q, p - 1 - v, v, n - 1)
    else:
        inner = finite_m(p - 1 - v, q + v, v, n - 1)
    factor = Polynomial.monomial(v - 1, Fraction((-1) ** (v - 1))) * (-v * n * pochhammer(n + 1 - p, v))
    return lhs - factor * inner


def _d16(p, q, v, n, variant) -> Polynomial:
    lhs = theta(finite_m(p, q, v, n))
    c = v * n * pochhammer(v * n - v + q + 1, v)
    if variant is Variant.PRINTED:
        rhs = finite_m(-p - q, p, v, n) * (v * n) + finite_m(1 - p - q, p - 1, v, n - 1) * c
    else:
        rhs = finite_m(p, q, v, n) * (v * n) + finite_m(p - 1, q, v, n - 1) * c
    return lhs - rhs


def _d17(p, q, v, n, variant) -> Polynomial:
    lhs = theta(finite_m(p, q, v, n))
    if variant is Variant.PRINTED:
        rhs = finite_m(1 - p - q, p, v, n) * (v * n + q) - finite_m(-p - q, p, v, n) * q
    else:
        rhs = finite_m(p, q - 1, v, n) * (v * n + q) - finite_m(p, q, v, n) * q
    return lhs - rhs


_DERIVATIVE = {15: _d15, 16: _d16, 17: _d17}
_DERIVATIVE_NOTES = {
    15: "corrected slots M_{n-1}(p-1-v, q+v) re-derived by shifting j -> j+1 in the defining sum",
    16: "corrected form transported from the (x-1)D recurrence of J_n through the forward J/M map",
    17: "corrected form transported from the (x-1)D recurrence of J_n through the forward J/M map",
}


def derivative_residual(eq: int, p, q, upsilon: int, n: int, variant=Variant.PRINTED) -> Polynomial:
    return _DERIVATIVE[eq](to_rational(p), to_rational(q), upsilon, n, Variant(variant))


def check_derivative_relation(eq: int, cfg: AuditConfig, rng: random.Random, variant) -> ResidualReport:
    variant = Variant(variant)
    col = _Collector(f"eq{eq}-{variant.value}", Mode.EXACT_POLY, variant.value)
    for v in cfg.upsilons:
        for n in range(1, cfg.n_max + 1):
            for _ in range(sample_count(cfg, v * n + n + 2)):
                p, q = formal_point(rng)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n},
                          derivative_residual(eq, p, q, v, n, variant))
    return col.report(_DERIVATIVE_NOTES[eq] if variant is Variant.CORRECTED else "as printed")


def check_derivative_relation_15(cfg, rng, variant=Variant.PRINTED):
    return check_derivative_relation(15, cfg, rng, variant)


def check_derivative_relation_16(cfg, rng, variant=Variant.PRINTED):
    return check_derivative_relation(16, cfg, rng, variant)


def check_derivative_relation_17(cfg, rng, variant=Variant.PRINTED):
    return check_derivative_relation(17, cfg, rng, variant)


# -- differential equation ----------------------------------------------------

def mdifequ_residual(p, q, upsilon: int, n: int) -> Polynomial:
    m = finite_m(p, q, upsilon, n)
    first = theta(theta_shifted_product(m, q + 1 - upsilon, upsilon))
    second = theta(theta_shifted_product(m, n + 1 - p, upsilon), -upsilon * n)
    return first - second.shift_degree(upsilon) * ((-1) ** upsilon)


def check_mdifequ(cfg: AuditConfig, rng: random.Random) -> ResidualReport:
    col = _Collector("mdifequ", Mode.EXACT_POLY)
    for v in cfg.upsilons:
        for n in range(cfg.n_max + 1):
            for _ in range(sample_count(cfg, v * n + n + 2)):
                p, q = formal_point(rng)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n}, mdifequ_residual(p, q, v, n))
    return col.report()


# -- generating functions -------------------------------------------------------

def _block_ratio(upsilon: int, num_base, den_base, num_v: int, k: int) -> Fraction:
    """``prod (D(num_v, num_base))_k / prod (D(v, den_base))_k`` via the block
    identity ``w^(wk) prod (D(w, g))_k = (g)_{wk}``."""
    num = pochhammer(num_base, num_v * k) / Fraction(num_v) ** (num_v * k)
    den = pochhammer(den_base, upsilon * k) / Fraction(upsilon) ** (upsilon * k)
    return num / den


def eq13_residuals(p, q, upsilon: int, order: int) -> list[Polynomial]:
    """Per-order residuals (polynomials in ``x``) of the ``(1+t)^(q-1)``
    generating function."""
    p, q, v = to_rational(p), to_rational(q), upsilon
    one_plus_t = TruncSeries([Fraction(1), Fraction(1)], order)
    prefactor = series_pow(one_plus_t, q - 1)
    u = TruncSeries([Fraction(0), Fraction(v + 1)], order) * series_pow(one_plus_t, Fraction(-(v + 1)))
    rhs = [Polynomial() for _ in range(order + 1)]
    uk = TruncSeries([Fraction(1)], order)
    for k in range(order + 1):
        a = _block_ratio(v, 1 - q, 1 - p - q, v + 1, k) / math.factorial(k)
        a *= (Fraction(-(v + 1)) / v) ** (v * k)
        s = uk * prefactor
        for n in range(order + 1):
            if s[n]:
                rhs[n] = rhs[n] + Polynomial.monomial(v * k, a * s[n])
        uk = uk * u
    out = []
    for n in range(order + 1):
        c = pochhammer(1 - q, n) / (pochhammer(1 - p - q, v * n) * math.factorial(n))
        out.append(finite_m(p, q, v, n) * c - rhs[n])
    return out


def eq14_residuals(p, q, upsilon: int, order: int) -> list[Polynomial]:
    """Per-order residuals of the ``e^(-t)`` generating function of
    ``M_n(p-n, q+n)``."""
    p, q, v = to_rational(p), to_rational(q), upsilon
    exp_part = series_exp_linear(Fraction(-1), order)
    rhs = [Polynomial() for _ in range(order + 1)]
    for k in range(order + 1):
        a = _block_ratio(v, 1 - q, 1 - p - q, v, k) * Fraction((-1) ** (v * k)) / math.factorial(k)
        for n in range(k, order + 1):
            rhs[n] = rhs[n] + Polynomial.monomial(v * k, a * exp_part[n - k])
    return [
        finite_m(p - n, q + n, v, n) / (pochhammer(1 - p - q, v * n) * math.factorial(n)) - rhs[n]
        for n in range(order + 1)
    ]


def eq18_residuals(p, q, upsilon: int, x0, order: int) -> list[Fraction]:
    """Exact per-order residuals of the derivative formula at rational ``x0``.

    ``(1+x)^(-p) [x + (1-t)^(1/v)]^p = [1 + ((1-t)^(1/v) - 1)/(1+x)]^p`` has
    constant term 1, so every series power involved is exact.
    """
    p, q, x0 = to_rational(p), to_rational(q), to_rational(x0)
    one_minus_t = TruncSeries([Fraction(1), Fraction(-1)], order)
    h = series_pow(one_minus_t, Fraction(1, upsilon)) - 1
    g = series_pow(one_minus_t, (q - 1) / upsilon) * series_pow(1 + h * (1 / (1 + x0)), p)
    out = []
    for n in range(order + 1):
        rhs = (-1) ** n * (1 + x0) ** n * math.factorial(n) * g[n]
        out.append(finite_mfrak(p - n, q + n, upsilon, n)(x0) - rhs)
    return out


def mdog_values(p, q, upsilon: int, x0: float, t: float, terms: int) -> tuple[float, float]:
    """Partial sum of the left side with ``terms + 1`` terms and the stated
    closed form, both at numeric ``(x0, t)``."""
    lhs = 0.0
    for n in range(terms + 1):
        c = finite_mfrak(p - n, q + n, upsilon, n)(to_rational(x0))
        lhs += float(c) * t ** n / (2 ** n * (1 + float(x0)) ** n * math.factorial(n))
    x, s = float(x0), 1 + 1 / (2 * t)
    rhs = (1 + x) ** (-float(p)) * s ** ((float(q) - 1) / upsilon) * (x + s ** (1 / upsilon)) ** float(p)
    return lhs, rhs


def _float_series(coeffs, order) -> TruncSeries:
    return TruncSeries([float(c) for c in coeffs], order)


def mgen_residuals(p, q, upsilon: int, x0, zeta, theta_, order: int) -> list[float]:
    """Coefficientwise residuals in ``t`` after substituting the stated
    ``u(t)`` into the left side (double precision)."""
    v = upsilon
    x = float(to_rational(x0))
    pf, qf, zf, tf = (float(to_rational(a)) for a in (p, q, zeta, theta_))
    one_minus_t = _float_series([1, -1], order)
    one_plus_t = _float_series([1, 1], order)
    root = series_pow(one_minus_t, 1.0 / v)
    u = (
        _float_series([0, -1], order) * ((1 + x) ** zf)
        * series_pow(one_minus_t, (1 - tf) / v)
        * series_pow(root + x, -1 - zf)
    )
    f = _float_series([
        float(finite_mfrak(to_rational(p) + to_rational(zeta) * n, to_rational(q) + to_rational(theta_) * n, v, n)(
            to_rational(x0))) / math.factorial(n)
        for n in range(order + 1)
    ], order)
    lhs = series_compose(f, u)
    bump = series_pow(one_plus_t, float(v)) - 1
    brace = (
        (bump * (zf + tf) + float(v)) * series_pow(one_plus_t, -1.0)
        - bump * (x * (1 + zf)) * series_pow(_float_series([1 + x, x], order), -1.0)
    )
    rhs = (
        series_pow(one_plus_t, -pf - qf)
        * series_pow(_float_series([1, x / (1 + x)], order), pf)
        * series_pow(brace, -1.0)
        * float(v)
    )
    scale = max(1.0, max(abs(c) for c in lhs.coeffs))
    return [abs(a - b) / scale for a, b in zip(lhs.coeffs, rhs.coeffs)]


def check_generating_function(claim: str, cfg: AuditConfig, rng: random.Random) -> ResidualReport:
    order = cfg.series_order
    if claim in ("eq13", "eq14"):
        fn = eq13_residuals if claim == "eq13" else eq14_residuals
        col = _Collector(claim, Mode.EXACT_POLY)
        for v in cfg.upsilons:
            for _ in range(sample_count(cfg, (v + 1) * order + 2) // 4 + 1):
                p, q = formal_point(rng)
                res = fn(p, q, v, order)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "T": order}, res)
        note = "exact in x over rational (p, q); per-order residuals t^0..t^T"
        if claim == "eq13":
            note += "; the D(v+1, 1-q) block and ((v+1)x/v)^v argument are kept as printed"
        return col.report(note)
    if claim == "eq18":
        col = _Collector(claim, Mode.EXACT_SCALAR)
        for v in cfg.upsilons:
            for _ in range(cfg.trials):
                p, q = formal_point(rng)
                x0 = Fraction(rng.randint(1, 30), rng.randint(1, 9))
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "x0": str(x0), "T": order},
                          eq18_residuals(p, q, v, x0, order))
        return col.report("exact at rational x0 via the constant-term-1 rewriting of the bracket")
    if claim == "mdog":
        col = _Collector(claim, Mode.NUMERIC_SERIES)
        for v in cfg.upsilons:
            for _ in range(max(3, cfg.trials // 5)):
                p, q = admissible_point(rng, v, 0)
                x0 = Fraction(rng.randint(1, 8), rng.randint(1, 4))
                t = 1 / 16
                lhs, rhs = mdog_values(p, q, v, x0, t, order)
                lhs4, _ = mdog_values(p, q, v, x0, t, order + 4)
                res = abs(lhs - rhs) / max(abs(rhs), 1e-300)
                res4 = abs(lhs4 - rhs) / max(abs(rhs), 1e-300)
                if res <= NUMERIC_TOL and not res4 <= res / 10 and res > 0:
                    res = math.inf  # tie-break: a genuine match must keep improving with T
                col.numeric({"p": str(p), "q": str(q), "upsilon": v, "x0": str(x0), "t": t, "T": order}, res)
        return col.report(
            "double precision at sample t; the stated right side is not analytic at t = 0 "
            "(powers of 1 + 1/(2t)), so no coefficient comparison is possible"
        )
    if claim == "mgen":
        col = _Collector(claim, Mode.NUMERIC_SERIES)
        mg_order = min(order, 8)
        for v in cfg.upsilons:
            for zeta, th in ((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 3))):
                p, q = admissible_point(rng, v, 0)
                x0 = Fraction(rng.randint(1, 8), rng.randint(1, 4))
                res = mgen_residuals(p, q, v, x0, zeta, th, mg_order)
                col.numeric({"p": str(p), "q": str(q), "upsilon": v, "x0": str(x0),
                             "zeta": str(zeta), "theta": str(th), "T": mg_order}, max(res))
        return col.report(
            "series in t after substituting u(t) (double precision, |t| <= 1/8 regime); "
            "u(t) is built from (1-t) while the right side uses (1+t), which the "
            "statement never reconciles"
        )
    raise KeyError(claim)


# -- connection formulas ------------------------------------------------------

_TWO_X_PLUS_1 = Polynomial([Fraction(1), Fraction(2)])
_X_MINUS_1_HALF = Polynomial([Fraction(-1, 2), Fraction(1, 2)])


def connection_residual(claim: str, p, q, upsilon: int, n: int):
    p, q, v = to_rational(p), to_rational(q), upsilon
    sign, fact = (-1) ** n, math.factorial(n)
    if claim == "JM-forward":
        return finite_m(p, q, v, n) - jacobi_j(q, -p - q, v, n, strict=False).compose(_TWO_X_PLUS_1) * (sign * fact)
    if claim == "KM-forward":
        return finite_mfrak(p, q, v, n) - jacobi_k(q, -p - q, v, n, strict=False).compose(_TWO_X_PLUS_1) * (sign * fact)
    if claim == "JM-inverse":
        return jacobi_j(p, q, v, n, strict=False) - finite_m(q, -p - q, v, n).compose(_X_MINUS_1_HALF) * Fraction(sign, fact)
    if claim == "KM-inverse":
        return jacobi_k(p, q, v, n, strict=False) - finite_mfrak(q, -p - q, v, n).compose(_X_MINUS_1_HALF) * Fraction(sign, fact)
    if claim == "JM-inverse-repaired":
        return jacobi_j(p, q, v, n, strict=False) - finite_m(-p - q, p, v, n).compose(_X_MINUS_1_HALF) * Fraction(sign, fact)
    if claim == "KM-inverse-repaired":
        return jacobi_k(p, q, v, n, strict=False) - finite_mfrak(-p - q, p, v, n).compose(_X_MINUS_1_HALF) * Fraction(sign, fact)
    if claim == "classic-7dot":
        forward = classic_m(p, q, n, strict=False) - jacobi_j(q, -p - q, 1, n, strict=False).compose(_TWO_X_PLUS_1) * (sign * fact)
        inverse = jacobi_j(p, q, 1, n, strict=False) - classic_m(-p - q, p, n, strict=False).compose(_X_MINUS_1_HALF) * Fraction(sign, fact)
        return [forward, inverse]
    if claim == "eq7":
        # divide both sides by Gamma(n+p+q+1); int t^(n+p+q+j) e^-t = Gamma(n+p+q+1) (n+p+q+1)_j
        lag = konhauser_z(p, 1, n, strict=False)
        u = Polynomial([Fraction(1, 2), Fraction(-1, 2)])
        rhs = sum((u ** j * (c * pochhammer(n + p + q + 1, j)) for j, c in enumerate(lag.coeffs)), Polynomial())
        return jacobi_j(p, q, 1, n, strict=False) - rhs
    if claim == "eq8":
        z = konhauser_z(p, v, n, strict=False)
        lhs = Polynomial([
            c * pochhammer(n + p + q + 1, k) * (-1) ** k for k, c in enumerate(z.coeffs)
        ])
        return lhs - finite_m(-p - q, p, v, n) * Fraction(sign, fact)
    raise KeyError(claim)


_CONNECTION_NOTES = {
    "JM-inverse": "as printed; (p, q) -> (q, -p-q) has order 3, so it cannot invert the forward map",
    "KM-inverse": "as printed; (p, q) -> (q, -p-q) has order 3, so it cannot invert the forward map",
    "JM-inverse-repaired": "inverse parameter map (p, q) -> (-p-q, p), the pattern of the classical transition",
    "KM-inverse-repaired": "inverse parameter map (p, q) -> (-p-q, p), the pattern of the classical transition",
    "classic-7dot": "both directions of the classical M/P transition (v = 1)",
    "eq7": "termwise Gamma integrals divided by Gamma(n+p+q+1)",
    "eq8": "termwise Gamma integrals divided by Gamma(n+p+q+1); exact polynomial in x",
}


def check_connection(claim: str, cfg: AuditConfig, rng: random.Random) -> ResidualReport:
    col = _Collector(claim, Mode.EXACT_POLY)
    ups = (1,) if claim in ("classic-7dot", "eq7") else cfg.upsilons
    for v in ups:
        for n in range(cfg.n_max + 1):
            for _ in range(sample_count(cfg, v * n + n + 2)):
                p, q = formal_point(rng)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n},
                          connection_residual(claim, p, q, v, n))
    return col.report(_CONNECTION_NOTES.get(claim, ""))


# -- limits ------------------------------------------------------------------------

DEFAULT_SCHEDULE = (Fraction(100), Fraction(1000), Fraction(10000))


def limit_deviations(which: str, q, upsilon: int, n: int, schedule=DEFAULT_SCHEDULE) -> list[Fraction]:
    """Max coefficient deviation of the rescaled polynomial from its
    Konhauser limit, one exact value per ``p``."""
    q = to_rational(q)
    sign = (-1) ** n * math.factorial(n)
    if which == "Z":
        target = konhauser_z(q, upsilon, n, strict=False) * sign
        build = finite_m
    else:
        target = konhauser_y(q, upsilon, n, strict=False) * sign
        build = finite_mfrak
    return [
        (build(p, q, upsilon, n).scale_argument(1 / p) - target).max_abs_coeff() or Fraction(0)
        for p in schedule
    ]


def check_limit_relations(which: str, cfg: AuditConfig, rng: random.Random,
                          schedule=DEFAULT_SCHEDULE) -> ResidualReport:
    """PASS iff each successive deviation ratio is within 10% of
    ``p_i / p_(i+1)`` (or the deviation vanishes identically)."""
    col = _Collector(f"eq12-{which}", Mode.NUMERIC_LIMIT)
    qs = [Fraction(0), Fraction(1, 2)] + [random_rational(rng, 0, 6) for _ in range(2)]
    worst_ratio = 0.0
    for v in (1, 2):
        for n in range(min(cfg.n_max, 3) + 1):
            for q in qs:
                devs = limit_deviations(which, q, v, n, schedule)
                err = 0.0
                if any(devs):
                    for (d0, d1), (p0, p1) in zip(zip(devs, devs[1:]), zip(schedule, schedule[1:])):
                        rate = p0 / p1
                        err = max(err, abs(float(d1 / d0 / rate) - 1) if d0 else math.inf)
                worst_ratio = max(worst_ratio, err)
                col.numeric({"q": str(q), "upsilon": v, "n": n,
                             "deviations": [f"{float(d):.6g}" for d in devs]}, err, tol=0.10)
    return col.report(f"p schedule {[str(p) for p in schedule]}; worst relative rate error {worst_ratio:.4g}")


# -- special cases ------------------------------------------------------------------

def special_residual(which: str, q, upsilon: int, n: int) -> Polynomial:
    q = to_rational(q)
    sign, fact = (-1) ** n, math.factorial(n)
    if which == "Z":
        z = konhauser_z(q, upsilon, n, strict=False).scale_argument(-1)
        return finite_m(n + 1, q, upsilon, n) - z * (sign * fact)
    y = konhauser_y(q, upsilon, n, strict=False)
    cleared = sum(
        ((X ** r) * (ONE_PLUS_X ** (n - r)) * c for r, c in enumerate(y.coeffs)), Polynomial()
    )
    return finite_mfrak(n - q, q, upsilon, n) - cleared * (sign * fact)


def check_special_cases(which: str, cfg: AuditConfig, rng: random.Random) -> ResidualReport:
    col = _Collector(f"special-{which}", Mode.EXACT_POLY)
    for v in cfg.upsilons:
        for n in range(cfg.n_max + 1):
            for q in [Fraction(0)] + [random_rational(rng, -1, 8) for _ in range(3)]:
                if q == -1:
                    continue
                col.exact({"q": str(q), "upsilon": v, "n": n}, special_residual(which, q, v, n))
    note = ("at p = n+1 the factor (0)_{vj} removes every j >= 1 term" if which == "Z"
            else "at p = n-q the factor (0)_r removes every r >= 1 term")
    return col.report(note)


# -- operational representation ------------------------------------------------

def op_rep_polynomial(p, q, upsilon: int, n: int, form: str = "series") -> Polynomial:
    """Apply the operator series to ``x^q / Gamma(q+1)`` in the
    Gamma-normalized monomial basis, then strip ``x^q`` and the
    ``Gamma(vn+q+1)`` normalization.

    ``form``: ``series`` (sum with ``(n+1-p)_{vj}``), ``compact`` (the
    block parameters ``D(v, n+1-p)`` with argument ``(-1/D)^v``) or
    ``repaired`` (argument ``(-v/D)^v``).
    """
    p, q, v = to_rational(p), to_rational(q), upsilon
    seed = GammaMonomialSum(q, (Fraction(1),))
    width = v * n + 1
    coeffs = [Fraction(0)] * width
    for j in range(n + 1):
        c = pochhammer(Fraction(-n), j) / math.factorial(j) * (-1) ** (v * j)
        if form == "series":
            c *= pochhammer(n + 1 - p, v * j)
        else:
            c *= pochhammer(n + 1 - p, v * j) / Fraction(v) ** (v * j)
            if form == "repaired":
                c *= Fraction(v) ** (v * j)
        image = seed.integrate(v * j)          # (D^-1)^{vj} on the seed
        # x^(q+vj)/Gamma(q+vj+1) = x^q/Gamma(q+1) * x^(vj)/(q+1)_{vj}
        coeffs[v * j] += c * image.coeffs[0] / pochhammer(q + 1, v * j)
    # Gamma(vn+q+1) * x^-q * x^q / Gamma(q+1) = (q+1)_{vn}
    return Polynomial(coeffs) * ((-1) ** n * pochhammer(q + 1, v * n))


def check_operational_rep(form: str, cfg: AuditConfig, rng: random.Random) -> ResidualReport:
    claim = {"series": "op-rep", "compact": "op-rep-compact-printed", "repaired": "op-rep-compact-repaired"}[form]
    col = _Collector(claim, Mode.EXACT_POLY, form)
    for v in cfg.upsilons:
        for n in range(cfg.n_max + 1):
            for _ in range(sample_count(cfg, v * n + n + 2) // 4 + 1):
                p, q = admissible_point(rng, v, n)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n},
                          op_rep_polynomial(p, q, v, n, form) - finite_m(p, q, v, n))
    notes = {
        "series": "D^-1 acts as base shift in the Gamma-normalized basis; prefactor read as "
                  "Gamma(vn+q+1) (with (q+1)_{vn} literally the result is M_n/Gamma(q+1))",
        "compact": "block parameters D(v, n+1-p) drop the factor v^(vj) of (n+1-p)_{vj}",
        "repaired": "argument (-v/D)^v restores v^(vj)",
    }[form]
    return col.report(notes)


# -- smaller claims ------------------------------------------------------------------

def carlitz_residual(x, alpha, upsilon: int, n: int) -> Fraction:
    x, alpha = to_rational(x), to_rational(alpha)
    lhs = pochhammer((x + alpha + 1) / upsilon, n)
    rhs = Fraction(0)
    for r in range(n + 1):
        inner = sum(
            ((-1) ** s * math.comb(r, s) * pochhammer((s + alpha + 1) / upsilon, n) for s in range(r + 1)),
            Fraction(0),
        )
        rhs += binomial(-x + r - 1, r) * inner
    return lhs - rhs


def jrec_residual(which: int, p, q, upsilon: int, n: int) -> Polynomial:
    p, q, v = to_rational(p), to_rational(q), upsilon
    j = jacobi_j(p, q, v, n, strict=False)
    lhs = Polynomial([Fraction(-1), Fraction(1)]) * j.derivative()
    if which == 1:
        rhs = j * (v * n) - jacobi_j(p, q + 1, v, n - 1, strict=False) * (v * pochhammer(v * n - v + p + 1, v))
    else:
        rhs = jacobi_j(p - 1, q + 1, v, n, strict=False) * (v * n + p) - j * p
    return lhs - rhs


def _simple_exact(claim: str, cfg: AuditConfig, rng: random.Random, fn: Callable, *, n_from: int = 0,
                  admissible: bool = False, mode: Mode = Mode.EXACT_POLY, notes: str = "") -> ResidualReport:
    col = _Collector(claim, mode)
    for v in cfg.upsilons:
        for n in range(n_from, cfg.n_max + 1):
            for _ in range(sample_count(cfg, v * n + n + 2) // 4 + 1):
                p, q = admissible_point(rng, v, n) if admissible else formal_point(rng)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n}, fn(p, q, v, n))
    return col.report(notes)


def check_mort(cfg, rng):
    reports = []
    for v in cfg.upsilons:
        for _ in range(cfg.trials):
            p, q = admissible_point(rng, v, cfg.n_max)
            params = ParamSet(p, q, v, cfg.n_max)
            reports += [verify_Mort(params, n, m) for n in range(cfg.n_max + 1) for m in range(cfg.n_max + 1)]
    return _merge("mort", reports, notes="exact moments of x^q (1+x)^-(p+q), normalized by B(q+1, p-1)")


def check_monomial(cfg, rng):
    reports = []
    for v in cfg.upsilons:
        for _ in range(cfg.trials):
            p, q = admissible_point(rng, v, cfg.n_max)
            params = ParamSet(p, q, v, cfg.n_max)
            reports += [verify_monomial_conditions(params, n) for n in range(cfg.n_max + 1)]
    return _merge("monomial", reports)


def check_konhauser(cfg, rng):
    reports = [
        verify_konhauser(g, v, n, m)
        for g in (Fraction(0), Fraction(1, 2), Fraction(3), random_rational(rng, 0, 5))
        for v in cfg.upsilons for n in range(min(cfg.n_max, 3) + 1) for m in range(min(cfg.n_max, 3) + 1)
    ]
    return _merge("konhauser", reports)


def check_jacobi_biorth(cfg, rng):
    reports = []
    for v in cfg.upsilons:
        for _ in range(max(2, cfg.trials // 5)):
            while True:  # p + q + 1 = 0 would put 0/0 into the norm
                p, q = random_rational(rng, 0, 6) - Fraction(1, 2), random_rational(rng, 0, 6) - Fraction(1, 2)
                if (p + q).denominator != 1:
                    break
            reports += [verify_jacobi_biorth(p, q, v, n, m) for n in range(cfg.n_max + 1) for m in range(cfg.n_max + 1)]
    return _merge("jacobi-biorth", reports)


def check_classic_orth(cfg, rng):
    reports = []
    for _ in range(cfg.trials):
        p, q = admissible_point(rng, 1, cfg.n_max)
        reports += [verify_classic_orth(p, q, n, m) for n in range(cfg.n_max + 1) for m in range(cfg.n_max + 1)]
    return _merge("classic-orth", reports)


def check_remark_upsilon1(cfg, rng):
    col = _Collector("remark-upsilon1", Mode.EXACT_POLY)
    for n in range(2 * cfg.n_max + 1):
        for _ in range(cfg.trials):
            p, q = admissible_point(rng, 1, n)
            m, mf, cm = finite_m(p, q, 1, n), finite_mfrak(p, q, 1, n), classic_m(p, q, n)
            col.exact({"p": str(p), "q": str(q), "n": n}, [m - mf, m - cm])
    return col.report("M, Mfrak and the classical M_n^(p,q) at v = 1")


def check_laplace(variant, cfg, rng):
    variant = Variant(variant)
    col = _Collector(f"laplace-{variant.value}", Mode.EXACT_SCALAR, variant.value)
    for v in cfg.upsilons:
        for n in range(cfg.n_max + 1):
            for _ in range(max(2, cfg.trials // 4)):
                p, q = admissible_point(rng, v, n)
                w = random_rational(rng, -3, 3, 7) or Fraction(1)
                alpha = Fraction(rng.randint(1, 40), rng.randint(1, 9))
                params = ParamSet(p, q, v, n)
                closed = laplace_closed_form(params, n, w, alpha, variant)
                oracle = laplace_termwise(params, n, w, alpha)
                col.exact({"p": str(p), "q": str(q), "upsilon": v, "n": n, "w": str(w), "alpha": str(alpha)},
                          closed.ratio - oracle.ratio)
    notes = ("argument (-w/alpha)^v as printed" if variant is Variant.PRINTED
             else "argument (-v w/alpha)^v; oracle: termwise Gamma integrals")
    return col.report(notes + "; both sides divided by Gamma(q+1)/alpha^(q+1)")


def check_rl(kind, cfg, rng):
    kind = FracKind(kind)
    claim = "rl-integral" if kind is FracKind.INTEGRAL else "rl-derivative"
    reports = []
    for v in (1, 2):
        for n in range(min(cfg.n_max, 3) + 1):
            for order in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                for _ in range(max(1, cfg.trials // 10)):
                    p = (v + 1) * n + 1 + Fraction(rng.randint(1, 60), rng.randint(1, 5))
                    q = order - 1 + Fraction(rng.randint(1, 30), rng.randint(1, 7))
                    w = random_rational(rng, -3, 3, 5) or Fraction(1)
                    a = random_rational(rng, -2, 2, 5)
                    reports.append(fractional_shift(ParamSet(p, q, v, n), n, FracOrder(order, kind, a), w).report)
    return _merge(claim, reports, notes="exact Gamma-normalized monomial calculus; D^l = D^r I^(r-l)")


_FOURIER_CASES = [
    (FourierParams(3, 3, 3, 3, 1), [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]),
    (FourierParams(3, 3, 3, 3, 2), [(0, 0), (0, 1), (1, 0), (1, 1)]),
    (FourierParams(Fraction(5, 2), Fraction(7, 2), Fraction(4), Fraction(3, 2), 1), [(0, 2), (2, 2)]),
]


def check_fourier_pair(variant, cfg, rng):
    variant = PhiVariant(variant)
    reports = [
        verify_parseval_pair(fp, n, m, Normalization.TWO_PI, variant=variant)
        for fp, pairs in _FOURIER_CASES for n, m in pairs
    ]
    notes = ("Phi as stated" if variant is PhiVariant.PRINTED
             else "Phi with the numerator block D(v, g1-z) that the Beta integral of the "
                  "transformed polynomial produces")
    return _merge(f"fourier-pair-{variant.value}", reports, variant.value,
                  notes=notes + "; normalization 2 pi (the stated 2 pi i is off by i)")


def check_fourier_barnes(cfg, rng):
    reports = []
    for fp in (FourierParams(2, 2, 2, 2, 1), FourierParams(3, 3, 3, 3, 1),
               FourierParams(Fraction(1, 2), Fraction(5, 3), Fraction(7, 4), Fraction(2, 5), 2)):
        reports.append(verify_parseval_pair(fp, 0, 0, Normalization.TWO_PI))
    rep = _merge("fourier-barnes", reports, "TWO_PI",
                 notes="n = m = 0 against the first Barnes lemma; TWO_PI_I misses by a factor i")
    return rep


def check_parseval(cfg, rng):
    reports = []
    fp = FourierParams(2, 2, 2, 2, 1)
    for n, m in ((0, 0), (0, 1), (1, 1)):
        reports.append(parseval_check(fp, 5, 0, 5, 0, n, m))
    fp2 = FourierParams(Fraction(3, 2), Fraction(5, 2), Fraction(3), Fraction(2), 2)
    reports.append(parseval_check(fp2, 9, Fraction(1, 2), 8, 1, 1, 1))
    return _merge("parseval", reports, notes="Beta-sum left side vs 1/(2 pi) int F[s] conj(F[r])")


# -- registry -------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    mode: Mode
    expected: Verdict
    run: Callable[[AuditConfig, random.Random], ResidualReport]
    description: str = ""


def _c(id_, mode, expected, run, description=""):
    return Claim(id_, mode, expected, run, description)


_P, _F = Verdict.PASS, Verdict.FAIL
REGISTRY: dict[str, Claim] = {c.id: c for c in [
    _c("mort", Mode.EXACT_SCALAR, _P, check_mort, "finite biorthogonality of M_n and Mfrak_m"),
    _c("monomial", Mode.EXACT_SCALAR, _P, check_monomial, "monomial orthogonality conditions"),
    _c("konhauser", Mode.EXACT_SCALAR, _P, check_konhauser, "Konhauser Z/Y biorthogonality"),
    _c("jacobi-biorth", Mode.EXACT_SCALAR, _P, check_jacobi_biorth, "J/K biorthogonality with its norm"),
    _c("classic-orth", Mode.EXACT_SCALAR, _P, check_classic_orth, "orthogonality of classical M_n^(p,q)"),
    _c("jrec1", Mode.EXACT_POLY, _P, lambda c, r: _simple_exact("jrec1", c, r, lambda p, q, v, n: jrec_residual(1, p, q, v, n), n_from=1), "(x-1)DJ_n first recurrence"),
    _c("jrec2", Mode.EXACT_POLY, _P, lambda c, r: _simple_exact("jrec2", c, r, lambda p, q, v, n: jrec_residual(2, p, q, v, n)), "(x-1)DJ_n second recurrence"),
    _c("hyp-display", Mode.EXACT_POLY, _P, lambda c, r: _simple_exact(
        "hyp-display", c, r, lambda p, q, v, n: m_hypergeometric_display(p, q, v, n) - finite_m(p, q, v, n)),
        "hypergeometric display of M_n"),
    _c("remark-upsilon1", Mode.EXACT_POLY, _P, check_remark_upsilon1, "v = 1 collapse to classical M_n"),
    _c("konhauser-upsilon1", Mode.EXACT_POLY, _P, lambda c, r: _simple_exact(
        "konhauser-upsilon1", AuditConfig(c.seed, c.n_max, c.trials, (1,)), r,
        lambda p, q, v, n: konhauser_z(q, 1, n, strict=False) - konhauser_y(q, 1, n, strict=False)),
        "Z and Y coincide at v = 1"),
    _c("carlitz", Mode.EXACT_SCALAR, _P, lambda c, r: _simple_exact(
        "carlitz", c, r, lambda p, q, v, n: carlitz_residual(p, q, v, n), mode=Mode.EXACT_SCALAR,
        notes="sampled (x, alpha) = (p, q)"), "Carlitz summation used in the biorthogonality proof"),
    _c("eq7", Mode.EXACT_POLY, _P, lambda c, r: check_connection("eq7", c, r), "Jacobi from Laguerre integral"),
    _c("eq8", Mode.EXACT_POLY, _P, lambda c, r: check_connection("eq8", c, r), "defining integral of M_n"),
    _c("classic-7dot", Mode.EXACT_POLY, _P, lambda c, r: check_connection("classic-7dot", c, r), "classical M/P transition"),
    _c("JM-forward", Mode.EXACT_POLY, _P, lambda c, r: check_connection("JM-forward", c, r)),
    _c("JM-inverse", Mode.EXACT_POLY, _F, lambda c, r: check_connection("JM-inverse", c, r)),
    _c("JM-inverse-repaired", Mode.EXACT_POLY, _P, lambda c, r: check_connection("JM-inverse-repaired", c, r)),
    _c("KM-forward", Mode.EXACT_POLY, _P, lambda c, r: check_connection("KM-forward", c, r)),
    _c("KM-inverse", Mode.EXACT_POLY, _F, lambda c, r: check_connection("KM-inverse", c, r)),
    _c("KM-inverse-repaired", Mode.EXACT_POLY, _P, lambda c, r: check_connection("KM-inverse-repaired", c, r)),
    _c("eq12-Z", Mode.NUMERIC_LIMIT, _P, lambda c, r: check_limit_relations("Z", c, r)),
    _c("eq12-Y", Mode.NUMERIC_LIMIT, _P, lambda c, r: check_limit_relations("Y", c, r)),
    _c("eq13", Mode.EXACT_POLY, _F, lambda c, r: check_generating_function("eq13", c, r)),
    _c("eq14", Mode.EXACT_POLY, _F, lambda c, r: check_generating_function("eq14", c, r)),
    _c("eq15-printed", Mode.EXACT_POLY, _F, lambda c, r: check_derivative_relation(15, c, r, Variant.PRINTED)),
    _c("eq15-corrected", Mode.EXACT_POLY, _P, lambda c, r: check_derivative_relation(15, c, r, Variant.CORRECTED)),
    _c("eq16-printed", Mode.EXACT_POLY, _F, lambda c, r: check_derivative_relation(16, c, r, Variant.PRINTED)),
    _c("eq16-corrected", Mode.EXACT_POLY, _P, lambda c, r: check_derivative_relation(16, c, r, Variant.CORRECTED)),
    _c("eq17-printed", Mode.EXACT_POLY, _F, lambda c, r: check_derivative_relation(17, c, r, Variant.PRINTED)),
    _c("eq17-corrected", Mode.EXACT_POLY, _P, lambda c, r: check_derivative_relation(17, c, r, Variant.CORRECTED)),
    _c("mdifequ", Mode.EXACT_POLY, _P, check_mdifequ),
    _c("mdog", Mode.NUMERIC_SERIES, _F, lambda c, r: check_generating_function("mdog", c, r)),
    _c("eq18", Mode.EXACT_SCALAR, _F, lambda c, r: check_generating_function("eq18", c, r)),
    _c("mgen", Mode.NUMERIC_SERIES, _F, lambda c, r: check_generating_function("mgen", c, r)),
    _c("fourier-barnes", Mode.NUMERIC_LIMIT, _P, check_fourier_barnes),
    _c("fourier-pair-printed", Mode.NUMERIC_LIMIT, _F, lambda c, r: check_fourier_pair(PhiVariant.PRINTED, c, r)),
    _c("fourier-pair-corrected", Mode.NUMERIC_LIMIT, _P, lambda c, r: check_fourier_pair(PhiVariant.CORRECTED, c, r)),
    _c("parseval", Mode.NUMERIC_LIMIT, _P, check_parseval),
    _c("op-rep", Mode.EXACT_POLY, _P, lambda c, r: check_operational_rep("series", c, r)),
    _c("op-rep-compact-printed", Mode.EXACT_POLY, _F, lambda c, r: check_operational_rep("compact", c, r)),
    _c("op-rep-compact-repaired", Mode.EXACT_POLY, _P, lambda c, r: check_operational_rep("repaired", c, r)),
    _c("laplace-printed", Mode.EXACT_SCALAR, _F, lambda c, r: check_laplace(Variant.PRINTED, c, r)),
    _c("laplace-corrected", Mode.EXACT_SCALAR, _P, lambda c, r: check_laplace(Variant.CORRECTED, c, r)),
    _c("rl-integral", Mode.EXACT_POLY, _P, lambda c, r: check_rl(FracKind.INTEGRAL, c, r)),
    _c("rl-derivative", Mode.EXACT_POLY, _P, lambda c, r: check_rl(FracKind.DERIVATIVE, c, r)),
    _c("special-Z", Mode.EXACT_POLY, _F, lambda c, r: check_special_cases("Z", c, r)),
    _c("special-Y", Mode.EXACT_POLY, _F, lambda c, r: check_special_cases("Y", c, r)),
]}

EXPECTED = {cid: c.expected for cid, c in REGISTRY.items()}


# -- regression-locked residuals of refuted statements --------------------------------

def _poly(*coeffs) -> Polynomial:
    return Polynomial([Fraction(c) for c in coeffs])


def _locked_values() -> dict[str, tuple[Callable[[], object], object]]:
    return {
        "eq15-printed": (lambda: derivative_residual(15, 5, 0, 1, 2, Variant.PRINTED), _poly(8, 28)),
        "eq16-printed": (lambda: derivative_residual(16, 5, 0, 1, 1, Variant.PRINTED), _poly(5, 10)),
        "eq17-printed": (lambda: derivative_residual(17, 8, 1, 2, 1, Variant.PRINTED), _poly(180, 0, -138)),
        "eq14": (lambda: eq14_residuals(5, 0, 1, 1)[1], _poly(Fraction(3, 2), Fraction(-3, 4))),
        "special-Z": (lambda: special_residual("Z", 0, 1, 1), _poly(0, 1)),
        "laplace-printed": (lambda: laplace_closed_form(ParamSet(8, 1, 2, 1), 1, 1, 2, Variant.PRINTED).exact(),
                            Fraction(21, 16)),
    }


LOCKED_IDS = ("eq15-printed", "eq16-printed", "eq17-printed", "eq14", "special-Z", "laplace-printed")


def locked_fixture(claim_id: str) -> tuple[object, object] | None:
    """``(computed, stored)`` for a regression-locked claim, else ``None``."""
    table = _locked_values()
    if claim_id not in table:
        return None
    compute, stored = table[claim_id]
    return compute(), stored


# -- runner -------------------------------------------------------------------------

class UnknownClaimError(KeyError):
    pass


def resolve_claims(ids) -> list[str]:
    if ids is None or ids == "all" or ids == ["all"]:
        return sorted(REGISTRY)
    if isinstance(ids, str):
        ids = [s.strip() for s in ids.split(",") if s.strip()]
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise UnknownClaimError(", ".join(unknown))
    return sorted(set(ids))


def run_claim(claim_id: str, cfg: AuditConfig) -> dict:
    claim = REGISTRY[claim_id]
    rng = random.Random(f"{cfg.seed}:{claim_id}")
    rep = claim.run(cfg, rng)
    rep.claim = claim_id
    doc = rep.to_json()
    doc["expected"] = claim.expected.value
    drift = rep.verdict is not claim.expected
    fixture = locked_fixture(claim_id)
    if fixture is not None:
        computed, stored = fixture
        doc["locked_residual_ok"] = computed == stored
        drift = drift or computed != stored
    doc["drift"] = drift
    return doc


def run_claims(ids=None, cfg: AuditConfig | None = None) -> dict:
    """Deterministic report ``{run_id, seed, claims: [...]}``; each claim
    draws from its own generator seeded by ``(seed, id)``, so results do not
    depend on which other claims run."""
    cfg = cfg or AuditConfig()
    claim_ids = resolve_claims(ids)
    claims = [run_claim(cid, cfg) for cid in claim_ids]
    key = json.dumps({"cfg": asdict(cfg), "claims": claim_ids}, sort_keys=True)
    run_id = hashlib.sha256(key.encode()).hexdigest()[:16]
    drift = [c["id"] for c in claims if c["drift"]]
    return {
        "schema_version": 1,
        "run_id": run_id,
        "seed": cfg.seed,
        "config": {"n_max": cfg.n_max, "trials": cfg.trials, "upsilons": list(cfg.upsilons)},
        "claims": sorted(claims, key=lambda c: c["id"]),
        "drift": drift,
    }

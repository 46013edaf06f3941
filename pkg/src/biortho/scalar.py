"""Exact rational scalars, Pochhammer/Beta combinatorics and complex log-Gamma.

Rationals are :class:`fractions.Fraction`; every Gamma quotient that the
polynomial code needs has an integer offset and is reduced to a Pochhammer
ratio so that no transcendental evaluation happens on the exact paths.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """A Gamma argument landed on a nonpositive integer."""


def to_rational(value) -> Fraction:
    """Convert ints, Fractions, decimal strings and ``"a/b"`` strings exactly.

    Floats are rejected; use ``Fraction(x)`` explicitly if that is meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def is_nonpositive_integer(x) -> bool:
    if isinstance(x, complex):
        if x.imag != 0:
            return False
        x = x.real
    if isinstance(x, float):
        return x <= 0 and x == math.floor(x)
    x = Fraction(x)
    return x.denominator == 1 and x <= 0


def pochhammer(a, k: int):
    """Rising factorial ``a (a+1) ... (a+k-1)``; works for any ring scalar."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    result = 1
    for i in range(k):
        result = result * (a + i)
    if isinstance(result, int):
        return Fraction(result)
    return result


def gamma_shift(a, k: int) -> Fraction:
    """``Gamma(a + k) / Gamma(a)`` for integer ``k`` of either sign."""
    a = to_rational(a)
    if is_nonpositive_integer(a) or is_nonpositive_integer(a + k):
        raise PoleError(f"Gamma pole in shift ratio Gamma({a + k})/Gamma({a})")
    if k >= 0:
        return pochhammer(a, k)
    return 1 / pochhammer(a + k, -k)


def delta_params(upsilon: int, gamma) -> list[Fraction]:
    """The block ``gamma/v, (gamma+1)/v, ..., (gamma+v-1)/v``."""
    if upsilon < 1:
        raise ValueError("upsilon must be >= 1")
    gamma = to_rational(gamma)
    return [(gamma + i) / upsilon for i in range(upsilon)]


def binomial(a, j: int) -> Fraction:
    """Generalized binomial ``C(a, j) = (-1)^j (-a)_j / j!`` for rational ``a``."""
    if j < 0:
        return Fraction(0)
    return (-1) ** j * pochhammer(-to_rational(a), j) / math.factorial(j)


def beta_moment_ratio(a, b, j: int, k: int) -> Fraction:
    """Exact ``B(a+j, b+k) / B(a, b)`` through Pochhammer shifts.

    Raises :class:`PoleError` if any of the Gamma arguments involved is a
    nonpositive integer.
    """
    a, b = to_rational(a), to_rational(b)
    for arg in (a, b, a + b, a + j, b + k, a + b + j + k):
        if is_nonpositive_integer(arg):
            raise PoleError(f"Gamma pole at {arg}")
    return gamma_shift(a, j) * gamma_shift(b, k) / gamma_shift(a + b, j + k)


def _gamma_sign(x: Fraction) -> int:
    if x > 0:
        return 1
    return -1 if math.floor(-x) % 2 == 0 else 1


@dataclass(frozen=True)
class GammaRatio:
    """Symbolic ``scale * prod Gamma(num) / prod Gamma(den)``.

    Carries weight masses and norm constants that are not rational for
    general ``p, q``; :meth:`exact` reduces integer-offset pairs and returns
    a Fraction when everything cancels.
    """

    scale: Fraction = Fraction(1)
    num: tuple = ()
    den: tuple = ()
    pow2: Fraction = Fraction(0)

    def __mul__(self, other):
        if isinstance(other, GammaRatio):
            return GammaRatio(
                self.scale * other.scale, self.num + other.num, self.den + other.den,
                self.pow2 + other.pow2,
            )
        return GammaRatio(self.scale * to_rational(other), self.num, self.den, self.pow2)

    __rmul__ = __mul__

    def inverse(self) -> "GammaRatio":
        return GammaRatio(1 / self.scale, self.den, self.num, -self.pow2)

    def reduced(self) -> "GammaRatio":
        scale = self.scale
        num = [to_rational(x) for x in self.num]
        den = [to_rational(x) for x in self.den]
        for x in num + den:
            if is_nonpositive_integer(x):
                raise PoleError(f"Gamma pole at {x}")
        changed = True
        while changed:
            changed = False
            for i, a in enumerate(num):
                for k, b in enumerate(den):
                    if (a - b).denominator == 1:
                        scale *= gamma_shift(b, int(a - b))
                        del num[i], den[k]
                        changed = True
                        break
                if changed:
                    break
        # Gamma at a positive integer is a factorial
        for args, inv in ((num, False), (den, True)):
            for x in list(args):
                if x.denominator == 1:
                    f = math.factorial(int(x) - 1)
                    scale = scale / f if inv else scale * f
                    args.remove(x)
        pow2 = Fraction(self.pow2)
        if pow2.denominator == 1:
            scale *= Fraction(2) ** int(pow2)
            pow2 = Fraction(0)
        return GammaRatio(scale, tuple(num), tuple(den), pow2)

    def exact(self) -> Fraction | None:
        r = self.reduced()
        if r.num or r.den or r.pow2:
            return None
        return r.scale

    def __float__(self) -> float:
        r = self.reduced()
        if not r.num and not r.den and not r.pow2:
            return float(r.scale)
        log = sum(math.lgamma(float(x)) for x in r.num) - sum(math.lgamma(float(x)) for x in r.den)
        sign = 1
        for x in r.num + r.den:
            sign *= _gamma_sign(x)
        return float(r.scale) * sign * math.exp(log + float(r.pow2) * math.log(2))


def beta_ratio(a, b) -> GammaRatio:
    """``B(a, b)`` as a Gamma-ratio token."""
    a, b = to_rational(a), to_rational(b)
    return GammaRatio(Fraction(1), (a, b), (a + b,))


# Lanczos approximation, g = 7, nine terms (the widely published set of
# Godfrey); relative error ~1e-15 on Re(z) >= 1/2.
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _log_gamma_right(z: complex) -> complex:
    z = z - 1
    x = LANCZOS_COEFFS[0]
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        x += c / (z + i)
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma_complex(z) -> complex:
    """Log-Gamma on the branch continuous off the negative real axis.

    Satisfies ``logG(z+1) = logG(z) + log z``. Uses the reflection formula
    for ``Re(z) < 1/2``; the imaginary part is then snapped to the
    continuous branch with an argument sum.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"log-Gamma pole at {z}")
    if z.real >= 0.5:
        return _log_gamma_right(z)
    value = math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _log_gamma_right(1 - z)
    k = math.ceil(0.5 - z.real)
    ref_imag = _log_gamma_right(z + k).imag - sum(cmath.phase(z + j) for j in range(k))
    turns = round((ref_imag - value.imag) / (2 * math.pi))
    return value + 2j * math.pi * turns


def complex_pochhammer(a: complex, k: int) -> complex:
    result = complex(1.0)
    for i in range(k):
        result *= a + i
    return result


def prod(values: Iterable, start=1):
    result = start
    for v in values:
        result = result * v
    return result


def pochhammer_product(params: Sequence, k: int):
    return prod((pochhammer(a, k) for a in params), Fraction(1))

"""Dense univariate polynomials and truncated power series.

Both containers are generic over the scalar: Fractions for the exact paths,
floats (or complex) for numeric ones, and for :class:`TruncSeries` even
:class:`Polynomial` coefficients, which is how generating functions in ``t``
with ``x``-dependent coefficients are expanded exactly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import pochhammer


def _is_zero(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero()
    return c == 0


class Polynomial:
    """Ascending-degree coefficient list; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=Fraction(1)) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([Fraction(0), Fraction(1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            terms.append(str(c) if k == 0 else f"({c})*x" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)

    def _coerce(self, other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return Polynomial([other * c for c in self.coeffs])

    def __truediv__(self, scalar):
        return Polynomial([c / scalar for c in self.coeffs])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([Fraction(1)])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or another Polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def scale_argument(self, a) -> "Polynomial":
        """``f(a x)``."""
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * a
        return Polynomial(out)

    def shift_degree(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if not _is_zero(c)]

    def max_abs_coeff(self):
        return max((abs(c) for c in self.coeffs), default=Fraction(0))


def poly_derivative(f: Polynomial) -> Polynomial:
    return f.derivative()


def theta_shifted_product(f: Polynomial, a, upsilon: int) -> Polynomial:
    """Apply ``(xD + a)(xD + a + 1)...(xD + a + v - 1)`` to ``f``.

    ``xD`` is diagonal on monomials, so ``c x^k`` maps to ``c (k+a)_v x^k``.
    """
    if upsilon < 1:
        raise ValueError("upsilon must be >= 1")
    return Polynomial([c * pochhammer(k + a, upsilon) for k, c in enumerate(f.coeffs)])


def theta(f: Polynomial, shift=0) -> Polynomial:
    """``(xD + shift) f``."""
    return Polynomial([c * (k + shift) for k, c in enumerate(f.coeffs)])


class SeriesError(ValueError):
    pass


class TruncSeries:
    """Power series in ``t`` known modulo ``t**(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        cs = list(coeffs)[: order + 1]
        zero = _zero_like(cs[0]) if cs else Fraction(0)
        cs += [zero] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_polynomial(cls, f: Polynomial, order: int) -> "TruncSeries":
        return cls(list(f.coeffs) or [Fraction(0)], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.order == other.order and all(
            _is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def _other(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        other = self._other(other)
        order = min(self.order, other.order)
        return TruncSeries([self[k] + other[k] for k in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = _zero_like(self[0] * other[0])
            for j in range(k + 1):
                a = self[j]
                if _is_zero(a):
                    continue
                acc = acc + a * other[k - j]
            out.append(acc)
        return TruncSeries(out, order)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order)

    def __pow__(self, e):
        return series_pow(self, e)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1], min(order, self.order))


def _zero_like(c):
    if isinstance(c, Polynomial):
        return Polynomial()
    return c * 0


def series_pow(f: TruncSeries, e) -> TruncSeries:
    """``f**e`` from the standard power recurrence.

    ``g_k = 1/(k f_0) sum_{j=1}^k ((e+1) j - k) f_j g_{k-j}``; exact for
    rational coefficients when ``f_0 = 1`` or ``e`` is an integer.
    """
    f0 = f[0]
    if _is_zero(f0):
        raise SeriesError("series_pow needs a nonzero constant term")
    if isinstance(f0, float) and f0 < 0 and e != int(e):
        raise SeriesError("fractional power of a series with negative constant term")
    if f0 == 1:
        g0 = f0
    elif isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1):
        g0 = f0 ** int(e)
    elif isinstance(f0, (float, complex)):
        g0 = f0 ** float(e)
    else:
        raise SeriesError("exact fractional power needs constant term 1")
    g = [g0]
    for k in range(1, f.order + 1):
        acc = 0
        for j in range(1, k + 1):
            acc = acc + ((e + 1) * j - k) * f[j] * g[k - j]
        g.append(acc / (k * f0))
    return TruncSeries(g, f.order)


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """``f(g(t))`` for ``g`` with zero constant term (Horner in ``g``)."""
    if not _is_zero(g[0]):
        raise SeriesError("series_compose needs g(0) = 0")
    order = min(f.order, g.order)
    g = g.truncate(order)
    result = TruncSeries([f[order]], order)
    for k in range(order - 1, -1, -1):
        result = result * g + f[k]
    return result


def series_exp_linear(c, order: int) -> TruncSeries:
    """``exp(c t)`` truncated."""
    out, term = [], Fraction(1)
    for k in range(order + 1):
        out.append(term)
        term = term * c / (k + 1)
    return TruncSeries(out, order)


def binomial_series(base, e, order: int) -> TruncSeries:
    """``(1 + base t)**e``."""
    return series_pow(TruncSeries([Fraction(1), base], order), e)

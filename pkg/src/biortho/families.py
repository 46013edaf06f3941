"""Exact constructors for the finite biorthogonal pair and its relatives.

Two layers: the ``finite_*``/``konhauser_*``/``jacobi_*``/``classic_m``
functions build the polynomial for any rational parameters (they are
polynomial identities in ``p, q`` and the audit probes them outside the
admissible region), while the ``make_*`` wrappers enforce the parameter
constraints under which the orthogonality statements hold.

Gamma quotients with integer offsets are always written as a single
Pochhammer symbol, e.g. ``(q+1)_{vn}/(q+1)_{vj} = (q+1+vj)_{v(n-j)}``, so
the constructors stay finite at parameter values where the two factors
would vanish separately.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial
from .scalar import binomial, delta_params, pochhammer, pochhammer_product, to_rational


class ParameterError(ValueError):
    """Parameters violate the admissibility constraints of a family."""


class FamilyId(str, enum.Enum):
    M = "M"
    MFRAK = "Mfrak"
    KONHAUSER_Z = "Z"
    KONHAUSER_Y = "Y"
    JACOBI_J = "J"
    JACOBI_K = "K"
    CLASSIC_M = "classicM"


@dataclass(frozen=True)
class ParamSet:
    """``(p, q, upsilon)`` together with the largest degree index ``n_max``.

    With ``strict=True`` (default) the biorthogonality constraints
    ``q > -1`` and ``p > (upsilon+1) n_max + 1`` are enforced.
    """

    p: Fraction
    q: Fraction
    upsilon: int
    n_max: int = 0
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "p", to_rational(self.p))
        object.__setattr__(self, "q", to_rational(self.q))
        if int(self.upsilon) != self.upsilon or self.upsilon < 1:
            raise ParameterError(f"upsilon must be a positive integer, got {self.upsilon}")
        if self.n_max < 0:
            raise ParameterError("n_max must be nonnegative")
        if self.strict:
            self.check()

    def check(self) -> None:
        if self.q <= -1:
            raise ParameterError(f"q must exceed -1, got {self.q}")
        bound = (self.upsilon + 1) * self.n_max + 1
        if self.p <= bound:
            raise ParameterError(f"p must exceed (upsilon+1)*N+1 = {bound}, got {self.p}")

    @classmethod
    def unchecked(cls, p, q, upsilon: int, n_max: int = 0) -> "ParamSet":
        return cls(p, q, upsilon, n_max, strict=False)

    def is_admissible(self) -> bool:
        try:
            self.check()
        except ParameterError:
            return False
        return True

    def as_dict(self) -> dict:
        return {"p": str(self.p), "q": str(self.q), "upsilon": self.upsilon, "n_max": self.n_max}


def _check_index(params: ParamSet, n: int) -> None:
    if n < 0:
        raise ParameterError("degree index must be nonnegative")
    if params.strict and n > params.n_max:
        raise ParameterError(f"n={n} exceeds n_max={params.n_max}")


def _sparse(upsilon: int, coeffs: dict[int, Fraction]) -> Polynomial:
    out = [Fraction(0)] * (upsilon * max(coeffs, default=0) + 1)
    for j, c in coeffs.items():
        out[upsilon * j] = c
    return Polynomial(out)


# -- the finite pair -------------------------------------------------------

def finite_m(p, q, upsilon: int, n: int) -> Polynomial:
    """M_n(p, q, v; x), a polynomial of degree ``v n`` in ``x``."""
    p, q = to_rational(p), to_rational(q)
    coeffs = {}
    for j in range(n + 1):
        coeffs[j] = (
            (-1) ** (n + j + upsilon * j)
            * math.comb(n, j)
            * pochhammer(n + 1 - p, upsilon * j)
            * pochhammer(q + 1 + upsilon * j, upsilon * (n - j))
        )
    return _sparse(upsilon, coeffs)


def finite_mfrak(p, q, upsilon: int, n: int) -> Polynomial:
    """The companion polynomial of degree ``n``, from the double sum over
    ``x^r (1+x)^(n-r)``."""
    p, q = to_rational(p), to_rational(q)
    one_plus_x = Polynomial([Fraction(1), Fraction(1)])
    x = Polynomial.x()
    inner = [pochhammer((s + q + 1) / upsilon, n) for s in range(n + 1)]
    total = Polynomial()
    for r in range(n + 1):
        c = sum(((-1) ** s * math.comb(r, s) * inner[s] for s in range(r + 1)), Fraction(0))
        c *= (-1) ** n * pochhammer(p + q - n, r) / math.factorial(r)
        if c:
            total = total + (x ** r) * (one_plus_x ** (n - r)) * c
    return total


def make_M(params: ParamSet, n: int) -> Polynomial:
    _check_index(params, n)
    return finite_m(params.p, params.q, params.upsilon, n)


def make_Mfrak(params: ParamSet, n: int) -> Polynomial:
    _check_index(params, n)
    return finite_mfrak(params.p, params.q, params.upsilon, n)


# -- Konhauser pair --------------------------------------------------------

def _check_gamma(gamma, strict: bool) -> Fraction:
    gamma = to_rational(gamma)
    if strict and gamma <= -1:
        raise ParameterError(f"gamma must exceed -1, got {gamma}")
    return gamma


def konhauser_z(gamma, upsilon: int, n: int, *, strict: bool = True) -> Polynomial:
    """Z_n^(gamma)(x; v), support on multiples of ``v``."""
    gamma = _check_gamma(gamma, strict)
    coeffs = {
        j: (-1) ** j * math.comb(n, j) * pochhammer(gamma + 1 + upsilon * j, upsilon * (n - j))
        / math.factorial(n)
        for j in range(n + 1)
    }
    return _sparse(upsilon, coeffs)


def konhauser_y(gamma, upsilon: int, n: int, *, strict: bool = True) -> Polynomial:
    """Y_n^(gamma)(x; v), degree ``n``."""
    gamma = _check_gamma(gamma, strict)
    inner = [pochhammer((1 + gamma + s) / upsilon, n) for s in range(n + 1)]
    out = []
    for r in range(n + 1):
        c = sum(((-1) ** s * math.comb(r, s) * inner[s] for s in range(r + 1)), Fraction(0))
        out.append(c / (math.factorial(n) * math.factorial(r)))
    return Polynomial(out)


make_konhauser_Z = konhauser_z
make_konhauser_Y = konhauser_y


# -- Jacobi-suggested pair -------------------------------------------------

def _check_jacobi(p, q, strict: bool) -> tuple[Fraction, Fraction]:
    p, q = to_rational(p), to_rational(q)
    if strict and (p <= -1 or q <= -1):
        raise ParameterError(f"Jacobi parameters must exceed -1, got p={p}, q={q}")
    return p, q


def jacobi_j(p, q, upsilon: int, n: int, *, strict: bool = True) -> Polynomial:
    """J_n(p, q, v; x) expanded in ``((1-x)/2)^(vj)`` and converted to the
    monomial basis."""
    p, q = _check_jacobi(p, q, strict)
    u = Polynomial([Fraction(1, 2), Fraction(-1, 2)])
    total = Polynomial()
    for j in range(n + 1):
        c = (
            (-1) ** j * math.comb(n, j)
            * pochhammer(1 + p + upsilon * j, upsilon * (n - j))
            * pochhammer(1 + p + q + n, upsilon * j)
            / math.factorial(n)
        )
        if c:
            total = total + (u ** (upsilon * j)) * c
    return total


def jacobi_k(p, q, upsilon: int, n: int, *, strict: bool = True) -> Polynomial:
    """K_n(p, q, v; x) from the ``((x-1)/2)^r ((x+1)/2)^(n-r)`` basis."""
    p, q = _check_jacobi(p, q, strict)
    xm = Polynomial([Fraction(-1, 2), Fraction(1, 2)])
    xp = Polynomial([Fraction(1, 2), Fraction(1, 2)])
    inner = [pochhammer((s + p + 1) / upsilon, n) for s in range(n + 1)]
    total = Polynomial()
    for r in range(n + 1):
        c = sum(((-1) ** (r + s) * math.comb(r, s) * inner[s] for s in range(r + 1)), Fraction(0))
        c *= pochhammer(1 + q + n - r, r) / (math.factorial(n) * math.factorial(r))
        if c:
            total = total + (xm ** r) * (xp ** (n - r)) * c
    return total


make_jacobi_J = jacobi_j
make_jacobi_K = jacobi_k


# -- classical finite M_n^(p,q) -------------------------------------------

def classic_m(p, q, n: int, *, strict: bool = True) -> Polynomial:
    """(-1)^n n! sum_j C(p-n-1, j) C(q+n, n-j) (-x)^j."""
    p, q = to_rational(p), to_rational(q)
    if strict and (p <= 2 * n + 1 or q <= -1):
        raise ParameterError(f"classical M_n needs p > 2n+1 and q > -1, got p={p}, q={q}, n={n}")
    sign = (-1) ** n * math.factorial(n)
    return Polynomial([
        sign * binomial(p - n - 1, j) * binomial(q + n, n - j) * (-1) ** j for j in range(n + 1)
    ])


make_classic_M = classic_m


# -- terminating hypergeometric sums ---------------------------------------

class HypergeometricPoleError(ArithmeticError):
    pass


def hyp_terminating(numer, denom, arg: Polynomial, n_trunc: int) -> Polynomial:
    """Terminating ``pFq[numer; denom; arg]`` with a polynomial argument.

    The sum stops at the first index where a numerator Pochhammer vanishes;
    ``n_trunc`` is an upper bound on that index.
    """
    numer = [to_rational(a) for a in numer]
    denom = [to_rational(b) for b in denom]
    if not any(a.denominator == 1 and 0 <= -a <= n_trunc for a in numer):
        raise ValueError("no numerator parameter -n with n <= n_trunc; series does not terminate")
    total = Polynomial([Fraction(1)])
    term_coeff = Fraction(1)
    power = Polynomial([Fraction(1)])
    for j in range(n_trunc):
        num = pochhammer_product([a + j for a in numer], 1)
        if num == 0:
            break
        den = pochhammer_product([b + j for b in denom], 1)
        if den == 0:
            raise HypergeometricPoleError(f"denominator parameter hits zero at index {j}")
        term_coeff = term_coeff * num / (den * (j + 1))
        power = power * arg
        total = total + power * term_coeff
    return total


def m_hypergeometric_display(p, q, upsilon: int, n: int) -> Polynomial:
    """M_n via its ``_{v+1}F_v`` form with argument ``(-x)^v``."""
    p, q = to_rational(p), to_rational(q)
    arg = Polynomial.monomial(upsilon, Fraction((-1) ** upsilon))
    numer = [Fraction(-n)] + delta_params(upsilon, n + 1 - p)
    denom = delta_params(upsilon, q + 1)
    return hyp_terminating(numer, denom, arg, n) * ((-1) ** n * pochhammer(q + 1, upsilon * n))


def build(family: FamilyId | str, p, q, upsilon: int, n: int, *, strict: bool = True) -> Polynomial:
    """Dispatch on a family tag; ``p`` doubles as ``gamma`` for Konhauser."""
    family = FamilyId(family)
    if family is FamilyId.M:
        return make_M(ParamSet(p, q, upsilon, n, strict=strict), n)
    if family is FamilyId.MFRAK:
        return make_Mfrak(ParamSet(p, q, upsilon, n, strict=strict), n)
    if family is FamilyId.KONHAUSER_Z:
        return konhauser_z(p, upsilon, n, strict=strict)
    if family is FamilyId.KONHAUSER_Y:
        return konhauser_y(p, upsilon, n, strict=strict)
    if family is FamilyId.JACOBI_J:
        return jacobi_j(p, q, upsilon, n, strict=strict)
    if family is FamilyId.JACOBI_K:
        return jacobi_k(p, q, upsilon, n, strict=strict)
    return classic_m(p, q, n, strict=strict)

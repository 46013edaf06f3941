"""Verdict records shared by the verification layers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import Polynomial


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    DIVERGENT = "DIVERGENT"


class Mode(str, enum.Enum):
    EXACT_POLY = "EXACT_POLY"
    EXACT_SCALAR = "EXACT_SCALAR"
    NUMERIC_SERIES = "NUMERIC_SERIES"
    NUMERIC_LIMIT = "NUMERIC_LIMIT"

    @property
    def exact(self) -> bool:
        return self in (Mode.EXACT_POLY, Mode.EXACT_SCALAR)


def rational_pair(x) -> list[str]:
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def residual_repr(residual) -> Any:
    """JSON-ready residual: ``["num","den"]`` pairs for exact values, a
    17-significant-digit decimal string for floats."""
    if residual is None:
        return None
    if isinstance(residual, Polynomial):
        return [rational_pair(c) for c in residual.coeffs]
    if isinstance(residual, (int, Fraction)):
        return rational_pair(residual)
    if isinstance(residual, (list, tuple)):
        return [residual_repr(r) for r in residual]
    return f"{float(residual):.17g}"


def is_zero_residual(residual) -> bool:
    if isinstance(residual, Polynomial):
        return residual.is_zero()
    if isinstance(residual, (list, tuple)):
        return all(is_zero_residual(r) for r in residual)
    return residual == 0


@dataclass
class ResidualReport:
    """Outcome of one claim over its parameter samples.

    ``residual`` holds the worst (first nonzero, for exact modes) residual;
    ``samples`` lists the parameter points that were evaluated.
    """

    claim: str
    mode: Mode
    verdict: Verdict
    residual: Any = None
    samples: list = field(default_factory=list)
    variant: str = ""
    notes: str = ""
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_json(self) -> dict:
        return {
            "id": self.claim,
            "variant": self.variant,
            "params": self.samples,
            "mode": self.mode.value,
            "residual_repr": residual_repr(self.residual),
            "verdict": self.verdict.value,
            "notes": self.notes,
        }


IdentityReport = ResidualReport


def exact_verdict(residual) -> Verdict:
    return Verdict.PASS if is_zero_residual(residual) else Verdict.FAIL

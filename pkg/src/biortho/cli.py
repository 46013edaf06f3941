"""``biortho`` command line.

Every command prints one JSON document ``{"schema_version": 1, "kind": ...,
"payload": ...}`` (or CSV for ``coeffs --format csv``). Exact rationals are
``["num", "den"]`` string pairs, floats are 17-significant-digit strings.

Exit codes: 0 ok, 2 usage or parameter constraint, 3 verification drift,
4 numeric non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import audit
from .families import FamilyId, ParameterError, ParamSet, build
from .fourier import FourierParams, Normalization, PhiVariant, verify_parseval_pair
from .inner import DivergentError, WeightSpec, inner
from .report import rational_pair
from .scalar import PoleError, to_rational
from .transforms import (
    ConvergenceError,
    FracKind,
    FracOrder,
    Variant,
    fractional_shift,
    laplace_closed_form,
    laplace_quadrature_check,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_DRIFT, EXIT_NONCONVERGENCE = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code, self.kind, self.message = code, kind, message


def _float(x: float) -> str:
    return f"{x:.17g}"


def _doc(kind: str, payload, **extra) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **extra, "payload": payload}


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, sort_keys=False) + "\n")


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _family_poly(args):
    strict = not getattr(args, "unchecked", False)
    return build(FamilyId(args.family), args.p, args.q, args.upsilon, args.n, strict=strict)


def _params(args) -> dict:
    return {"p": str(args.p), "q": str(args.q), "upsilon": args.upsilon, "n": args.n}


# -- commands ------------------------------------------------------------------

def cmd_coeffs(args, out) -> int:
    poly = _family_poly(args)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "num", "den"])
        for k, c in enumerate(poly.coeffs):
            writer.writerow([k, c.numerator, c.denominator])
        out.write(buf.getvalue())
        return EXIT_OK
    _emit(_doc("coeffs", [rational_pair(c) for c in poly.coeffs], family=args.family, params=_params(args)), out)
    return EXIT_OK


def horner_float(coeffs, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def cmd_eval(args, out) -> int:
    poly = _family_poly(args)
    value = horner_float(poly.coeffs, float(args.x))
    _emit(_doc("eval", _float(value), family=args.family, params=_params(args), x=str(args.x),
               exact=rational_pair(poly(args.x))), out)
    return EXIT_OK


def cmd_inner(args, out) -> int:
    admissible = True
    if args.weight == "M_WEIGHT":
        params = ParamSet(args.p, args.q, args.upsilon, max(args.n, args.m), strict=not args.unchecked)
        admissible = params.is_admissible()
        w = WeightSpec.m_weight(args.p, args.q)
        f = build(FamilyId.M, args.p, args.q, args.upsilon, args.n, strict=False)
        g = build(FamilyId.MFRAK, args.p, args.q, args.upsilon, args.m, strict=False)
    elif args.weight == "LAGUERRE":
        w = WeightSpec.laguerre(args.q)
        f = build(FamilyId.KONHAUSER_Z, args.q, 0, args.upsilon, args.n, strict=not args.unchecked)
        g = build(FamilyId.KONHAUSER_Y, args.q, 0, args.upsilon, args.m, strict=not args.unchecked)
    else:
        w = WeightSpec.jacobi(args.p, args.q)
        f = build(FamilyId.JACOBI_J, args.p, args.q, args.upsilon, args.n, strict=not args.unchecked)
        g = build(FamilyId.JACOBI_K, args.p, args.q, args.upsilon, args.m, strict=not args.unchecked)
    normalized = inner(w, f, g)
    absolute = w.mass() * normalized
    exact = absolute.exact()
    payload = rational_pair(exact) if exact is not None else _float(float(absolute))
    _emit(_doc("inner", payload, weight=args.weight, params={**_params(args), "m": args.m},
               normalized=rational_pair(normalized), admissible=admissible), out)
    return EXIT_OK


def cmd_transform_laplace(args, out) -> int:
    params = ParamSet(args.p, args.q, args.upsilon, args.n, strict=not args.unchecked)
    value = laplace_closed_form(params, args.n, args.w, args.alpha, Variant(args.variant))
    exact = value.exact()
    payload = rational_pair(exact) if exact is not None else _float(float(value))
    extra = {"ratio": rational_pair(value.ratio), "factor": "Gamma(q+1)/alpha^(q+1)"}
    if args.quadrature:
        extra["quadrature_relative_residual"] = _float(laplace_quadrature_check(params, args.n, args.w, args.alpha))
    _emit(_doc("laplace", payload, variant=args.variant,
               params={**_params(args), "w": str(args.w), "alpha": str(args.alpha)}, **extra), out)
    return EXIT_OK


def cmd_transform_fractional(args, out) -> int:
    params = ParamSet(args.p, args.q, args.upsilon, args.n, strict=not args.unchecked)
    order = FracOrder(args.order, FracKind(args.kind), args.a)
    shift = fractional_shift(params, args.n, order, args.w)
    rep = shift.report
    payload = {
        "q_new": str(shift.q_new),
        "prefactor": {"num": [str(x) for x in shift.prefactor.num], "den": [str(x) for x in shift.prefactor.den]},
        "image_coeffs": [rational_pair(c) for c in shift.lhs.coeffs],
        "report": rep.to_json(),
    }
    _emit(_doc("fractional", payload, params={**_params(args), "order": str(args.order), "kind": args.kind,
                                                 "a": str(args.a), "w": str(args.w)}), out)
    return EXIT_OK if rep.verdict.value != "FAIL" else EXIT_DRIFT


def cmd_fourier_check(args, out) -> int:
    fp = FourierParams(args.gamma1, args.gamma2, args.lambda1, args.lambda2, args.upsilon)
    try:
        fp.check(max(args.n, args.m))
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    rep = verify_parseval_pair(fp, args.n, args.m, args.normalization, variant=PhiVariant(args.phi))
    payload = rep.to_json()
    payload["residuals"] = {k: _float(v) for k, v in rep.details["residuals"].items()}
    value = rep.details["integral"]
    payload["integral"] = [_float(value.real), _float(value.imag)]
    _emit(_doc("fourier-check", payload), out)
    return EXIT_OK


def resolve_seed(seed) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("BIORTHO_SEED")
    if env is None or env == "":
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "UsageError", f"BIORTHO_SEED must be an integer, got {env!r}") from exc


def cmd_verify(args, out) -> int:
    seed = resolve_seed(args.seed)
    try:
        ids = audit.resolve_claims(args.claims)
    except audit.UnknownClaimError as exc:
        raise CliError(EXIT_USAGE, "UnknownClaim", f"unknown claim id(s): {exc.args[0]}") from exc
    cfg = audit.AuditConfig(seed=seed, n_max=args.n_max, trials=args.trials)
    report = audit.run_claims(ids, cfg)
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    out.write(text)
    return EXIT_DRIFT if report["drift"] else EXIT_OK


# -- parser ----------------------------------------------------------------------

def _family_args(sp, n_required=True):
    sp.add_argument("--family", required=True, choices=[f.value for f in FamilyId])
    sp.add_argument("--p", type=_rational, default=Fraction(0), help="p (or gamma for Z/Y)")
    sp.add_argument("--q", type=_rational, default=Fraction(0))
    sp.add_argument("--upsilon", type=int, default=1)
    sp.add_argument("--n", type=int, required=n_required)
    sp.add_argument("--unchecked", action="store_true", help="skip admissibility checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biortho", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coeffs", help="exact ascending coefficients")
    _family_args(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("eval", help="double-precision Horner evaluation")
    _family_args(sp)
    sp.add_argument("--x", type=_rational, required=True)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("inner", help="exact inner product of a biorthogonal pair")
    sp.add_argument("--p", type=_rational, default=Fraction(0))
    sp.add_argument("--q", type=_rational, required=True, help="q (or gamma for LAGUERRE)")
    sp.add_argument("--upsilon", type=int, default=1)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--weight", choices=["M_WEIGHT", "LAGUERRE", "JACOBI"], default="M_WEIGHT")
    sp.add_argument("--unchecked", action="store_true")
    sp.set_defaults(func=cmd_inner)

    sp = sub.add_parser("transform", help="Laplace or Riemann-Liouville transforms")
    tsub = sp.add_subparsers(dest="transform", required=True)
    for name, func in (("laplace", cmd_transform_laplace), ("fractional", cmd_transform_fractional)):
        tp = tsub.add_parser(name)
        tp.add_argument("--p", type=_rational, required=True)
        tp.add_argument("--q", type=_rational, required=True)
        tp.add_argument("--upsilon", type=int, default=1)
        tp.add_argument("--n", type=int, required=True)
        tp.add_argument("--w", type=_rational, default=Fraction(1))
        tp.add_argument("--unchecked", action="store_true")
        tp.set_defaults(func=func)
        if name == "laplace":
            tp.add_argument("--alpha", type=_rational, required=True)
            tp.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.CORRECTED.value)
            tp.add_argument("--quadrature", action="store_true", help="also cross-check by quadrature")
        else:
            tp.add_argument("--order", type=_rational, required=True)
            tp.add_argument("--kind", choices=[k.value for k in FracKind], default=FracKind.INTEGRAL.value)
            tp.add_argument("--a", type=_rational, default=Fraction(0))

    sp = sub.add_parser("fourier-check", help="numeric biorthogonality of the Fourier-derived pair")
    for name in ("gamma1", "gamma2", "lambda1", "lambda2"):
        sp.add_argument(f"--{name}", type=_rational, required=True)
    sp.add_argument("--upsilon", type=int, default=1)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--normalization", choices=[v.value for v in Normalization], default=None)
    sp.add_argument("--phi", choices=[v.value for v in PhiVariant], default=PhiVariant.PRINTED.value)
    sp.set_defaults(func=cmd_fourier_check)

    sp = sub.add_parser("verify", help="run identity-audit claims")
    sp.add_argument("--claims", default="all", help="comma-separated claim ids or 'all'")
    sp.add_argument("--seed", type=int, default=None, help="defaults to $BIORTHO_SEED, then 0")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--report", default=None, help="also write the JSON report to this path")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CliError as exc:
        _emit({"schema_version": SCHEMA_VERSION, "error": {"type": exc.kind, "message": exc.message}}, out)
        return exc.code
    except (ParameterError, DivergentError, PoleError, ValueError, ZeroDivisionError) as exc:
        _emit({"schema_version": SCHEMA_VERSION, "error": {"type": type(exc).__name__, "message": str(exc)}}, out)
        return EXIT_USAGE
    except ConvergenceError as exc:
        _emit({"schema_version": SCHEMA_VERSION, "error": {"type": "ConvergenceError", "message": str(exc)}}, out)
        return EXIT_NONCONVERGENCE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()

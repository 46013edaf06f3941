"""Numeric biorthogonality table for the Fourier-derived pair Phi_n / chi_m.

Compares the line integral with the closed-form norm under both
normalizations and both forms of Phi.
"""
import argparse
from fractions import Fraction

from biortho.fourier import FourierParams, Normalization, PhiVariant, verify_parseval_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--params", default="3,3,3,3", help="gamma1,gamma2,lambda1,lambda2")
    ap.add_argument("--upsilon", type=int, default=1)
    ap.add_argument("--max-index", type=int, default=2)
    args = ap.parse_args()
    fp = FourierParams(*(Fraction(s) for s in args.params.split(",")), args.upsilon)

    print(f"{'n':>2} {'m':>2}  {'Phi':<10} {'integral':<30} {'res TWO_PI':<12} {'res TWO_PI_I':<12}")
    for n in range(args.max_index + 1):
        for m in range(args.max_index + 1):
            try:
                fp.check(max(n, m))
            except ValueError:
                continue
            for variant in PhiVariant:
                rep = verify_parseval_pair(fp, n, m, Normalization.TWO_PI, variant=variant)
                z = rep.details["integral"]
                r = rep.details["residuals"]
                print(f"{n:>2} {m:>2}  {variant.value:<10} {z.real:>+14.8g}{z.imag:>+14.3g}j  "
                      f"{r['TWO_PI']:<12.3g} {r['TWO_PI_I']:<12.3g}")


if __name__ == "__main__":
    main()

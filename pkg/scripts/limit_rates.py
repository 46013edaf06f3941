"""Decay of M_n(p, q, v; x/p) towards (-1)^n n! Z_n(x; v) as p grows.

Prints the exact deviation at each p and the ratio of successive
deviations against the 1/p rate.
"""
import argparse
from fractions import Fraction

from biortho.audit import limit_deviations


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", default="0")
    ap.add_argument("--schedule", default="100,1000,10000,100000")
    args = ap.parse_args()
    q = Fraction(args.q)
    schedule = [Fraction(s) for s in args.schedule.split(",")]

    print(f"{'pair':<4} {'v':>2} {'n':>2}  " + "  ".join(f"p={int(p):<8}" for p in schedule) + "  rate err")
    for which in ("Z", "Y"):
        for v in (1, 2, 3):
            for n in range(1, 4):
                devs = limit_deviations(which, q, v, n, schedule)
                errs = [abs(float(d1 / d0) / float(p0 / p1) - 1)
                        for d0, d1, p0, p1 in zip(devs, devs[1:], schedule, schedule[1:]) if d0]
                cells = "  ".join(f"{float(d):<10.3e}" for d in devs)
                print(f"{which:<4} {v:>2} {n:>2}  {cells}  {max(errs, default=0.0):.3g}")


if __name__ == "__main__":
    main()

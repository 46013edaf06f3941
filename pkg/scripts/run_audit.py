"""Run the identity audit and print a one-line summary per claim.

    python scripts/run_audit.py [--seed 7] [--n-max 4] [--trials 20] [--report out.json]
"""
import argparse
import json

from biortho.audit import AuditConfig, run_claims


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--claims", default="all")
    ap.add_argument("--report", default=None)
    args = ap.parse_args()

    report = run_claims(args.claims, AuditConfig(args.seed, args.n_max, args.trials))
    for c in report["claims"]:
        flag = "DRIFT" if c["drift"] else "ok"
        print(f"{c['id']:<26} {c['verdict']:<10} expected {c['expected']:<5} {flag:<5} {c['notes'][:70]}")
    print(f"run {report['run_id']}: {len(report['claims'])} claims, drift: {report['drift'] or 'none'}")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()

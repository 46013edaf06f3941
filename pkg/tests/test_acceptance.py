"""Acceptance criteria, one test and one printed PASS/FAIL line each.

The summary lines go straight to the terminal (capture is bypassed), so
``pytest tests/test_acceptance.py -v`` shows them inline.
"""
import dataclasses
import io
import random
from fractions import Fraction

import pytest

from biortho import audit, cli
from biortho.audit import AuditConfig, admissible_point, limit_deviations, run_claims
from biortho.families import ParamSet, classic_m, make_M, make_Mfrak
from biortho.fourier import FourierParams, Normalization, PhiVariant, barnes_value, verify_parseval_pair
from biortho.inner import WeightSpec, inner_absolute, verify_konhauser, verify_monomial_conditions, verify_Mort
from biortho.poly import Polynomial
from biortho.report import Verdict
from biortho.transforms import (
    FracKind,
    FracOrder,
    GammaMonomialSum,
    Variant,
    fractional_shift,
    laplace_closed_form,
    laplace_quadrature_check,
)

SEED = 20240601
UPSILONS = (1, 2, 3)
N_MAX = 4
DRAWS = 50


@pytest.fixture
def announce(capsys):
    def _announce(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return _announce


def _sweep(upsilon: int, seed_tag: str):
    rng = random.Random(f"{SEED}:{seed_tag}:{upsilon}")
    return [admissible_point(rng, upsilon, N_MAX) for _ in range(DRAWS)]


def test_criterion_01_biorthogonality(announce):
    failures = 0
    for v in UPSILONS:
        for p, q in _sweep(v, "mort"):
            params = ParamSet(p, q, v, N_MAX)
            for n in range(N_MAX + 1):
                for m in range(N_MAX + 1):
                    failures += verify_Mort(params, n, m).verdict is not Verdict.PASS
    ps = ParamSet(10, 0, 2, 1)
    fixture = inner_absolute(WeightSpec.m_weight(10, 0), make_M(ps, 1), make_Mfrak(ps, 1)).exact()
    ok = failures == 0 and fixture == Fraction(1, 3)
    announce(1, ok, f"{failures} failing (p,q,v,n,m) cases of {len(UPSILONS) * DRAWS * 25}; fixture {fixture}")


def test_criterion_02_monomial_conditions(announce):
    failures = 0
    for v in UPSILONS:
        for p, q in _sweep(v, "mort"):
            params = ParamSet(p, q, v, N_MAX)
            for n in range(N_MAX + 1):
                failures += verify_monomial_conditions(params, n).verdict is not Verdict.PASS
    announce(2, failures == 0, f"{failures} failing cases of {len(UPSILONS) * DRAWS * (N_MAX + 1)}")


def test_criterion_03_upsilon1_collapse(announce):
    rng = random.Random(f"{SEED}:collapse")
    failures = 0
    for _ in range(DRAWS):
        p, q = admissible_point(rng, 1, 8)
        params = ParamSet(p, q, 1, 8)
        for n in range(9):
            m, mf, cm = make_M(params, n), make_Mfrak(params, n), classic_m(p, q, n)
            failures += not (m == mf == cm)
    announce(3, failures == 0, f"{failures} coefficient mismatches over {DRAWS} draws, n <= 8")


def test_criterion_04_konhauser(announce):
    failures = 0
    for gamma in (Fraction(0), Fraction(1, 2), Fraction(3)):
        for v in UPSILONS:
            for n in range(4):
                for m in range(4):
                    failures += verify_konhauser(gamma, v, n, m).verdict is not Verdict.PASS
    fixture = verify_konhauser(0, 2, 1, 1).details["lhs_absolute"]
    ok = failures == 0 and fixture == 2
    announce(4, ok, f"{failures} failing of 144; fixture gamma=0 v=2 n=m=1 -> {fixture}")


LOCKED_PASS = ["eq8", "mdifequ", "eq15-corrected", "eq16-corrected", "eq17-corrected", "op-rep", "eq12-Z", "eq12-Y"]
LOCKED_FAIL = ["eq15-printed", "eq16-printed", "eq17-printed", "special-Z"]


def test_criterion_05_audit_verdicts_locked(announce, monkeypatch):
    report = run_claims(LOCKED_PASS + LOCKED_FAIL, AuditConfig(seed=SEED))
    verdicts = {c["id"]: c["verdict"] for c in report["claims"]}
    wrong = [cid for cid in LOCKED_PASS if verdicts[cid] != "PASS"]
    wrong += [cid for cid in LOCKED_FAIL if verdicts[cid] != "FAIL"]
    locked = {cid: audit.locked_fixture(cid) for cid in LOCKED_FAIL}
    bad_locks = [cid for cid, (got, stored) in locked.items() if got != stored or not got]
    # a flipped expectation must surface as a nonzero exit
    flipped = dataclasses.replace(audit.REGISTRY["eq15-printed"], expected=Verdict.PASS)
    monkeypatch.setitem(audit.REGISTRY, "eq15-printed", flipped)
    code = cli.main(["verify", "--claims", "eq15-printed", "--seed", "1", "--trials", "3"], io.StringIO())
    ok = not wrong and not bad_locks and not report["drift"] and code != 0
    announce(5, ok, f"wrong verdicts {wrong}, bad locks {bad_locks}, drift {report['drift']}, "
                    f"injected drift exit {code}")


def test_criterion_06_limit_rates(announce):
    schedule = (Fraction(100), Fraction(1000), Fraction(10000))
    worst = 0.0
    for which in ("Z", "Y"):
        for v in (1, 2):
            for n in range(4):
                for q in (Fraction(0), Fraction(1, 2), Fraction(7, 3)):
                    devs = limit_deviations(which, q, v, n, schedule)
                    if not any(devs):
                        continue
                    for d0, d1 in zip(devs, devs[1:]):
                        worst = max(worst, abs(float(d1 / d0) / 0.1 - 1))
    announce(6, worst <= 0.10, f"worst relative error of the decay ratio against 1/p: {worst:.4f}")


def test_criterion_07_laplace(announce):
    rng = random.Random(f"{SEED}:laplace")
    worst = 0.0
    for _ in range(20):
        v = rng.choice((1, 2, 3))
        n = rng.randint(0, 3)
        p, q = admissible_point(rng, v, n)
        w = Fraction(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice((-1, 1))
        alpha = Fraction(rng.randint(1, 20), rng.randint(1, 4))
        worst = max(worst, laplace_quadrature_check(ParamSet(p, q, v, n), n, w, alpha))
    fix = ParamSet(8, 1, 2, 1)
    corrected = laplace_closed_form(fix, 1, 1, 2, Variant.CORRECTED).exact()
    printed = laplace_closed_form(fix, 1, 1, 2, Variant.PRINTED).exact()
    ok = worst <= 1e-8 and corrected == Fraction(39, 4) and printed == Fraction(21, 16)
    announce(7, ok, f"worst relative quadrature gap {worst:.3g}; fixture {corrected}, printed {printed}")


def _gms(q, poly):
    return GammaMonomialSum.from_power(q, poly)


def test_criterion_08_fractional(announce):
    rng = random.Random(f"{SEED}:rl")
    failures = []
    orders = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
    for v in (1, 2):
        for n in range(4):
            for mu in orders:
                for kind in FracKind:
                    p = (v + 1) * n + 1 + Fraction(rng.randint(1, 40), rng.randint(1, 5))
                    q = mu + Fraction(rng.randint(0, 20), rng.randint(1, 7))
                    a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    shift = fractional_shift(ParamSet(p, q, v, n), n, FracOrder(mu, kind, a))
                    if shift.report.verdict is not Verdict.PASS:
                        failures.append(("shift", v, n, mu, kind.value))
                    src = _gms(q, make_M(ParamSet(p, q, v, n), n))
                    for lam in orders:
                        # semigroup I^mu I^lam = I^(mu+lam); D^lam I^lam = identity
                        two = src.integrate(mu).integrate(lam).to_power()
                        one = src.integrate(mu + lam).to_power()
                        if (two[0], two[1], two[2].reduced()) != (one[0], one[1], one[2].reduced()):
                            failures.append(("semigroup", v, n, mu, lam))
                        back = src.integrate(lam).apply(FracOrder(lam, FracKind.DERIVATIVE)).to_power()
                        orig = src.to_power()
                        if back[0] != orig[0] or back[1] != orig[1]:
                            failures.append(("left-inverse", v, n, lam))
    # integer orders collapse to antiderivative / derivative
    for n in range(4):
        poly = make_M(ParamSet(11, 0, 2, n), n)
        base, img, factor = _gms(0, poly).integrate(1).to_power()
        if base != 1 or img.shift_degree(1) * factor.exact() != poly.antiderivative():
            failures.append(("I^1", n))
        shifted = poly.shift_degree(1)
        base, img, factor = _gms(1, poly).apply(FracOrder(1, FracKind.DERIVATIVE)).to_power()
        if base != 0 or img * factor.exact() != shifted.derivative():
            failures.append(("D^1", n))
    announce(8, not failures, f"failures: {failures[:5]}")


def test_criterion_09_fourier_pair(announce):
    fp = FourierParams(3, 3, 3, 3, 1)
    barnes = verify_parseval_pair(fp, 0, 0, Normalization.TWO_PI)
    direct = barnes_value(fp.gamma2, fp.lambda2, fp.gamma1, fp.lambda1)
    off = verify_parseval_pair(fp, 0, 1, Normalization.TWO_PI)
    diag_printed = verify_parseval_pair(fp, 1, 1, Normalization.TWO_PI, variant=PhiVariant.PRINTED)
    diag = verify_parseval_pair(fp, 1, 1, Normalization.TWO_PI, variant=PhiVariant.CORRECTED)
    mass_gap = abs(barnes.details["integral"] - direct) / direct
    ok = (barnes.residual <= 1e-6 and mass_gap <= 1e-6 and off.residual <= 1e-6 and diag.residual <= 1e-6
          and diag_printed.verdict is Verdict.FAIL)
    announce(9, ok, f"n=m=0 {barnes.residual:.2g}, (0,1) {off.residual:.2g}, n=m=1 {diag.residual:.2g} "
                    f"with the D(v, g1-z) block in Phi; Phi without it misses n=m=1 by "
                    f"{diag_printed.residual:.3g} (locked FAIL)")


def test_criterion_10_generating_functions(announce):
    ids = ["eq13", "eq14", "mdog", "eq18", "mgen"]
    cfg = AuditConfig(seed=SEED)
    first, second = run_claims(ids, cfg), run_claims(ids, cfg)
    deterministic = first == second
    # hand-derived order t^1 at (p, q, v) = (5, 0, 1):
    # M_1(4, 1; x) = -2 + 2x, divided by (1-p-q)_1 * 1! = -4 gives (1 - x)/2;
    # the right side at t^1 is -1 (from e^-t) + x/4 (k = 1 term)
    oracle = Polynomial([Fraction(1, 2), Fraction(-1, 2)]) - Polynomial([Fraction(-1), Fraction(1, 4)])
    got = audit.eq14_residuals(5, 0, 1, 1)[1]  # (1-p-q)_n vanishes from n = 5 on
    ok = deterministic and cfg.series_order == cfg.n_max + 4 and got == oracle and not oracle.is_zero() \
        and not first["drift"]
    verdicts = {c["id"]: c["verdict"] for c in first["claims"]}
    announce(10, ok, f"T={cfg.series_order}, deterministic={deterministic}, eq14 t^1 residual {got}, "
                     f"verdicts {verdicts}")

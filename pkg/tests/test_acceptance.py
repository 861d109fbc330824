"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  Criteria are asserted exactly as stated.  Four criteria carry
reference values that the engine's verified computation contradicts, and
their sub-checks fail honestly rather than being weakened:

- criteria 6 and 8 (and the `nu1 = K-1` / boundary-biconditional parts of
  criterion 9): for the almost-minimal examples a general reduction J
  already contains I^2, so the index of nilpotency is 1, not 2.  This was
  confirmed by independent dense linear algebra mod p (no Groebner code)
  with constructive witnesses re-multiplied exactly, across five seeds
  and five characteristics; the identification of the index with the
  Hilbert-function bound K = lambda(Ibar^2/x_d Ibar) + 1 silently needs
  the degree-2 equality J cap I^2 = JI, which these examples fail
  (lambda((J cap I^2)/JI) = 1).  The reports carry both numbers.
- criterion 7, t = 0: gr_I(R) is k[y,u,v]/(y u^2), a hypersurface, hence
  Cohen-Macaulay with depth = dim = 2; "depth strictly below dimension"
  is therefore false at t = 0 (it holds at t = 1, which is verified).
"""

import random

import pytest

from oracles import (
    membership_oracle,
    monomial_intersection,
    monomial_quotient_length,
    staircase_count,
)

from jstretch.analysis import properties_audit, almost_cm_check, vv_equalities
from jstretch.fibercone import analytic_spread, gr_presentation, graded_depth
from jstretch.groebner import buchberger, normal_form
from jstretch.ideals import AmbientRing
from jstretch.lengths import count_standard_below, quotient_length
from jstretch.poly import PolyRing
from jstretch.reductions import (
    GeneralSampler,
    index_of_nilpotency,
    reduction_number,
    sample_reduction,
)
from jstretch.registry import build_case, middle_length, run_registry
from jstretch.speclab import QUANTITIES, fixed_vs_general, stability_trials

SEED = 1
TRIALS = 5


@pytest.fixture(scope="module")
def cache():
    reports = {}
    rds = {}

    class Cache:
        def report(self, cid, **kw):
            key = (cid, tuple(sorted(kw.items())))
            if key not in reports:
                reports[key] = run_registry(cid, seed=SEED, trials=TRIALS, **kw)
            return reports[key]

        def rd(self, cid, **kw):
            key = (cid, tuple(sorted(kw.items())))
            if key not in rds:
                case = build_case(cid, **kw)
                sampler = GeneralSampler(SEED, case.ambient.ring.field)
                rds[key] = (case, sample_reduction(case.ideal, sampler))
            return rds[key]

    return Cache()


def finish(number, checks):
    bad = [name for name, ok in checks if not ok]
    print(f"[ACCEPTANCE] criterion {number}: {'PASS' if not bad else 'FAIL'}")
    for name in bad:
        print(f"    failed sub-check: {name}")
    assert not bad, f"criterion {number} failed: {bad}"


def test_criterion_1_thickline_family(cache):
    checks = []
    for r in (2, 3, 4):
        report, diffs, case = cache.report("thickline", r=r)
        _, rd = cache.rd("thickline", r=r)
        x, y, z = case.ambient.ring.variables()
        checks += [
            (f"r={r}: r_J", report.r_J == r),
            (f"r={r}: s_J", report.s_J == r),
            (f"r={r}: j-stretched", report.flags.j_stretched),
            (f"r={r}: lambda(I2bar/xdIbar) = r-1", report.hilbert_K - 1 == r - 1),
            (f"r={r}: almost-minimal flag", report.flags.almost_minimal_j == (r <= 2)),
            (f"r={r}: saturation", rd.sat == case.ambient.ideal(x ** (r + 1), z)),
        ]
    finish(1, checks)


def test_criterion_2_intersection_curve(cache):
    checks = []
    for r in (2, 3):
        report, diffs, case = cache.report("noncm-curve", r=r)
        _, rd = cache.rd("noncm-curve", r=r)
        for t in range(2, r + 1):
            checks.append(
                (f"r={r}: middle length t={t}", middle_length(rd, t, use_full_J=True) == 1)
            )
        checks.append((f"r={r}: j-stretched", report.flags.j_stretched))
    finish(2, checks)


def test_criterion_3_mixed_monomials(cache):
    checks = []
    for cid in ("mixed-monomial-a", "mixed-monomial-b"):
        case, rd = cache.rd(cid)
        for t in (2, 3, 4):
            checks.append((f"{cid}: middle length t={t}", middle_length(rd, t) == 1))
        checks.append((f"{cid}: spread", analytic_spread(case.ideal) == 3))
    finish(3, checks)


def test_criterion_4_quartic_monomial(cache):
    report, diffs, case = cache.report("quartic-monomial")
    checks = [
        ("js length", report.js_length == 1),
        ("j-stretched", report.flags.j_stretched),
    ]
    finish(4, checks)


def test_criterion_5_gr_presentations(cache):
    checks = []
    for r in (1, 2, 3):
        report, diffs, case = cache.report("thickline", r=r)
        pres = gr_presentation(case.ideal)
        x, y, z, T1, T2 = pres.ring.variables()
        checks += [
            (f"r={r}: predicted CM", report.predicted_cm.predicted_cm),
            (f"r={r}: gr target", pres.matches([x, y, z * T2, T1 ** (r + 1), z * T1])),
            (f"r={r}: depth = dim", graded_depth(pres) == pres.dimension()),
        ]
    finish(5, checks)


SIX = (
    ("points-p2", {}),
    ("points-p3", {}),
    ("rn2-mon-a", {}),
    ("rn2-mon-b", {}),
    ("rn2-mon-c", {}),
    ("rn2-mon-wide", {}),
)


def test_criterion_6_reduction_number_two_family(cache):
    checks = []
    for cid, kw in SIX:
        _, rd = cache.rd(cid, **kw)
        checks.append((f"{cid}: r_J = 2", reduction_number(rd) == 2))
        checks.append((f"{cid}: s_J = 2", index_of_nilpotency(rd) == 2))
    finish(6, checks)


def test_criterion_7_no_g2_family(cache):
    checks = []
    for t in (0, 1):
        report, diffs, case = cache.report("non-g2", t=t)
        checks += [
            (f"t={t}: r_J = 0", report.r_J == 0),
            (f"t={t}: minimal j", report.flags.minimal_j),
            (f"t={t}: CONDITIONAL", report.predicted_cm.status == "CONDITIONAL"),
            (f"t={t}: G_d unasserted", "G_d" in report.predicted_cm.missing),
        ]
    case = build_case("non-g2", t=0)
    pres = gr_presentation(case.ideal)
    checks.append(("t=0: depth strictly below dim", graded_depth(pres) < pres.dimension()))
    finish(7, checks)


def test_criterion_8_semigroup(cache):
    report, diffs, case = cache.report("semigroup-345")
    checks = [
        ("j-stretched", report.flags.j_stretched),
        ("not stretched", report.flags.stretched is False),
        ("lambda(I2bar/xdIbar) = 1", report.hilbert_K - 1 == 1),
        ("K = 2", report.s_J == 2),
    ]
    finish(8, checks)


SUITE9 = (
    ("thickline", {"r": 2}),
    ("thickline", {"r": 3}),
    ("thickline", {"r": 4}),
    ("noncm-curve", {"r": 2}),
    ("noncm-curve", {"r": 3}),
    ("mixed-monomial-a", {}),
    ("mixed-monomial-b", {}),
    ("quartic-monomial", {}),
    ("points-p2", {}),
    ("points-p3", {}),
    ("rn2-mon-a", {}),
    ("rn2-mon-b", {}),
    ("rn2-mon-c", {}),
    ("rn2-mon-wide", {}),
    ("semigroup-345", {}),
)


def test_criterion_9_property_suites(cache):
    from jstretch.analysis import classify, nu_sequence

    checks = []
    for cid, kw in SUITE9:
        label = cid if not kw else f"{cid}({kw})"
        _, rd = cache.rd(cid, **kw)
        flags = classify(rd)
        if not flags.j_stretched or flags.minimal_j:
            checks.append((f"{label}: expected j-stretched non-minimal", False))
            continue
        r = reduction_number(rd)
        K = index_of_nilpotency(rd)
        nu, nubar = nu_sequence(rd, r)
        checks.append((f"{label}: nu non-increasing", all(nu[n] <= nu[n - 1] for n in range(2, r + 1))))
        checks.append((f"{label}: nubar1 = nu1", r < 1 or nubar[1] == nu[1]))
        checks.append((f"{label}: nu1 = K-1", r < 1 or nu[1] == K - 1))
        checks.append((f"{label}: I^K not inside J", not rd.J.contains_locally(rd.Ipow(K)) if K >= 1 else True))
        checks.append((f"{label}: I^(K+1) inside J", rd.J.contains_locally(rd.Ipow(K + 1))))
        audit = properties_audit(rd)
        checks.append((f"{label}: audit a-d", all(audit.items.values())))
        vv = vv_equalities(rd, K)
        checks.append((f"{label}: power/equality biconditional", vv.biconditional_ok))
        acm = almost_cm_check(rd)
        checks.append((f"{label}: boundary biconditional", acm.biconditional_ok))
    finish(9, checks)


def test_criterion_10_stability_and_fixed_comparisons(cache):
    checks = []
    quantity_cases = SUITE9 + (("non-g2", {"t": 0}),)
    for cid, kw in quantity_cases:
        case = build_case(cid, **kw)
        label = cid if not kw else f"{cid}({kw})"
        for quantity in QUANTITIES:
            rep = stability_trials(case.ideal, quantity, trials=20)
            checks.append((f"{label}/{quantity}: stability >= 0.9", rep.stability >= 0.9))
    thick = build_case("thickline", r=3)
    x, y, z = thick.ambient.ring.variables()
    semi = build_case("semigroup-345")
    a, b, c = semi.ambient.ring.variables()
    fixed_cases = [
        ("thickline H=(y)", thick.ideal, thick.ambient.ideal(y)),
        ("thickline H=(x+y)", thick.ideal, thick.ambient.ideal(x + y)),
        ("semigroup H=(a)", semi.ideal, semi.ambient.ideal(a)),
        ("semigroup H=(a+b)", semi.ideal, semi.ambient.ideal(a + b)),
    ]
    for label, ideal, fixed in fixed_cases:
        for quantity in QUANTITIES:
            got = fixed_vs_general(ideal, fixed, quantity, trials=TRIALS)
            checks.append((f"{label}/{quantity}: general <= fixed", got.general_le_fixed))
    # the hand-picked reduction (y) computes the same value as a general one
    got = fixed_vs_general(thick.ideal, thick.ambient.ideal(y), "I2/JI", trials=TRIALS)
    checks.append(("thickline H=(y): I2/JI equality", got.fixed_value == got.general_modal))
    finish(10, checks)


def test_criterion_11_engine_oracles():
    checks = []
    ring = PolyRing(("x", "y", "z"))
    rng = random.Random(41)

    def random_poly(max_deg=3, max_terms=4):
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            exps = [0] * 3
            for _ in range(rng.randint(0, max_deg)):
                exps[rng.randrange(3)] += 1
            terms.append((tuple(exps), rng.randrange(1, ring.field.p)))
        return ring.from_exp_terms(terms)

    agree = 0
    for k in range(50):
        gens = [g for g in (random_poly() for _ in range(rng.randint(2, 3))) if not g.is_zero]
        if not gens:
            continue
        gb = buchberger(gens)
        if k % 2 == 0:
            h = ring.zero()
            for g in gens:
                h = h + random_poly(max_deg=2) * g
        else:
            h = random_poly(max_deg=4)
        agree += normal_form(h, gb).is_zero == membership_oracle(ring, h, gens)
    checks.append(("membership agrees on 50 random ideals", agree == 50))

    amb = AmbientRing(ring)
    ok_len = 0
    for _ in range(100):
        gens = []
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(0, 3) for _ in range(3))
            gens.append(ring.from_exp_terms([(exps, 1)]))
        A = amb.ideal(gens)
        B = A * (amb.maximal_ideal ** rng.randint(1, 2))
        expected = monomial_quotient_length(
            [ring.decode(g.lm) for g in A.generators],
            [ring.decode(g.lm) for g in B.generators],
            3,
        )
        ok_len += quotient_length(A, B).value == expected
    checks.append(("quotient_length agrees on 100 monomial pairs", ok_len == 100))

    ok_cap = 0
    for _ in range(100):
        def mono_ideal():
            return amb.ideal(
                [
                    ring.from_exp_terms([(tuple(rng.randint(0, 4) for _ in range(3)), 1)])
                    for _ in range(rng.randint(1, 4))
                ]
            )

        A, B = mono_ideal(), mono_ideal()
        expected_gens = monomial_intersection(
            [ring.decode(g.lm) for g in A.generators],
            [ring.decode(g.lm) for g in B.generators],
        )
        expected = amb.ideal([ring.from_exp_terms([(e, 1)]) for e in expected_gens])
        ok_cap += A.intersect(B) == expected
    checks.append(("intersect agrees on 100 monomial pairs", ok_cap == 100))
    finish(11, checks)

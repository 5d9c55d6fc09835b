"""Acceptance suite: one test per release criterion, exact equality only.

Each test prints a single pass/fail line; run with ``pytest -s
tests/test_acceptance.py`` to see them on the terminal.
"""

import json
from fractions import Fraction as F

from walg.affine import eta_membership_check
from walg.catalog import (AlgebraId, build_algebra, coroot_pair,
                          expected_chi, expected_h_check, pair)
from walg.classify import (A_value, DominantWeight, WModuleLabel,
                           cross_identity_report, enumerate_Pk, is_extremal,
                           level, level_M, standard_levels, table_M,
                           unitarity_verdict)
from walg.cli import run_command
from walg.ledger import (check_affine_pairings, check_d21_cone,
                         check_singular_weights)

D21_PAIRS = ((2, 1), (3, 1), (3, 2), (5, 2), (5, 3))
SIX_FAMILIES = (["psl2-2", "spo2-3", "spo2-5", "f4", "g3"]
                + [f"d21-{m}-{n}" for m, n in D21_PAIRS])
# per-family level counts for the property grids (10 levels per family; the
# d21 family spreads its 10 over the five sampled coprime pairs)
PROPERTY_GRID = ([("psl2-2", 10), ("spo2-3", 10), ("spo2-5", 10),
                  ("f4", 10), ("g3", 10)]
                 + [(f"d21-{m}-{n}", 2) for m, n in D21_PAIRS])
EXTRA_GRID = [("spo2-6", 5), ("spo2-7", 4), ("spo2-8", 3)]


def _verdict(criterion, ok):
    print(f"acceptance {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, criterion


def test_criterion_1_table_reproduction():
    ok = True
    for name in SIX_FAMILIES + ["spo2-6", "spo2-7", "spo2-8"]:
        alg = build_algebra(AlgebraId.parse(name))
        ok = ok and 1 + pair(alg.rho, alg.theta) == expected_h_check(alg.id)
        ok = ok and tuple(-coroot_pair(alg.xi, t) for t in alg.theta_i) == expected_chi(alg.id)
    spo23 = build_algebra(AlgebraId.parse("spo2-3"))
    f4 = build_algebra(AlgebraId.parse("f4"))
    ok = ok and (spo23.h_check, spo23.chi) == (F(1, 2), (F(-2),))
    ok = ok and (f4.h_check, f4.chi) == (F(-2), (F(-1),))
    _verdict("1 table-reproduction", ok)


def test_criterion_2_level_closed_forms():
    ok = True
    for name in SIX_FAMILIES:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 20):
            lvl = level(name, k)
            M = level_M(lvl)
            ok = ok and M == table_M(lvl)
            ok = ok and all(m.denominator == 1 and m >= 0 for m in M)
    _verdict("2 level-closed-forms", ok)


def test_criterion_3_zhu_threshold_oracle():
    ok = True
    for m in range(3, 13):
        lvl = level("spo2-3", F(-m, 4))
        for j in (m - 3, m - 2):
            if j < 0:
                continue
            nu = DominantWeight(lvl.alg.id, (j,))
            ok = ok and A_value(lvl, nu) == F(j, 4)
    for m in range(1, 11):
        lvl = level("psl2-2", F(-m - 1))
        nu = DominantWeight(lvl.alg.id, (m,))
        ok = ok and A_value(lvl, nu) == F(m, 2)
    _verdict("3 zhu-threshold-oracle", ok)


def test_criterion_4_classification_lists():
    code, out = run_command(["modules", "spo2-3", "--k", "-1", "--w", "--json"])
    ok = code == 0
    data = json.loads(out)
    ok = ok and [(tuple(r["nu_coeffs"]), r["ell0"]) for r in data["modules"]] == [
        ((0,), "free"), ((1,), "1/4"), ((2,), "1/2")]
    code, out = run_command(["modules", "psl2-2", "--k", "-2", "--w", "--json"])
    ok = ok and code == 0
    data = json.loads(out)
    ok = ok and [(tuple(r["nu_coeffs"]), r["ell0"]) for r in data["modules"]] == [
        ((0,), "free"), ((1,), "1/2")]
    _verdict("4 classification-lists", ok)


def test_criterion_5_property_suite():
    wanted = ("classify.extremal-dual", "classify.ell0-symmetry",
              "classify.threshold-roots", "classify.reduce-descends")
    ok = True
    for name, count in PROPERTY_GRID + EXTRA_GRID:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, count):
            rep = cross_identity_report(level(name, k))
            by_id = {e.check_id: e.passed for e in rep.entries}
            ok = ok and all(by_id[w] for w in wanted)
    _verdict("5 property-suite", ok)


def test_criterion_6_ledger_suite():
    ok = True
    for name, count in PROPERTY_GRID + EXTRA_GRID:
        aid = AlgebraId.parse(name)
        alg = build_algebra(aid)
        ok = ok and eta_membership_check(alg).all_pass
        for k in standard_levels(aid, count):
            lvl = level(name, k)
            ok = ok and check_affine_pairings(lvl).all_pass
            ok = ok and check_singular_weights(lvl).all_pass
    for m, n in D21_PAIRS:
        for q in range(1, 5):
            ok = ok and check_d21_cone(m, n, q).all_pass
    _verdict("6 ledger-suite", ok)


def test_criterion_7_verdict_calibration():
    ok = True
    # vacuum is unitary at every sampled in-range level
    for name, count in PROPERTY_GRID + EXTRA_GRID:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, count):
            lvl = level(name, k)
            vac = WModuleLabel(DominantWeight(aid, (0,) * lvl.alg.rank_natural), F(0))
            ok = ok and str(unitarity_verdict(lvl, vac)) == "unitary"
    # extremal with equality: unitary exactly for psl2-2, spo2-3, spo2-m at
    # k = -1; otherwise the question stays open (nonzero weights sampled)
    for name, count in PROPERTY_GRID + EXTRA_GRID:
        aid = AlgebraId.parse(name)
        proven_family = name in ("psl2-2", "spo2-3")
        for k in standard_levels(aid, count):
            lvl = level(name, k)
            proven = proven_family or (aid.family == "spo2" and k == -1)
            for nu in enumerate_Pk(lvl):
                if nu.is_zero or not is_extremal(lvl, nu):
                    continue
                at_threshold = WModuleLabel(nu, A_value(lvl, nu))
                want = "unitary" if proven else "open"
                ok = ok and str(unitarity_verdict(lvl, at_threshold)) == want
                off = WModuleLabel(nu, A_value(lvl, nu) + 1)
                ok = ok and str(unitarity_verdict(lvl, off)) == "not_unitary:1c"
    _verdict("7 verdict-calibration", ok)

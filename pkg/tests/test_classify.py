from fractions import Fraction as F
from itertools import product

import pytest

from walg.catalog import AlgebraId, coroot_pair
from walg.classify import (AffineModuleLabel, CriticalLevelError,
                           DominantWeight, RangeError, WModuleLabel,
                           A_value, affine_module_descends,
                           classify_w_modules, cross_identity_report, ell0,
                           enumerate_Pk, extremal_h_set, hamiltonian_reduce,
                           in_unitarity_range, is_extremal, level, level_M,
                           standard_levels, table_M, unitarity_verdict,
                           w_module_exists)

FAMILY_REPS = ["psl2-2", "spo2-3", "spo2-5", "d21-2-1", "d21-3-2", "f4", "g3"]


def nu_of(lvl, *coeffs):
    return DominantWeight(lvl.alg.id, tuple(coeffs))


def test_critical_level_rejected():
    with pytest.raises(CriticalLevelError):
        level("spo2-3", F(-1, 2))
    with pytest.raises(CriticalLevelError):
        level("psl2-2", 0)


@pytest.mark.parametrize("name,k,expected", [
    ("psl2-2", F(-2), True),
    ("psl2-2", F(-3, 2), False),
    ("psl2-2", F(-1), False),
    ("f4", F(-2, 3), False),
    ("f4", F(-4, 3), True),
    ("spo2-3", F(-3, 4), True),
    ("spo2-3", F(-5, 8), False),
    ("spo2-5", F(-1), True),
    ("g3", F(-3, 2), True),
    ("g3", F(-3, 4), False),
    ("d21-2-1", F(-2, 3), True),
    ("d21-2-1", F(-1), False),
])
def test_unitarity_range_membership(name, k, expected):
    assert in_unitarity_range(level(name, k)) is expected


@pytest.mark.parametrize("name,k,expected", [
    ("spo2-3", F(-3, 4), (F(1),)),
    ("psl2-2", F(-2), (F(1),)),
    ("d21-2-1", F(-2, 3), (F(1), F(0))),
])
def test_level_M_examples(name, k, expected):
    assert level_M(level(name, k)) == expected


@pytest.mark.parametrize("name", FAMILY_REPS)
def test_level_M_matches_closed_forms(name):
    aid = AlgebraId.parse(name)
    for k in standard_levels(aid, 20):
        lvl = level(name, k)
        M = level_M(lvl)
        assert M == table_M(lvl)
        assert all(m.denominator == 1 and m >= 0 for m in M)


def brute_force_cone(lvl):
    """Independent oracle: scan a generous box and keep the dominant weights
    whose coroot pairings against every theta_i stay within the levels."""
    alg = lvl.alg
    M = level_M(lvl)
    cap = max(int(m) for m in M)
    keep = []
    for coeffs in product(range(cap + 1), repeat=alg.rank_natural):
        w = None
        for c, omega in zip(coeffs, alg.natural_fundamental):
            w = c * omega if w is None else w + c * omega
        ok = all(coroot_pair(w, t) <= m for t, m in zip(alg.theta_i, M))
        if ok:
            keep.append(coeffs)
    return keep


@pytest.mark.parametrize("name,k,expected", [
    ("spo2-3", F(-1), [(0,), (1,), (2,)]),
    ("psl2-2", F(-2), [(0,), (1,)]),
    ("d21-2-1", F(-2, 3), [(0, 0), (1, 0)]),
])
def test_enumerate_cone_frozen(name, k, expected):
    lvl = level(name, k)
    assert [nu.coeffs for nu in enumerate_Pk(lvl)] == expected


@pytest.mark.parametrize("name,k", [
    ("spo2-3", F(-1)), ("psl2-2", F(-3)), ("spo2-5", F(-2)),
    ("d21-3-2", F(-12, 5)), ("f4", F(-2)), ("g3", F(-9, 4)),
])
def test_enumerate_cone_against_brute_force(name, k):
    lvl = level(name, k)
    assert [nu.coeffs for nu in enumerate_Pk(lvl)] == brute_force_cone(lvl)


def test_enumerate_requires_range():
    with pytest.raises(RangeError):
        enumerate_Pk(level("psl2-2", F(-3, 2)))


def test_extremality_examples():
    lvl = level("spo2-3", F(-1))
    assert is_extremal(lvl, nu_of(lvl, 0)) is False
    assert is_extremal(lvl, nu_of(lvl, 1)) is True
    lvl2 = level("spo2-3", F(-3, 4))
    assert is_extremal(lvl2, nu_of(lvl2, 0)) is True
    with pytest.raises(RangeError):
        is_extremal(lvl, nu_of(lvl, 5))


def test_extremality_dual_characterization():
    for name in FAMILY_REPS:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 4):
            lvl = level(name, k)
            alg = lvl.alg
            M = level_M(lvl)
            for nu in enumerate_Pk(lvl):
                shifted = nu.weight() + alg.xi
                in_cone = all(
                    coroot_pair(shifted, s).denominator == 1
                    and coroot_pair(shifted, s) >= 0
                    for s in alg.natural_simple
                ) and all(coroot_pair(shifted, t) <= m
                          for t, m in zip(alg.theta_i, M))
                assert is_extremal(lvl, nu) == (not in_cone)


def test_A_value_examples():
    lvl = level("spo2-3", F(-1))
    assert A_value(lvl, nu_of(lvl, 0)) == 0
    assert A_value(lvl, nu_of(lvl, 2)) == F(1, 2)
    lvl2 = level("psl2-2", F(-2))
    assert A_value(lvl2, nu_of(lvl2, 1)) == F(1, 2)


def test_ell0_examples():
    lvl = level("spo2-3", F(-1))
    assert ell0(lvl, nu_of(lvl, 0), 0) == 0
    assert ell0(lvl, nu_of(lvl, 1), F(-1, 4)) == F(1, 4)
    # symmetry under h -> k + 1 - h
    for h in (F(0), F(2, 7), F(-5, 3)):
        assert ell0(lvl, nu_of(lvl, 1), h) == ell0(lvl, nu_of(lvl, 1), lvl.k + 1 - h)


def test_extremal_h_set_examples():
    lvl = level("spo2-3", F(-1))
    assert extremal_h_set(lvl, nu_of(lvl, 0)) == {F(0), lvl.k + 1}
    assert extremal_h_set(lvl, nu_of(lvl, 2)) == {F(-1, 2), F(1, 2)}
    lvl2 = level("psl2-2", F(-2))
    assert extremal_h_set(lvl2, nu_of(lvl2, 1)) == {F(-1, 2)}  # genuine singleton


def test_threshold_meets_ell0_exactly_on_h_set():
    for name in ("spo2-3", "psl2-2", "g3"):
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 3):
            lvl = level(name, k)
            for nu in enumerate_Pk(lvl):
                threshold = A_value(lvl, nu)
                e_set = extremal_h_set(lvl, nu)
                for h in e_set:
                    assert ell0(lvl, nu, h) == threshold
                for h in (F(7), lvl.k - 1, F(1, 3)):
                    assert (ell0(lvl, nu, h) == threshold) == (h in e_set)


def test_affine_descent_examples():
    lvl = level("psl2-2", F(-2))
    assert affine_module_descends(lvl, AffineModuleLabel(nu_of(lvl, 0), F(5)))
    assert not affine_module_descends(lvl, AffineModuleLabel(nu_of(lvl, 1), F(0)))
    assert affine_module_descends(lvl, AffineModuleLabel(nu_of(lvl, 1), F(-1, 2)))
    # nu outside the truncated cone never descends
    assert not affine_module_descends(lvl, AffineModuleLabel(nu_of(lvl, 3), F(0)))


def test_w_module_existence_examples():
    lvl = level("spo2-3", F(-1))
    assert w_module_exists(lvl, WModuleLabel(nu_of(lvl, 1), F(1, 4)))
    assert not w_module_exists(lvl, WModuleLabel(nu_of(lvl, 1), F(0)))
    assert w_module_exists(lvl, WModuleLabel(nu_of(lvl, 0), F(7)))
    # the free family marker only lives on non-extremal weights
    assert w_module_exists(lvl, WModuleLabel(nu_of(lvl, 0), None))
    assert not w_module_exists(lvl, WModuleLabel(nu_of(lvl, 1), None))


def test_hamiltonian_reduce_examples():
    lvl = level("spo2-3", F(-1))
    assert hamiltonian_reduce(lvl, AffineModuleLabel(nu_of(lvl, 0), F(-1, 2))) is None
    out = hamiltonian_reduce(lvl, AffineModuleLabel(nu_of(lvl, 0), F(0)))
    assert out == WModuleLabel(nu_of(lvl, 0), F(0))
    out = hamiltonian_reduce(lvl, AffineModuleLabel(nu_of(lvl, 1), F(-1, 4)))
    assert out == WModuleLabel(nu_of(lvl, 1), F(1, 4))


def test_reduce_of_admissible_labels_lands_on_admissible_w_labels():
    for name in FAMILY_REPS:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 3):
            lvl = level(name, k)
            for nu in enumerate_Pk(lvl):
                if is_extremal(lvl, nu):
                    hs = sorted(extremal_h_set(lvl, nu))
                else:
                    hs = [F(0), F(1, 2), lvl.k + 1]
                for h in hs:
                    label = AffineModuleLabel(nu, h)
                    if not affine_module_descends(lvl, label):
                        continue
                    reduced = hamiltonian_reduce(lvl, label)
                    assert reduced is None or w_module_exists(lvl, reduced)


def test_verdict_examples():
    lvl = level("spo2-3", F(-1))
    assert str(unitarity_verdict(lvl, WModuleLabel(nu_of(lvl, 0), F(1)))) == "unitary"
    assert str(unitarity_verdict(lvl, WModuleLabel(nu_of(lvl, 2), F(0)))) == "not_unitary:1c"
    g3 = level("g3", F(-3, 2))
    w1 = DominantWeight(g3.alg.id, (1, 0))
    assert is_extremal(g3, w1)
    assert str(unitarity_verdict(g3, WModuleLabel(w1, A_value(g3, w1)))) == "open"


def test_verdict_condition_tags():
    lvl = level("spo2-5", F(-2))
    too_big = DominantWeight(lvl.alg.id, (5, 0))
    assert str(unitarity_verdict(lvl, WModuleLabel(too_big, F(10)))) == "not_unitary:1b"
    small = DominantWeight(lvl.alg.id, (0, 0))
    assert str(unitarity_verdict(lvl, WModuleLabel(small, F(-1)))) == "not_unitary:1c"
    with pytest.raises(ValueError):
        unitarity_verdict(lvl, WModuleLabel(small, None))


def test_verdict_requires_range():
    lvl = level("psl2-2", F(-5, 2))
    with pytest.raises(RangeError):
        unitarity_verdict(lvl, WModuleLabel(nu_of(lvl, 0), F(0)))


def test_vacuum_is_unitary_on_the_whole_sampled_range():
    for name in FAMILY_REPS + ["d21-3-1", "d21-5-2", "d21-5-3", "spo2-6"]:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 5):
            lvl = level(name, k)
            vac = WModuleLabel(DominantWeight(aid, (0,) * lvl.alg.rank_natural), F(0))
            assert w_module_exists(lvl, vac)
            assert str(unitarity_verdict(lvl, vac)) == "unitary", (name, k)


def test_classification_records_spo23():
    lvl = level("spo2-3", F(-1))
    records = classify_w_modules(lvl)
    assert [(r.nu.coeffs, r.ell0, r.extremal) for r in records] == [
        ((0,), None, False),
        ((1,), F(1, 4), True),
        ((2,), F(1, 2), True),
    ]
    assert all(str(r.verdict) == "unitary" for r in records)


def test_free_family_exists_when_margins_allow():
    # the one-parameter families witness non-rationality; they exist at every
    # sampled level whose margins M_i + chi_i are all nonnegative
    for name in FAMILY_REPS:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 5):
            lvl = level(name, k)
            M = level_M(lvl)
            if any(m + c < 0 for m, c in zip(M, lvl.alg.chi)):
                continue  # boundary level: every weight is extremal
            assert any(not is_extremal(lvl, nu) for nu in enumerate_Pk(lvl))


def test_cross_identity_report_green():
    for name in FAMILY_REPS:
        aid = AlgebraId.parse(name)
        for k in standard_levels(aid, 3):
            rep = cross_identity_report(level(name, k))
            assert rep.all_pass, [e.line() for e in rep.failures()]

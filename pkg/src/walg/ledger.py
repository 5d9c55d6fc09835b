"""Regression ledger: the weight-arithmetic identities behind the
classification, re-verified as exact assertions.

Only weights and pairings are computed here; no statement about actual
singular vectors or module structure is made.  Check ids are stable strings
so golden reports diff cleanly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .affine import AffineWeight, affine_coroot_pair, affine_pair, finite_part
from .catalog import coroot_pair
from .classify import (A_value, DominantWeight, Level, classify_w_modules,
                       enumerate_Pk, level_M, table_M, theta_values)
from .report import Report
from .scalars import rational_str, solve_linear, vector

__all__ = [
    "check_singular_weights",
    "check_affine_pairings",
    "check_d21_cone",
    "check_zhu_consequences",
    "run_level_ledger",
]


def check_singular_weights(lvl: Level) -> Report:
    """Weights of the maximal-ideal generators, by mode bookkeeping.

    The generator attached to summand i is built from M_i(k) + 1 current
    modes of weight (theta_i, 1), so its W-weight is ((M_i+1) theta_i,
    M_i+1).  For spo2-3 the generator instead uses M_1(k) - 1 current modes
    and one fermionic mode of weight (xi, 3/2), giving (2(m-2) omega_1,
    m - 3/2) with m = M_1(k) + 2.
    """
    rep = Report()
    alg = lvl.alg
    name = alg.id.name
    M = level_M(lvl)
    M_closed = table_M(lvl)

    for i, theta_i in enumerate(alg.theta_i):
        n_modes = M[i] + 1
        built_weight = n_modes * theta_i
        built_energy = n_modes * Fraction(1)
        rep.add(f"ideal.generator-weight[{i + 1}]", algebra=name, k=lvl.k,
                formula="(M_i+1) current modes give W-weight ((M_i+1) theta_i, M_i+1)",
                expected=(tuple(((M_closed[i] + 1) * theta_i).coords), M_closed[i] + 1),
                computed=(tuple(built_weight.coords), built_energy))

    if alg.id.family == "spo2" and alg.id.m == 3:
        m = M[0] + 2
        built = (M[0] - 1) * alg.theta_i[0] + alg.xi
        built_energy = (M[0] - 1) + Fraction(3, 2)
        omega1 = alg.natural_fundamental[0]
        rep.add("ideal.spo23-generator-weight", algebra=name, k=lvl.k,
                formula="(M_1-1) current modes plus one fermionic mode give (2(m-2) omega_1, m-3/2)",
                expected=(tuple((2 * (m - 2) * omega1).coords), m - Fraction(3, 2)),
                computed=(tuple(built.coords), built_energy))
    return rep


def _h_samples(lvl: Level):
    return (Fraction(0), lvl.k - Fraction(1, 3))


def check_affine_pairings(lvl: Level) -> Report:
    """Affine pairing scalars used by the descent and ideal arguments."""
    rep = Report()
    alg = lvl.alg
    name = alg.id.name
    k = lvl.k
    M = level_M(lvl)
    spo23 = alg.id.family == "spo2" and alg.id.m == 3

    alpha1 = finite_part(alg.alpha1)
    theta = finite_part(alg.theta)
    delta = AffineWeight(0 * alg.theta, 0, 1)
    k_lambda0 = AffineWeight(0 * alg.theta, k, 0)
    lam_prime = k_lambda0 - delta + theta - alpha1

    for i, theta_i in enumerate(alg.theta_i):
        eta = delta - finite_part(theta_i)
        rep.add(f"affine.level-pairing[{i + 1}]", algebra=name, k=k,
                formula="(Lambda'|eta_i-coroot) = M_i(k)",
                expected=M[i], computed=affine_coroot_pair(lam_prime, eta))

        rep.add(f"affine.vacuum-eta[{i + 1}]", algebra=name, k=k,
                formula="(k Lambda_0|eta_i-coroot) = M_i(k) - chi_i",
                expected=M[i] - alg.chi[i],
                computed=affine_coroot_pair(k_lambda0, eta))

        rep.add(f"affine.xi-restriction[{i + 1}]", algebra=name, k=k,
                formula="(alpha_1|theta_i-coroot) = -xi(theta_i-coroot)",
                expected=-coroot_pair(alg.xi, theta_i),
                computed=coroot_pair(alg.alpha1, theta_i))

        lam_triple = k_lambda0 - (M[i] + 1) * eta - delta + theta - alpha1
        if not spo23:
            rep.add(f"affine.nonvanishing-linear[{i + 1}]", algebra=name, k=k,
                    formula="(Lambda'''_i|alpha_1) = -k + 1",
                    expected=-k + 1, computed=affine_pair(lam_triple, alpha1))
        else:
            alpha0 = delta - theta
            rep.add("spo23.nonvanishing-a0a1", algebra=name, k=k,
                    formula="(mu|alpha_0 + alpha_1) = -k - 1/2",
                    expected=-k - Fraction(1, 2),
                    computed=affine_pair(lam_triple, alpha0 + alpha1))
            rep.add("spo23.nonvanishing-alpha1", algebra=name, k=k,
                    formula="(k Lambda_0 - (M_1+1)(delta - theta_1)|alpha_1) = (M_1+1)/2",
                    expected=(M[0] + 1) / 2,
                    computed=affine_pair(k_lambda0 - (M[0] + 1) * eta, alpha1))

    alpha0 = delta - theta
    etas = [delta - finite_part(t) for t in alg.theta_i]
    # constants per summand; the nu_hat pairing is the only per-weight part
    shifts = [(affine_pair(alpha1, eta), affine_pair(alpha0, eta),
               affine_pair(eta, eta)) for eta in etas]
    step_ok = True
    for nu in enumerate_Pk(lvl):
        vals = theta_values(lvl, nu)
        for h in _h_samples(lvl):
            nu_hat = AffineWeight(h * alg.theta + nu.weight(), k, 0)
            for i, eta in enumerate(etas):
                c1, c0, norm = shifts[i]
                base = affine_pair(nu_hat, eta)
                want = M[i] - vals[i]
                got1 = 2 * (base - c1 - c0) / norm
                got2 = 2 * (base - c1) / norm
                step_ok = step_ok and got1 == want and got2 == want
    rep.add("affine.integrability-step", algebra=name, k=k,
            formula="(nu_h - alpha_1 [- alpha_0]|eta_i-coroot) = M_i(k) - nu(theta_i-coroot)",
            expected=True, computed=step_ok)

    return rep


def check_d21_cone(m: int, n: int, q: int) -> Report:
    """Cone coefficients in the two-generator comparison for d21.

    Writes (mq alpha_2, mq) - (nq alpha_3, nq) over the weight cone basis
    {(-alpha_2, 0), (-alpha_3, 0), ((alpha_2+alpha_3)/2, 1/2)} by an exact
    3x3 solve; the coefficients are (-nq, mq, 2(m-n)q), so the first one is
    negative and the comparison is impossible.
    """
    if m <= n:
        raise ValueError("the d21 cone argument assumes m > n")
    if gcd(m, n) != 1:
        raise ValueError("d21 parameters must be coprime")
    if q < 1:
        raise ValueError("q must be a positive integer")
    rep = Report()
    # columns in coordinates (alpha_2 coefficient, alpha_3 coefficient, energy)
    half = Fraction(1, 2)
    a = (
        vector([-1, 0, half]),
        vector([0, -1, half]),
        vector([0, 0, half]),
    )
    b = vector([m * q, -n * q, (m - n) * q])
    solution = solve_linear(a, b)
    rep.add("d21.cone-coefficients", algebra=f"d21-{m}-{n}",
            k=Fraction(-q * m * n, m + n),
            formula="(mq alpha_2, mq) - (nq alpha_3, nq) over the cone basis",
            expected=vector([-n * q, m * q, 2 * (m - n) * q]),
            computed=solution)
    rep.add("d21.cone-negative", algebra=f"d21-{m}-{n}",
            k=Fraction(-q * m * n, m + n),
            formula="the first cone coefficient is negative",
            expected=True, computed=solution[0] < 0)
    return rep


def check_zhu_consequences(lvl: Level) -> Report:
    """Numeric consequences of the top-component relations.

    For spo2-3 at k = -m/4 the extremal thresholds are A(k, j omega_1) = j/4
    at j = m-3 and m-2, and the complete W-list is the free family for
    j <= m-4 plus those two pinned labels.  For psl2-2 at k = -m-1 the single
    extremal label is (m omega_1, m/2) on top of the free family j <= m-1.
    """
    alg = lvl.alg
    aid = alg.id
    if not (aid.family == "psl2-2" or (aid.family == "spo2" and aid.m == 3)):
        raise ValueError("zhu consequences are recorded for spo2-3 and psl2-2 only")
    rep = Report()
    name = aid.name
    M = level_M(lvl)

    if aid.family == "spo2":
        m = M[0] + 2
        pinned = [j for j in (m - 3, m - 2) if j >= 0]
        quarter = Fraction(1, 4)
        for j in pinned:
            rep.add(f"zhu.threshold[j={j}]", algebra=name, k=lvl.k,
                    formula="A(-m/4, j omega_1) = j/4 at j in {m-3, m-2}",
                    expected=j * quarter,
                    computed=A_value(lvl, DominantWeight(aid, (int(j),))))
        expected_list = [((int(j),), "free") for j in range(int(m) - 3)]
        expected_list += [((int(j),), rational_str(j * quarter)) for j in pinned]
    else:
        m = M[0]
        rep.add(f"zhu.threshold[j={m}]", algebra=name, k=lvl.k,
                formula="A(-m-1, m omega_1) = m/2",
                expected=m / 2,
                computed=A_value(lvl, DominantWeight(aid, (int(m),))))
        expected_list = [((int(j),), "free") for j in range(int(m))]
        expected_list += [((int(m),), rational_str(m / 2))]

    computed_list = [
        (rec.nu.coeffs, "free" if rec.ell0 is None else rational_str(rec.ell0))
        for rec in classify_w_modules(lvl)
    ]
    rep.add("zhu.module-list", algebra=name, k=lvl.k,
            formula="the classified W-list matches the explicit top-component list",
            expected=expected_list, computed=computed_list)
    return rep


def run_level_ledger(lvl: Level) -> Report:
    """All level-dependent ledger checks applicable to this algebra."""
    rep = Report()
    rep.extend(check_singular_weights(lvl))
    rep.extend(check_affine_pairings(lvl))
    aid = lvl.alg.id
    if aid.family == "psl2-2" or (aid.family == "spo2" and aid.m == 3):
        rep.extend(check_zhu_consequences(lvl))
    return rep

"""Static data for the six admissible families and its self-validation.

Each family carries: an ambient rational coordinate space (epsilon
coordinates first, then delta coordinates), the invariant bilinear form as a
Gram matrix normalised so that the highest root theta has square length 2,
an ordered simple-root system whose first member alpha_1 is odd isotropic,
the full positive-root list (loaded from the embedded data files), the
highest roots theta_i of the simple summands of the small reductive
subalgebra g-natural, the odd root pairs gamma_1/gamma_2 with
theta - gamma_1 - gamma_2 = -theta_i, and derived invariants: the Weyl
vectors rho and rho-natural, the g-natural highest weight xi of the
half-grading, the integers chi_i = -xi(theta_i-coroot), and the dual
Coxeter number h_check = 1 + (rho|theta).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import rootdata
from .report import Report
from .scalars import (Matrix, Vector, rational, rational_str, solve_linear,
                      vector)

__all__ = [
    "AlgebraId",
    "Weight",
    "Root",
    "AlgebraData",
    "InvalidAlgebraError",
    "AlgebraMismatchError",
    "IsotropyError",
    "build_algebra",
    "pair",
    "coroot_pair",
    "fundamental_weights",
    "selfcheck_algebra",
    "expected_h_check",
    "expected_chi",
    "algebra_json",
    "weight_json",
    "root_json",
]

_HALF = Fraction(1, 2)


class InvalidAlgebraError(ValueError):
    """The requested family/parameters are not in the catalog."""


class AlgebraMismatchError(ValueError):
    """Weights from different algebras were combined."""


class IsotropyError(ValueError):
    """A coroot pairing was requested against an isotropic root."""


@dataclass(frozen=True)
class AlgebraId:
    """One admissible family instance.

    family is one of ``psl2-2``, ``spo2`` (with m >= 3, m != 4), ``d21``
    (with coprime m, n >= 1, so the deformation parameter m/n avoids the
    degenerate values 0 and -1), ``f4``, ``g3``.
    """

    family: str
    m: int = 0
    n: int = 0

    def __post_init__(self):
        fam = self.family
        if fam in ("psl2-2", "f4", "g3"):
            if self.m or self.n:
                raise InvalidAlgebraError(f"{fam} takes no parameters")
        elif fam == "spo2":
            if self.n:
                raise InvalidAlgebraError("spo2 takes a single parameter m")
            if not isinstance(self.m, int) or self.m < 3 or self.m == 4:
                raise InvalidAlgebraError(
                    f"spo2-{self.m}: m must be an integer >= 3 and != 4")
        elif fam == "d21":
            if not (isinstance(self.m, int) and isinstance(self.n, int)
                    and self.m >= 1 and self.n >= 1):
                raise InvalidAlgebraError("d21 needs positive integers m, n")
            if gcd(self.m, self.n) != 1:
                raise InvalidAlgebraError(
                    f"d21-{self.m}-{self.n}: m and n must be coprime")
        else:
            raise InvalidAlgebraError(f"unknown algebra family {fam!r}")

    @property
    def name(self) -> str:
        if self.family == "spo2":
            return f"spo2-{self.m}"
        if self.family == "d21":
            return f"d21-{self.m}-{self.n}"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        """Parse a CLI-style name: psl2-2, spo2-<m>, d21-<m>-<n>, f4, g3."""
        text = text.strip().lower()
        if text in ("psl2-2", "f4", "g3"):
            return cls(text)
        m = re.fullmatch(r"spo2-(\d+)", text)
        if m:
            return cls("spo2", int(m.group(1)))
        m = re.fullmatch(r"d21-(\d+)-(\d+)", text)
        if m:
            return cls("d21", int(m.group(1)), int(m.group(2)))
        raise InvalidAlgebraError(f"unknown algebra name {text!r}")

    def __str__(self) -> str:
        return self.name


def ambient_dim(aid: AlgebraId) -> int:
    if aid.family == "psl2-2":
        return 4
    if aid.family == "spo2":
        return aid.m // 2 + 1
    if aid.family == "d21":
        return 3
    if aid.family == "f4":
        return 4
    return 3  # g3


@dataclass(frozen=True)
class Weight:
    """A finite weight in the ambient coordinates of one algebra."""

    algebra: AlgebraId
    coords: Vector

    def __post_init__(self):
        coords = self.coords
        if not (type(coords) is tuple and all(type(c) is Fraction for c in coords)):
            coords = vector(coords)
            object.__setattr__(self, "coords", coords)
        if len(coords) != ambient_dim(self.algebra):
            raise AlgebraMismatchError(
                f"{self.algebra} weights have {ambient_dim(self.algebra)} "
                f"coordinates, got {len(coords)}")

    def _check(self, other: "Weight"):
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"cannot combine {self.algebra} and {other.algebra} weights")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "Weight":
        s = rational(scalar)
        return Weight(self.algebra, tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: str  # "even" | "odd"

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"

    def is_isotropic(self) -> bool:
        # derived, never stored
        return pair(self.weight, self.weight) == 0


@dataclass(frozen=True)
class AlgebraData:
    """Complete static description of one family instance (immutable)."""

    id: AlgebraId
    coord_names: tuple[str, ...]
    gram: Matrix
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    theta: Weight
    theta_i: tuple[Weight, ...]
    xi: Weight
    rho: Weight
    rho_nat: Weight
    h_check: Fraction
    chi: tuple[Fraction, ...]
    gamma1: tuple[Weight, ...]
    gamma2: tuple[Weight, ...]
    natural_simple: tuple[Root, ...]
    natural_fundamental: tuple[Weight, ...]

    @property
    def summands(self) -> int:
        """Number of simple summands of g-natural (1, or 2 for d21)."""
        return len(self.theta_i)

    @property
    def rank_natural(self) -> int:
        return len(self.natural_simple)

    @property
    def alpha1(self) -> Weight:
        """The distinguished odd isotropic simple root (first in the list)."""
        return self.simple_roots[0].weight


@lru_cache(maxsize=None)
def _gram(aid: AlgebraId) -> Matrix:
    fam = aid.family
    if fam == "psl2-2":
        return matrix_diag([1, 1, -1, -1])
    if fam == "spo2":
        r = aid.m // 2
        return matrix_diag([-_HALF] * r + [_HALF])
    if fam == "d21":
        m, n = aid.m, aid.n
        return matrix_diag([_HALF, Fraction(-n, 2 * (m + n)), Fraction(-m, 2 * (m + n))])
    if fam == "f4":
        return matrix_diag([Fraction(-2, 3)] * 3 + [2])
    # g3: epsilon block has (e_i|e_i) = -1/2, (e_1|e_2) = 1/4, and (d|d) = 1/2
    q = Fraction(1, 4)
    return (
        (-_HALF, q, Fraction(0)),
        (q, -_HALF, Fraction(0)),
        (Fraction(0), Fraction(0), _HALF),
    )


def matrix_diag(entries) -> Matrix:
    vals = vector(entries)
    n = len(vals)
    return tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _gram_sparse(aid: AlgebraId) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
    return tuple(tuple((j, v) for j, v in enumerate(row) if v != 0)
                 for row in _gram(aid))


def pair(a: Weight, b: Weight) -> Fraction:
    """Invariant bilinear form of two weights of the same algebra."""
    if a.algebra != b.algebra:
        raise AlgebraMismatchError(f"cannot pair {a.algebra} with {b.algebra}")
    sparse = _gram_sparse(a.algebra)
    bc = b.coords
    total = Fraction(0)
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        for j, g in sparse[i]:
            bj = bc[j]
            if bj != 0:
                total += ai * g * bj
    return total


def coroot_pair(w: Weight, alpha) -> Fraction:
    """Evaluate w on the coroot of alpha: 2 (w|alpha) / (alpha|alpha)."""
    root = alpha.weight if isinstance(alpha, Root) else alpha
    norm = pair(root, root)
    if norm == 0:
        raise IsotropyError("coroot pairing against an isotropic root")
    return 2 * pair(w, root) / norm


def _w(aid: AlgebraId, entries) -> Weight:
    return Weight(aid, entries)


def _family_ingredients(aid: AlgebraId):
    """Simple roots (ordered, alpha_1 first), theta, theta_i, gamma pairs,
    coordinate names, and the root-data file key for one family."""
    fam = aid.family
    if fam == "psl2-2":
        names = ("e1", "e2", "d1", "d2")
        simple = (
            ( (1, 0, -1, 0), "odd"),   # e1 - d1
            ( (0, 0, 1, -1), "even"),  # d1 - d2
            ( (0, -1, 0, 1), "odd"),   # d2 - e2
        )
        theta = (1, -1, 0, 0)
        theta_i = ((0, 0, 1, -1),)
        gamma1 = ((1, 0, 0, -1),)      # e1 - d2
        gamma2 = ((0, -1, 1, 0),)      # d1 - e2
        return names, simple, theta, theta_i, gamma1, gamma2, "psl2-2", None, 2, 2
    if fam == "spo2":
        r = aid.m // 2
        odd_m = aid.m % 2 == 1
        names = tuple(f"e{i}" for i in range(1, r + 1)) + ("d1",)
        dim = r + 1
        def unit(idx, val=1):
            row = [Fraction(0)] * dim
            row[idx] = Fraction(val)
            return row
        first = unit(r)               # d1
        first[0] -= 1                 # d1 - e1
        simple = [(tuple(first), "odd")]
        for i in range(r - 1):
            row = unit(i)
            row[i + 1] -= 1           # e_i - e_{i+1}
            simple.append((tuple(row), "even"))
        if odd_m:
            simple.append((tuple(unit(r - 1)), "even"))            # e_r
        else:
            row = unit(r - 2)
            row[r - 1] += 1
            simple.append((tuple(row), "even"))                    # e_{r-1} + e_r
        theta = tuple(unit(r, 2))                                  # 2 d1
        if aid.m == 3:
            theta_i = (tuple(unit(0)),)                            # e1
            g1 = unit(r); g1[0] += 1
            gamma1 = (tuple(g1),)                                  # d1 + e1
            gamma2 = (tuple(unit(r)),)                             # d1
        else:
            t = unit(0); t[1] += 1
            theta_i = (tuple(t),)                                  # e1 + e2
            g1 = unit(r); g1[0] += 1
            g2 = unit(r); g2[1] += 1
            gamma1 = (tuple(g1),)                                  # d1 + e1
            gamma2 = (tuple(g2),)                                  # d1 + e2
        key = "spo2-odd" if odd_m else "spo2-even"
        return names, tuple(simple), theta, theta_i, gamma1, gamma2, key, r, r, 1
    if fam == "d21":
        names = ("e1", "e2", "e3")
        simple = (
            ((1, -1, -1), "odd"),
            ((0, 2, 0), "even"),
            ((0, 0, 2), "even"),
        )
        theta = (2, 0, 0)
        theta_i = ((0, 2, 0), (0, 0, 2))
        gamma1 = ((1, 1, -1), (1, 1, 1))
        gamma2 = ((1, 1, 1), (1, -1, 1))
        return names, simple, theta, theta_i, gamma1, gamma2, "d21", None, 3, 0
    if fam == "f4":
        names = ("e1", "e2", "e3", "d1")
        h = _HALF
        simple = (
            ((-h, -h, -h, h), "odd"),   # (d1 - e1 - e2 - e3)/2
            ((0, 0, 1, 0), "even"),     # e3
            ((0, 1, -1, 0), "even"),    # e2 - e3
            ((1, -1, 0, 0), "even"),    # e1 - e2
        )
        theta = (0, 0, 0, 1)
        theta_i = ((1, 1, 0, 0),)
        gamma1 = ((h, h, -h, h),)
        gamma2 = ((h, h, h, h),)
        return names, simple, theta, theta_i, gamma1, gamma2, "f4", None, 3, 1
    # g3 (third epsilon rewritten as -e1-e2 on input)
    names = ("e1", "e2", "d1")
    simple = (
        ((-1, -1, 1), "odd"),   # d1 + e3
        ((1, 0, 0), "even"),    # e1
        ((-1, 1, 0), "even"),   # e2 - e1
    )
    theta = (0, 0, 2)
    theta_i = ((1, 2, 0),)      # e2 - e3
    gamma1 = ((1, 1, 1),)       # d1 - e3
    gamma2 = ((0, 1, 1),)       # d1 + e2
    return names, simple, theta, theta_i, gamma1, gamma2, "g3", None, 2, 1


def _solve_fundamental(natural_simple: tuple[Root, ...]) -> tuple[Weight, ...]:
    """Dual basis to the g-natural simple coroots, inside their span.

    Solves omega_a(alpha_b-coroot) = delta_ab with omega_a expanded over the
    natural simple roots; the coefficient matrix is the (exact) Cartan matrix
    of g-natural and is always nonsingular for the catalog.
    """
    roots = [r.weight for r in natural_simple]
    n = len(roots)
    cartan = tuple(tuple(coroot_pair(roots[b], roots[c]) for b in range(n))
                   for c in range(n))
    out = []
    for a in range(n):
        rhs = vector(int(c == a) for c in range(n))
        coeffs = solve_linear(cartan, rhs)
        w = roots[0] * coeffs[0]
        for b in range(1, n):
            w = w + roots[b] * coeffs[b]
        out.append(w)
    return tuple(out)


@lru_cache(maxsize=None)
def build_algebra(aid: AlgebraId) -> AlgebraData:
    """Construct the full static data of one family instance."""
    (names, simple_raw, theta_raw, theta_i_raw, gamma1_raw, gamma2_raw,
     data_key, m_param, num_e, num_d) = _family_ingredients(aid)
    simple = tuple(Root(_w(aid, c), p) for c, p in simple_raw)
    theta = _w(aid, theta_raw)
    theta_i = tuple(_w(aid, c) for c in theta_i_raw)
    gamma1 = tuple(_w(aid, c) for c in gamma1_raw)
    gamma2 = tuple(_w(aid, c) for c in gamma2_raw)

    raw = rootdata.load_positive_roots(data_key, num_e=num_e, num_d=num_d, m=m_param)
    positive = tuple(Root(_w(aid, coords), parity) for parity, coords in raw)

    even_sum = _w(aid, [0] * ambient_dim(aid))
    odd_sum = _w(aid, [0] * ambient_dim(aid))
    for root in positive:
        if root.is_odd:
            odd_sum = odd_sum + root.weight
        else:
            even_sum = even_sum + root.weight
    rho = _HALF * even_sum - _HALF * odd_sum

    natural_pos = [r for r in positive
                   if not r.is_odd and pair(r.weight, theta) == 0]
    nat_sum = _w(aid, [0] * ambient_dim(aid))
    for root in natural_pos:
        nat_sum = nat_sum + root.weight
    rho_nat = _HALF * nat_sum

    alpha1 = simple[0].weight
    # restriction to the Cartan of g-natural = orthogonal projection away
    # from theta; xi is minus that restriction of alpha_1
    proj_coeff = pair(alpha1, theta) / pair(theta, theta)
    xi = proj_coeff * theta - alpha1

    chi = tuple(-coroot_pair(xi, t) for t in theta_i)
    h_check = 1 + pair(rho, theta)
    natural_simple = tuple(r for r in simple
                           if not r.is_odd and pair(r.weight, theta) == 0)
    natural_fundamental = _solve_fundamental(natural_simple)

    return AlgebraData(
        id=aid,
        coord_names=names,
        gram=_gram(aid),
        simple_roots=simple,
        positive_roots=positive,
        theta=theta,
        theta_i=theta_i,
        xi=xi,
        rho=rho,
        rho_nat=rho_nat,
        h_check=h_check,
        chi=chi,
        gamma1=gamma1,
        gamma2=gamma2,
        natural_simple=natural_simple,
        natural_fundamental=natural_fundamental,
    )


def fundamental_weights(alg: AlgebraData) -> tuple[Weight, ...]:
    """The weights omega_a with omega_a(alpha_b-coroot) = delta_ab, all
    orthogonal to theta (so they live in the dual of the g-natural Cartan)."""
    return alg.natural_fundamental


def expected_h_check(aid: AlgebraId) -> Fraction:
    """Catalog dual Coxeter number of the family (closed form)."""
    if aid.family == "psl2-2":
        return Fraction(0)
    if aid.family == "spo2":
        return 2 - Fraction(aid.m, 2)
    if aid.family == "d21":
        return Fraction(0)
    if aid.family == "f4":
        return Fraction(-2)
    return Fraction(-3, 2)  # g3


def expected_chi(aid: AlgebraId) -> tuple[Fraction, ...]:
    """Catalog chi values: -2 for spo2-3, otherwise -1 per summand."""
    if aid.family == "spo2" and aid.m == 3:
        return (Fraction(-2),)
    if aid.family == "d21":
        return (Fraction(-1), Fraction(-1))
    return (Fraction(-1),)


def _in_natural_cone(alg: AlgebraData, w: Weight) -> bool:
    """Is w a nonnegative-integer combination of the g-natural simple roots?

    Solves for the coefficients via the (nonsingular) Gram matrix of the
    natural simple roots, then verifies the expansion reproduces w exactly.
    """
    roots = [r.weight for r in alg.natural_simple]
    n = len(roots)
    gram = tuple(tuple(pair(roots[a], roots[b]) for b in range(n)) for a in range(n))
    rhs = vector(pair(w, roots[a]) for a in range(n))
    coeffs = solve_linear(gram, rhs)
    recombined = _w(alg.id, [0] * ambient_dim(alg.id))
    for c, r in zip(coeffs, roots):
        recombined = recombined + c * r
    if recombined != w:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def selfcheck_algebra(alg: AlgebraData) -> Report:
    """Validate every catalog invariant of one family instance."""
    rep = Report()
    name = alg.id.name

    rep.add("catalog.theta-norm", algebra=name,
            formula="(theta|theta) = 2",
            expected=Fraction(2), computed=pair(alg.theta, alg.theta))

    rep.add("catalog.alpha1-isotropic", algebra=name,
            formula="(alpha_1|alpha_1) = 0",
            expected=Fraction(0), computed=pair(alg.alpha1, alg.alpha1))

    rep.add("catalog.theta-alpha1", algebra=name,
            formula="(theta|alpha_1) = 1",
            expected=Fraction(1), computed=pair(alg.theta, alg.alpha1))

    rep.add("catalog.dual-coxeter", algebra=name,
            formula="1 + (rho|theta) equals the catalog h_check",
            expected=expected_h_check(alg.id), computed=1 + pair(alg.rho, alg.theta))

    rep.add("catalog.chi-values", algebra=name,
            formula="-xi(theta_i-coroot) equals the catalog chi_i",
            expected=expected_chi(alg.id),
            computed=tuple(-coroot_pair(alg.xi, t) for t in alg.theta_i))

    for i in range(alg.summands):
        rep.add(f"catalog.gamma-decomposition[{i + 1}]", algebra=name,
                formula="theta - gamma_1 - gamma_2 = -theta_i",
                expected=-alg.theta_i[i],
                computed=alg.theta - alg.gamma1[i] - alg.gamma2[i])

    odd_pos = [r.weight for r in alg.positive_roots if r.is_odd]
    gammas_listed = all(g in odd_pos for g in alg.gamma1 + alg.gamma2)
    rep.add("catalog.gamma-odd-positive", algebra=name,
            formula="gamma_1, gamma_2 are odd positive roots",
            expected=True, computed=gammas_listed)

    coords = [r.weight.coords for r in alg.positive_roots]
    no_dups = len(set(coords)) == len(coords)
    no_neg = all(tuple(-c for c in w) not in set(coords) for w in coords)
    simple_listed = all(s.weight.coords in set(coords) for s in alg.simple_roots)
    rep.add("catalog.positive-root-sanity", algebra=name,
            formula="positive roots: no duplicates, no alpha with -alpha, simples included",
            expected=True, computed=no_dups and no_neg and simple_listed)

    grading_ok = True
    theta_count = 0
    for r in alg.positive_roots:
        g = pair(r.weight, alg.theta)
        if r.is_odd:
            grading_ok = grading_ok and g == 1
        else:
            grading_ok = grading_ok and g in (0, 2)
            if g == 2:
                theta_count += 1
                grading_ok = grading_ok and r.weight == alg.theta
    rep.add("catalog.parity-grading", algebra=name,
            formula="odd positives sit in x-degree 1/2, even in degree 0 or 1 (theta only)",
            expected=True, computed=grading_ok and theta_count == 1)

    natural_pos = [r.weight for r in alg.positive_roots
                   if not r.is_odd and pair(r.weight, alg.theta) == 0]
    rep.add("catalog.natural-span", algebra=name,
            formula="every positive g-natural root is a Z+-combination of the natural simples",
            expected=True,
            computed=all(_in_natural_cone(alg, w) for w in natural_pos))

    highest = True
    pos_set = set(coords)
    for t in alg.theta_i:
        highest = highest and t.coords in pos_set
        for s in alg.natural_simple:
            highest = highest and (t + s.weight).coords not in pos_set
    rep.add("catalog.theta-i-highest", algebra=name,
            formula="each theta_i is a positive g-natural root and theta_i + simple is never a root",
            expected=True, computed=highest)

    duality = all(
        coroot_pair(alg.natural_fundamental[a], alg.natural_simple[b]) == int(a == b)
        for a in range(alg.rank_natural) for b in range(alg.rank_natural))
    orthogonal = all(pair(w, alg.theta) == 0 for w in alg.natural_fundamental)
    rep.add("catalog.fundamental-duality", algebra=name,
            formula="omega_a(alpha_b-coroot) = delta_ab and omega_a orthogonal to theta",
            expected=True, computed=duality and orthogonal)

    xi_dominant = all(
        (lambda v: v.denominator == 1 and v >= 0)(coroot_pair(alg.xi, s))
        for s in alg.natural_simple)
    rep.add("catalog.xi-dominant", algebra=name,
            formula="xi is a dominant integral weight of g-natural",
            expected=True, computed=xi_dominant)

    return rep


def weight_json(w: Weight) -> list[str]:
    return [rational_str(c) for c in w.coords]


def root_json(r: Root) -> dict:
    return {"coords": weight_json(r.weight), "parity": r.parity}


def algebra_json(alg: AlgebraData) -> dict:
    """Deterministic JSON form of the full static data."""
    return {
        "algebra": alg.id.name,
        "coordinates": list(alg.coord_names),
        "gram": [[rational_str(v) for v in row] for row in alg.gram],
        "simple_roots": [root_json(r) for r in alg.simple_roots],
        "positive_roots": [root_json(r) for r in alg.positive_roots],
        "theta": weight_json(alg.theta),
        "theta_i": [weight_json(w) for w in alg.theta_i],
        "xi": weight_json(alg.xi),
        "rho": weight_json(alg.rho),
        "rho_nat": weight_json(alg.rho_nat),
        "h_check": rational_str(alg.h_check),
        "chi": [rational_str(c) for c in alg.chi],
        "gamma1": [weight_json(w) for w in alg.gamma1],
        "gamma2": [weight_json(w) for w in alg.gamma2],
        "natural_simple": [root_json(r) for r in alg.natural_simple],
        "natural_fundamental": [weight_json(w) for w in alg.natural_fundamental],
    }

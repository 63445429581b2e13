"""Classification of integral lattice isometries.

Every isometry of a nondegenerate integral form falls into one of three
classes: elliptic (finite order), parabolic (infinite order, all eigenvalues
on the unit circle), or hyperbolic (a real eigenvalue of modulus > 1).
The classification here is fully certified: root locations relative to the
unit circle are decided by Sturm counts on exact integer polynomials, never
by floating-point thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import intpoly, linalg
from .errors import (
    DimensionMismatch,
    NotAnIsometry,
    NotHyperbolic,
    PropositionViolated,
    UnexpectedSpectrum,
)
from .intervals import RationalInterval
from .lattice import GramLattice, is_isometry, signature

_APPROX_REL_WIDTH = Fraction(1, 10**16)


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number given by its minimal polynomial, a rational
    isolating interval, and a floating approximation.

    ``minpoly`` is monic with integer coefficients, ascending order,
    irreducible over Q; the open interval (lo, hi) contains exactly one of
    its real roots.
    """

    minpoly: tuple
    interval: tuple
    approx: float

    @classmethod
    def from_isolating_interval(cls, minpoly, lo, hi) -> "AlgebraicNumber":
        minpoly = intpoly.normalize(minpoly)
        lo, hi = Fraction(lo), Fraction(hi)
        if intpoly.count_real_roots_between(minpoly, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        width = _APPROX_REL_WIDTH * max(1, abs(lo), abs(hi))
        lo, hi = intpoly.refine_isolating_interval(minpoly, lo, hi, width)
        return cls(minpoly=minpoly, interval=(lo, hi), approx=float((lo + hi) / 2))

    @property
    def lo(self) -> Fraction:
        return self.interval[0]

    @property
    def hi(self) -> Fraction:
        return self.interval[1]

    def refined(self, width) -> tuple:
        """Isolating subinterval of width < ``width`` (exact Fractions)."""
        return intpoly.refine_isolating_interval(self.minpoly, self.lo, self.hi, Fraction(width))

    def to_interval(self, width=None) -> RationalInterval:
        if width is None:
            return RationalInterval(self.lo, self.hi)
        lo, hi = self.refined(width)
        return RationalInterval(lo, hi)

    def __float__(self) -> float:
        return self.approx

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.approx:.12g}, minpoly={list(self.minpoly)})"


@dataclass(frozen=True)
class IntegralIsometry:
    """An integer matrix preserving the form of ``lattice``; validated at
    construction, so downstream code may assume m^T G m = G and det = ±1."""

    matrix: tuple
    lattice: GramLattice

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.lattice.rank or any(len(r) != self.lattice.rank for r in m):
            raise DimensionMismatch(
                f"matrix must be {self.lattice.rank}x{self.lattice.rank}"
            )
        if not is_isometry([list(r) for r in m], self.lattice):
            raise NotAnIsometry("matrix does not preserve the form")
        det = linalg.det_bareiss([list(r) for r in m])
        if det not in (1, -1):
            raise NotAnIsometry(f"isometry of a nondegenerate form must have det ±1, got {det}")

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def compose(self, other: "IntegralIsometry") -> "IntegralIsometry":
        if self.lattice != other.lattice:
            raise DimensionMismatch("cannot compose isometries of different lattices")
        prod = linalg.mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return IntegralIsometry(tuple(tuple(r) for r in prod), self.lattice)


@dataclass(frozen=True)
class IsometryClass:
    """Tagged union: elliptic(order) | parabolic | hyperbolic(alpha, sign)."""

    kind: str
    order: int = None
    alpha: AlgebraicNumber = None
    expanding_sign: int = None

    @classmethod
    def elliptic(cls, order: int) -> "IsometryClass":
        return cls(kind="elliptic", order=order)

    @classmethod
    def parabolic(cls) -> "IsometryClass":
        return cls(kind="parabolic")

    @classmethod
    def hyperbolic(cls, alpha: AlgebraicNumber, sign: int) -> "IsometryClass":
        if not (alpha.lo > 1):
            raise ValueError("expanding eigenvalue must be certified > 1")
        return cls(kind="hyperbolic", alpha=alpha, expanding_sign=sign)

    @property
    def is_elliptic(self) -> bool:
        return self.kind == "elliptic"

    @property
    def is_parabolic(self) -> bool:
        return self.kind == "parabolic"

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind == "hyperbolic"


def char_poly(iso: IntegralIsometry) -> tuple:
    """Characteristic polynomial, ascending coefficients, certified monic
    with constant term ±1."""
    p = tuple(linalg.char_poly([list(r) for r in iso.matrix]))
    assert p[-1] == 1 and p[0] in (1, -1)
    return p


@dataclass(frozen=True)
class UnitCircleCensus:
    """Exact census of the roots of a monic integer polynomial relative to
    the unit circle, computed factor by factor."""

    outside_real: int
    outside_complex: int
    on_circle: int
    inside_real: int
    inside_complex: int
    cyclotomic_part: tuple  # ((order, multiplicity), ...)

    @property
    def outside(self) -> int:
        return self.outside_real + self.outside_complex


def unit_circle_census(f) -> UnitCircleCensus:
    """Count roots of f inside / on / outside the unit circle, exactly.

    Requires f monic with integer coefficients and constant term ±1 (all
    roots are then algebraic units). Roots of a self-reciprocal irreducible
    factor g of degree 2m are located through the substitution y = x + 1/x:
    real y in (-2, 2) gives a conjugate pair on the circle, real y with
    |y| > 2 a real pair {x, 1/x} straddling it, and each nonreal y a nonreal
    pair straddling it. A factor that is not self-reciprocal has no roots on
    the circle and is paired with its (distinct) reciprocal mirror factor.

    Raises UnexpectedSpectrum if the root multiset is not closed under
    inversion, which cannot happen for characteristic polynomials of
    isometries.
    """
    f = intpoly.normalize(f)
    if not intpoly.is_monic(f) or f[0] not in (1, -1):
        raise ValueError("census needs a monic polynomial with constant term ±1")
    out_r = out_c = on = in_r = in_c = 0
    cyclo = []
    pending_pairs = {}
    for g, mult in intpoly.factor_monic(f):
        m_cyc = intpoly.cyclotomic_index(g)
        if m_cyc is not None:
            cyclo.append((m_cyc, mult))
            on += mult * intpoly.degree(g)
            continue
        if intpoly.is_self_reciprocal(g):
            d = intpoly.degree(g)
            if d % 2 == 1:
                raise UnexpectedSpectrum(
                    "odd-degree self-reciprocal irreducible factor should be cyclotomic"
                )
            trans = intpoly.trace_transform(g)
            half = d // 2
            if intpoly.evaluate(trans, 2) == 0 or intpoly.evaluate(trans, -2) == 0:
                raise UnexpectedSpectrum("root at ±1 escaped cyclotomic stripping")
            r_in = intpoly.count_real_roots_between(trans, Fraction(-2), Fraction(2))
            r_tot = intpoly.count_real_roots(trans)
            on += mult * 2 * r_in
            out_r += mult * (r_tot - r_in)
            in_r += mult * (r_tot - r_in)
            out_c += mult * (half - r_tot)
            in_c += mult * (half - r_tot)
            if r_in == half:
                raise UnexpectedSpectrum(
                    "non-cyclotomic irreducible factor with all roots on the unit circle"
                )
            continue
        mirror = intpoly.reverse(g)
        if mirror[-1] < 0:
            mirror = intpoly.neg(mirror)
        if g in pending_pairs:
            raise UnexpectedSpectrum("duplicate reciprocal factor bookkeeping")
        if mirror in pending_pairs:
            if pending_pairs.pop(mirror) != mult:
                raise UnexpectedSpectrum(
                    "root multiset is not closed under inversion (multiplicity mismatch)"
                )
            d = intpoly.degree(g)
            r_real = intpoly.count_real_roots(g)
            out_r += mult * r_real
            in_r += mult * r_real
            out_c += mult * (d - r_real)
            in_c += mult * (d - r_real)
        else:
            pending_pairs[g] = mult
    if pending_pairs:
        raise UnexpectedSpectrum(
            "root multiset is not closed under inversion (unpaired factor)"
        )
    assert out_r + out_c + on + in_r + in_c == intpoly.degree(f)
    return UnitCircleCensus(
        outside_real=out_r,
        outside_complex=out_c,
        on_circle=on,
        inside_real=in_r,
        inside_complex=in_c,
        cyclotomic_part=tuple(sorted(cyclo)),
    )


def _minpoly_of_root(f, lo, hi):
    """The irreducible factor of f whose root lies in the isolating
    interval (lo, hi) of a single root of f."""
    for g, _mult in intpoly.factor_monic(f):
        if intpoly.evaluate(g, lo) != 0 and intpoly.evaluate(g, hi) != 0:
            if intpoly.count_real_roots_between(g, lo, hi) == 1:
                return g
    raise AssertionError("isolating interval matched no irreducible factor")


def _extract_expanding_root(f):
    """Locate the modulus-maximal real root of f outside [-1, 1].

    Returns (alpha, sign) where alpha is an AlgebraicNumber > 1 equal to the
    modulus and sign is the sign of the actual root. Ties between a positive
    and a negative root of equal modulus resolve to the positive one.
    """
    sf = intpoly.squarefree_part(f)
    bound = intpoly.cauchy_bound(sf)
    stripped = sf
    for r in (1, -1):
        stripped, _ = intpoly.strip_root(stripped, r)
    n_pos = (
        intpoly.count_real_roots_between(stripped, Fraction(1), Fraction(bound))
        if stripped
        else 0
    )
    n_neg = (
        intpoly.count_real_roots_between(stripped, Fraction(-bound), Fraction(-1))
        if stripped
        else 0
    )
    if n_pos == 0 and n_neg == 0:
        raise ValueError("no real root outside the unit circle")
    pos_iv = intpoly.isolate_extreme_root(f, "max") if n_pos else None
    neg_iv = intpoly.isolate_extreme_root(f, "min") if n_neg else None
    if pos_iv and not neg_iv:
        choice, sign = pos_iv, 1
    elif neg_iv and not pos_iv:
        choice, sign = neg_iv, -1
    else:
        choice, sign = _compare_moduli(f, pos_iv, neg_iv)
    lo, hi = choice
    if sign < 0:
        lo, hi = -hi, -lo
    g = _minpoly_of_root(f, *choice)
    if sign < 0:
        g = intpoly.negate_variable(g)
    while lo <= 1:  # certify alpha > 1 by shrinking around the root
        lo, hi = intpoly.refine_isolating_interval(g, lo, hi, (hi - lo) / 4)
    return AlgebraicNumber.from_isolating_interval(g, lo, hi), sign


def _compare_moduli(f, pos_iv, neg_iv):
    """Decide whether the max positive root beats |min negative root|.

    Exact tie detection first: the moduli coincide iff the positive root is
    also a root of f(-x), i.e. of gcd(f(x), f(-x)). Otherwise refine both
    isolating intervals until they separate.
    """
    sf = intpoly.squarefree_part(f)
    h = intpoly.poly_gcd(sf, intpoly.negate_variable(sf))
    plo, phi = pos_iv
    nlo, nhi = neg_iv
    if (
        intpoly.degree(h) > 0
        and intpoly.evaluate(h, plo) != 0
        and intpoly.evaluate(h, phi) != 0
        and intpoly.count_real_roots_between(h, plo, phi) == 1
        and intpoly.evaluate(h, -nhi) != 0
        and intpoly.evaluate(h, -nlo) != 0
        and intpoly.count_real_roots_between(h, -nhi, -nlo) == 1
    ):
        return pos_iv, 1  # equal moduli; prefer the positive root
    width = Fraction(1, 4)
    while True:
        plo, phi = intpoly.refine_isolating_interval(sf, plo, phi, width)
        nlo, nhi = intpoly.refine_isolating_interval(sf, nlo, nhi, width)
        if plo > -nlo:  # pos root exceeds |neg root|
            return (plo, phi), 1
        if -nhi > phi:
            return (nlo, nhi), -1
        width /= 16


def matrix_order(m):
    """Minimal k with m^k = identity, or None when no such k exists.

    Finite order holds iff the characteristic polynomial is a product of
    cyclotomics and the matrix is semisimple; both are certified, the second
    by an exact power check at the candidate order.
    """
    mat = [[int(x) for x in row] for row in m]
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise DimensionMismatch("matrix must be square")
    det = linalg.det_bareiss(mat)
    if det not in (1, -1):
        raise ValueError(f"matrix_order needs det ±1, got {det}")
    f = tuple(linalg.char_poly(mat))
    residual, cyclo = intpoly.strip_cyclotomic_factors(f)
    if intpoly.degree(residual) > 0:
        return None
    k = 1
    for order, _mult in cyclo:
        k = math.lcm(k, order)
    if linalg.mat_eq(linalg.mat_pow(mat, k), linalg.identity(n)):
        return k
    return None


def classify(iso: IntegralIsometry) -> IsometryClass:
    """Classify an isometry as elliptic, parabolic, or hyperbolic.

    On a lattice of signature (1, n) at most one root may lie outside the
    unit circle and it must be real; any other census is reported as
    UnexpectedSpectrum (invalid input or an internal defect). A spectrum
    whose expanding part is nonreal does not fit the trichotomy on any
    lattice and is likewise rejected.
    """
    f = char_poly(iso)
    census = unit_circle_census(f)
    sig = signature(iso.lattice)
    if sig.plus == 1 and census.outside > 1:
        raise UnexpectedSpectrum(
            f"{census.outside} roots outside the unit circle on a (1,{sig.minus}) lattice"
        )
    if census.outside_real >= 1:
        alpha, sign = _extract_expanding_root(f)
        return IsometryClass.hyperbolic(alpha, sign)
    if census.outside == 0:
        order = matrix_order([list(r) for r in iso.matrix])
        if order is None:
            return IsometryClass.parabolic()
        return IsometryClass.elliptic(order)
    raise UnexpectedSpectrum(
        "expanding eigenvalues exist but none is real; "
        "input does not fit the elliptic/parabolic/hyperbolic trichotomy"
    )


def expanding_count(iso: IntegralIsometry) -> tuple:
    """Number of eigenvalues of modulus > 1 (with multiplicity) and whether
    every such eigenvalue is real.

    Covers isometries of forms of signature (1, n) or (3, n). For conforming
    inputs the count is at most 1 and the expanding root is real; anything
    else raises PropositionViolated instead of returning. On (3, n) forms
    compatibility with a Hodge structure cannot be checked from the matrix
    alone, so a violation there signals a non-conforming input rather than
    a disproof.
    """
    sig = signature(iso.lattice)
    if sig.plus not in (1, 3):
        raise PropositionViolated(
            f"signature {sig} is outside the covered cases (1,n) and (3,n)"
        )
    census = unit_circle_census(char_poly(iso))
    count = census.outside
    all_real = census.outside_complex == 0
    if count > 1 or not all_real:
        raise PropositionViolated(
            f"census {census} on signature {sig}: expected at most one expanding "
            "eigenvalue, real"
        )
    return count, all_real


def modulus_profile(iso: IntegralIsometry) -> list:
    """Eigenvalue-modulus multiset of a hyperbolic isometry.

    Returns [(e, mult), ...] meaning modulus alpha**e with that multiplicity,
    sorted by descending e: [(1, 1), (0, rank-2), (-1, 1)], the zero entry
    omitted at rank 2. Certified by splitting the characteristic polynomial
    into the minimal polynomial of alpha and cyclotomic factors.
    """
    cls = classify(iso)
    if not cls.is_hyperbolic:
        raise NotHyperbolic(f"isometry is {cls.kind}, not hyperbolic")
    f = char_poly(iso)
    residual, _cyclo = intpoly.strip_cyclotomic_factors(f)
    alpha_factor = cls.alpha.minpoly
    if cls.expanding_sign < 0:
        alpha_factor = intpoly.negate_variable(alpha_factor)
    if residual != alpha_factor:
        raise UnexpectedSpectrum(
            "characteristic polynomial is not (minpoly of alpha) x cyclotomics"
        )
    census = unit_circle_census(f)
    if census.outside != 1 or census.outside_complex:
        raise UnexpectedSpectrum(f"hyperbolic isometry with census {census}")
    rank = iso.rank
    profile = [(1, 1)]
    if rank > 2:
        profile.append((0, rank - 2))
    profile.append((-1, 1))
    return profile

"""Trace growth and periodic-point estimates on full cohomology.

The N-th trace majorant sums h^{p,q} * alpha**(N (p-q) / 2) over the whole
diamond; its dominant term is alpha**(n N) with coefficient h^{2n,0} = 1,
so (1/N) log T(N) converges to n log alpha from above. All alpha powers are
evaluated with certified rational interval arithmetic seeded from the
isolating interval of alpha; half-integer powers go through an
outward-rounded square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import AlphaNotExpanding
from .hodge import HodgeDiamond
from .intervals import RationalInterval
from .isometry import AlgebraicNumber

_BASE_WIDTH = Fraction(1, 10**24)
_SQRT_BITS = 128


def _alpha_sqrt_interval(alpha: AlgebraicNumber, extra_digits: int = 0) -> RationalInterval:
    if not alpha.lo > 1:
        raise AlphaNotExpanding(f"alpha must be certified > 1, got [{alpha.lo}, {alpha.hi}]")
    width = _BASE_WIDTH / 10**extra_digits
    return alpha.to_interval(width).sqrt(_SQRT_BITS + 4 * extra_digits)


class TraceMajorant(NamedTuple):
    """Certified enclosure of T(N) plus the dominant-term bookkeeping."""

    value: RationalInterval
    dominant_exponent: int  # modulus alpha**(dominant_exponent / 2)
    dominant_multiplicity: int

    @property
    def approx(self) -> float:
        return float(self.value)


def trace_majorant(hd: HodgeDiamond, alpha: AlgebraicNumber, big_n: int) -> TraceMajorant:
    """T(N) = sum of h^{p,q} alpha**(N (p-q) / 2) over the diamond.

    The interval width scales with N so that the enclosure stays tight
    relative to the dominant term alpha**(n N).
    """
    if big_n < 1:
        raise ValueError("N must be a positive integer")
    # enough precision that rounding error stays far below the total
    extra = 2 * hd.n * big_n // 3 + 4
    beta = _alpha_sqrt_interval(alpha, extra_digits=extra)  # alpha**(1/2)
    total = RationalInterval.point(0)
    size = 2 * hd.n + 1
    for p in range(size):
        for q in range(size):
            mult = hd.h[p][q]
            if mult == 0:
                continue
            total = total + mult * beta.power(big_n * (p - q))
    return TraceMajorant(
        value=total,
        dominant_exponent=2 * hd.n,
        dominant_multiplicity=hd.h[2 * hd.n][0],
    )


class GrowthExponent(NamedTuple):
    value: float  # n * log(alpha)
    witness: tuple  # the dominant Hodge slot (2n, 0)
    multiplicity: int


def growth_exponent(hd: HodgeDiamond, alpha: AlgebraicNumber) -> GrowthExponent:
    """Asymptotic exponent lim (1/N) log T(N) = n log alpha.

    The dominant slot (2n, 0) must carry multiplicity 1; anything else means
    the diamond is not of the expected shape.
    """
    if not alpha.lo > 1:
        raise AlphaNotExpanding(f"alpha must be certified > 1, got [{alpha.lo}, {alpha.hi}]")
    witness = (2 * hd.n, 0)
    mult = hd.h[witness[0]][witness[1]]
    assert mult == 1, "dominant Hodge number h^{2n,0} must be 1"
    return GrowthExponent(
        value=hd.n * math.log(alpha.approx), witness=witness, multiplicity=mult
    )


class PeriodicPointEstimate(NamedTuple):
    """Asymptotic count alpha**(n k) of k-periodic points (assuming they are
    isolated) with the exact trace majorant T(k) as companion upper bound."""

    asymptotic: RationalInterval
    majorant: RationalInterval

    @property
    def approx(self) -> float:
        return float(self.asymptotic)

    @property
    def majorant_approx(self) -> float:
        return float(self.majorant)


def periodic_point_estimate(hd: HodgeDiamond, alpha: AlgebraicNumber, k: int) -> PeriodicPointEstimate:
    if k < 1:
        raise ValueError("period must be a positive integer")
    if not alpha.lo > 1:
        raise AlphaNotExpanding(f"alpha must be certified > 1, got [{alpha.lo}, {alpha.hi}]")
    extra = 2 * hd.n * k // 3 + 4
    est = alpha.to_interval(_BASE_WIDTH / 10**extra).power(hd.n * k)
    return PeriodicPointEstimate(asymptotic=est, majorant=trace_majorant(hd, alpha, k).value)

"""Hodge diamonds and the per-degree eigenvalue-modulus spectrum.

For a hyperbolic automorphism with expanding eigenvalue alpha on degree-2
cohomology, the eigenvalue moduli on degree-m cohomology are exactly
alpha**(k/2) where k runs over p - q for p + q = m, with multiplicity
h^{p,q}. Everything in this module is pure bookkeeping on the diamond;
no eigenvalue phases are computed because only moduli are determined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOutOfRange


class _EmptyDegree:
    """Sentinel for the maximal exponent of a degree with no cohomology."""

    def __repr__(self) -> str:
        return "EmptyDegree"

    def __bool__(self) -> bool:
        return False


EMPTY_DEGREE = _EmptyDegree()


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers h^{p,q}, 0 <= p, q <= 2n, of a compact manifold of
    complex dimension 2n carrying an everywhere nondegenerate holomorphic
    2-form and trivial fundamental group.

    ``h`` is a (2n+1) x (2n+1) table, rows indexed by p. Construction does
    not validate; run :func:`validate_diamond` (loaders do) so that invalid
    tables are reported violation by violation instead of raising.
    """

    n: int
    h: tuple
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.h)
        object.__setattr__(self, "h", table)
        size = 2 * self.n + 1
        if self.n < 1 or len(table) != size or any(len(r) != size for r in table):
            raise DegreeOutOfRange(
                f"table must be {size}x{size} for complex dimension {2 * self.n}"
            )

    @property
    def dim_complex(self) -> int:
        return 2 * self.n

    @property
    def top_degree(self) -> int:
        return 4 * self.n

    def hodge_number(self, p: int, q: int) -> int:
        return self.h[p][q]

    def betti(self, m: int) -> int:
        _check_degree(self, m)
        return sum(
            self.h[p][m - p] for p in range(max(0, m - 2 * self.n), min(m, 2 * self.n) + 1)
        )

    def betti_sum(self) -> int:
        return sum(sum(row) for row in self.h)


def _check_degree(hd: HodgeDiamond, m: int):
    if not 0 <= m <= hd.top_degree:
        raise DegreeOutOfRange(f"degree {m} outside [0, {hd.top_degree}]")


def validate_diamond(hd: HodgeDiamond) -> list:
    """All diamond invariants, checked exhaustively; returns the list of
    violations (empty means valid)."""
    v = []
    size = 2 * hd.n + 1
    if hd.h[0][0] != 1:
        v.append(f"h^{{0,0}} must be 1, got {hd.h[0][0]}")
    if hd.h[1][0] != 0:
        v.append(f"h^{{1,0}} must be 0 (simply connected), got {hd.h[1][0]}")
    if hd.h[2][0] != 1:
        v.append(f"h^{{2,0}} must be 1 (holomorphic 2-form line), got {hd.h[2][0]}")
    for p in range(size):
        for q in range(size):
            if hd.h[p][q] < 0:
                v.append(f"h^{{{p},{q}}} must be nonnegative, got {hd.h[p][q]}")
            if hd.h[p][q] != hd.h[q][p]:
                v.append(
                    f"conjugation symmetry h^{{{p},{q}}} = h^{{{q},{p}}} fails: "
                    f"{hd.h[p][q]} != {hd.h[q][p]}"
                )
            pd, qd = 2 * hd.n - p, 2 * hd.n - q
            if hd.h[p][q] != hd.h[pd][qd]:
                v.append(
                    f"duality h^{{{p},{q}}} = h^{{{pd},{qd}}} fails: "
                    f"{hd.h[p][q]} != {hd.h[pd][qd]}"
                )
    return v


def degree_spectrum(hd: HodgeDiamond, m: int) -> list:
    """Eigenvalue-modulus profile on degree-m cohomology.

    Returns [(k, mult), ...] sorted by descending k, where k = p - q over
    p + q = m with h^{p,q} > 0, merged over equal k; the modulus is
    alpha**(k/2) and the total multiplicity is the Betti number b_m.
    """
    _check_degree(hd, m)
    merged = {}
    for p in range(max(0, m - 2 * hd.n), min(m, 2 * hd.n) + 1):
        q = m - p
        mult = hd.h[p][q]
        if mult > 0:
            k = p - q
            merged[k] = merged.get(k, 0) + mult
    return sorted(merged.items(), key=lambda kv: -kv[0])


def max_exponent(hd: HodgeDiamond, m: int):
    """Largest k with alpha**(k/2) an eigenvalue modulus on degree m, i.e.
    max |p - q| over nonzero h^{p,q} with p + q = m; EMPTY_DEGREE when b_m = 0."""
    spectrum = degree_spectrum(hd, m)
    if not spectrum:
        return EMPTY_DEGREE
    return spectrum[0][0]


def spectral_profile(hd: HodgeDiamond) -> dict:
    """degree -> [(k, mult), ...] for every degree 0..4n."""
    return {m: degree_spectrum(hd, m) for m in range(hd.top_degree + 1)}


def k3_diamond() -> HodgeDiamond:
    return HodgeDiamond(n=1, h=((1, 0, 1), (0, 20, 0), (1, 0, 1)), name="k3")


def hilb2_k3_diamond() -> HodgeDiamond:
    return HodgeDiamond(
        n=2,
        h=(
            (1, 0, 1, 0, 1),
            (0, 21, 0, 21, 0),
            (1, 0, 232, 0, 1),
            (0, 21, 0, 21, 0),
            (1, 0, 1, 0, 1),
        ),
        name="hilb2_k3",
    )

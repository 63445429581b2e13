"""Integral lattices with nondegenerate symmetric bilinear forms.

A :class:`GramLattice` stores the Gram matrix of the form exactly; all
operations (signature, isometry tests, reflections, the Fujiki evaluator)
are bit-exact and raise on malformed input rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import (
    DegenerateForm,
    DimensionMismatch,
    IsotropicVector,
    NonIntegral,
    NotSymmetric,
)


@dataclass(frozen=True)
class Signature:
    """Inertia counts (positive, negative) of a nondegenerate form."""

    plus: int
    minus: int

    @property
    def rank(self) -> int:
        return self.plus + self.minus

    def __str__(self) -> str:
        return f"({self.plus},{self.minus})"


@dataclass(frozen=True)
class GramLattice:
    """Free Z-module of finite rank with a nondegenerate symmetric form."""

    gram: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise DimensionMismatch("Gram matrix must be square")
        if not linalg.is_symmetric(gram):
            raise NotSymmetric("Gram matrix must be symmetric")
        if linalg.det_bareiss([list(r) for r in gram]) == 0:
            raise DegenerateForm("Gram matrix must have nonzero determinant")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def determinant(self) -> int:
        return linalg.det_bareiss([list(r) for r in self.gram])

    def inner(self, u, v) -> int:
        """The bilinear form <u, v> = u^T . gram . v."""
        if len(u) != self.rank or len(v) != self.rank:
            raise DimensionMismatch("vector length must equal the lattice rank")
        gv = linalg.mat_vec([list(r) for r in self.gram], list(v))
        return sum(a * b for a, b in zip(u, gv))

    def norm(self, v) -> int:
        return self.inner(v, v)

    def direct_sum(self, other: "GramLattice") -> "GramLattice":
        n, m = self.rank, other.rank
        gram = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                gram[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                gram[n + i][n + j] = other.gram[i][j]
        name = f"{self.name}+{other.name}" if self.name and other.name else ""
        return GramLattice(gram, name=name)


def signature(lattice: GramLattice) -> Signature:
    """Exact inertia of the form, invariant under unimodular change of basis."""
    plus, minus = linalg.inertia([list(r) for r in lattice.gram])
    return Signature(plus, minus)


def is_isometry(matrix, lattice: GramLattice) -> bool:
    """True iff matrix^T . gram . matrix equals gram exactly."""
    m = [[int(x) for x in row] for row in matrix]
    n = lattice.rank
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatch(f"matrix must be {n}x{n}")
    g = [list(r) for r in lattice.gram]
    return linalg.mat_eq(linalg.mat_mul(linalg.mat_mul(linalg.transpose(m), g), m), g)


def reflection(v, lattice: GramLattice):
    """Reflection s_v(x) = x - (2<x,v>/<v,v>) v as an integer matrix.

    Defined when <v,v> != 0 and <v,v> divides 2<e_j,v> for every basis
    vector e_j; then s_v is an involutive isometry of the lattice.
    """
    v = [int(x) for x in v]
    if len(v) != lattice.rank:
        raise DimensionMismatch("vector length must equal the lattice rank")
    gv = linalg.mat_vec([list(r) for r in lattice.gram], v)
    vv = sum(a * b for a, b in zip(v, gv))
    if vv == 0:
        raise IsotropicVector(f"vector {v} is isotropic")
    for j, gvj in enumerate(gv):
        if (2 * gvj) % vv != 0:
            raise NonIntegral(
                f"<v,v> = {vv} does not divide 2<e_{j},v> = {2 * gvj}"
            )
    n = lattice.rank
    s = [[0] * n for _ in range(n)]
    for j in range(n):
        c = (2 * gv[j]) // vv
        for i in range(n):
            s[i][j] = (1 if i == j else 0) - c * v[i]
    return s


def fujiki_volume(c, n: int, lattice: GramLattice, a) -> Fraction:
    """Evaluate c * q(a)^n where q(a) = a^T . gram . a."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("the leading constant must be positive")
    if n < 1:
        raise ValueError("the exponent must be a positive integer")
    q = lattice.norm(a)
    return c * Fraction(q) ** n


# -- standard small lattices -------------------------------------------------


def hyperbolic_plane() -> GramLattice:
    """U: the even unimodular lattice [[0,1],[1,0]] of signature (1,1)."""
    return GramLattice([[0, 1], [1, 0]], name="U")


def diag_lattice(*entries) -> GramLattice:
    return GramLattice(
        [[entries[i] if i == j else 0 for j in range(len(entries))] for i in range(len(entries))]
    )


def e8_gram(scale: int = 1):
    """Gram matrix of the E8 root lattice (scaled); det = 1, definite."""
    adjacency = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2 * scale
    for i, j in adjacency:
        g[i][j] = g[j][i] = -scale
    return g


def k3_lattice() -> GramLattice:
    """The K3 lattice U^3 + E8(-1)^2: rank 22, even, signature (3,19)."""
    u = hyperbolic_plane()
    lat = u.direct_sum(u).direct_sum(u)
    e8m = GramLattice(e8_gram(-1), name="E8(-1)")
    return GramLattice(lat.direct_sum(e8m).direct_sum(e8m).gram, name="K3")

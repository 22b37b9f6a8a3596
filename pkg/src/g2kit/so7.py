"""The splitting so(7) = g2 + R^7 and the four-way decomposition of End(R^7).

The contraction ``skew_to_vector`` sends a skew matrix a to the vector
sum_ijk eps_ijk a_jk e_i; its kernel is the 14-dimensional Lie algebra g2
and it maps the cross operator of v to 6v.  Applied to an arbitrary matrix
it only sees the skew part, which is also how products of cross operators
are handled inside commutators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .frames import CrossTable, G2Frame, cross
from .linalg import DIM, Mat7, Vec7, nullspace


@dataclass(frozen=True)
class SkewMat:
    mat: Mat7

    def __post_init__(self):
        if not self.mat.is_skew():
            raise ValueError("matrix is not skew-symmetric")

    def __add__(self, other: SkewMat) -> SkewMat:
        return SkewMat(self.mat + other.mat)

    def __sub__(self, other: SkewMat) -> SkewMat:
        return SkewMat(self.mat - other.mat)

    def is_zero(self) -> bool:
        return self.mat.is_zero()


def _as_matrix(a) -> Mat7:
    return a.mat if isinstance(a, SkewMat) else a


def cross_operator(v: Vec7, frame: G2Frame) -> SkewMat:
    """The skew operator u -> u x v; entries a_ij = sum_k eps_ijk v_k."""
    table = frame.table
    rows = [[Fraction(0)] * DIM for _ in range(DIM)]
    for i, j, k, s in table.nonzero_ordered():
        if v[k] != 0:
            rows[i][j] += s * v[k]
    return SkewMat(Mat7.from_rows(rows))


def skew_to_vector(a, frame: G2Frame) -> Vec7:
    """Contraction p(a)_i = sum_jk eps_ijk a_jk.

    Accepts a SkewMat or a plain Mat7; the eps contraction only sees the
    skew part of the argument.
    """
    m = _as_matrix(a)
    table = frame.table
    coords = [Fraction(0)] * DIM
    for i, j, k, s in table.nonzero_ordered():
        coords[i] += s * m.entries[j][k]
    return Vec7(tuple(coords))


def split_so7(a, frame: G2Frame) -> tuple[SkewMat, Vec7]:
    """Split a skew matrix as (g2 part, vector part v with a = g2 + A_v)."""
    m = _as_matrix(a)
    if not m.is_skew():
        raise ValueError("split_so7 needs a skew matrix")
    v = skew_to_vector(m, frame).scale(Fraction(1, 6))
    g2 = Mat7(m.entries) - cross_operator(v, frame).mat
    return SkewMat(g2), v


def bracket_g2perp(u: Vec7, v: Vec7, frame: G2Frame) -> SkewMat:
    """The g2-complement part of [A_u, A_v], which equals A_{u x v}."""
    return cross_operator(cross(u, v, frame), frame)


@dataclass(frozen=True)
class EndoSplit:
    """Decomposition of an endomorphism into scalar, traceless symmetric,
    g2, and vector (cross-operator) parts."""

    scalar: Fraction
    sym0: Mat7
    g2part: SkewMat
    vector: Vec7

    def reconstruct(self, frame: G2Frame) -> Mat7:
        return (
            Mat7.identity().scale(self.scalar)
            + self.sym0
            + self.g2part.mat
            + cross_operator(self.vector, frame).mat
        )

    def part_norms_sq(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Squared trace norms of the four parts.  |A_Z|^2 = 6 |Z|^2."""
        return (
            7 * self.scalar * self.scalar,
            self.sym0.norm_sq(),
            self.g2part.mat.norm_sq(),
            6 * self.vector.norm_sq(),
        )

    def nonzero_flags(self) -> frozenset[str]:
        flags = set()
        if self.scalar != 0:
            flags.add("X1")
        if not self.g2part.is_zero():
            flags.add("X2")
        if not self.sym0.is_zero():
            flags.add("X3")
        if not self.vector.is_zero():
            flags.add("X4")
        return frozenset(flags)


def decompose_endo(t: Mat7, frame: G2Frame) -> EndoSplit:
    scalar = t.trace() / 7
    sym0 = t.symmetric_part() - Mat7.identity().scale(scalar)
    g2part, vector = split_so7(t.skew_part(), frame)
    return EndoSplit(scalar=scalar, sym0=sym0, g2part=g2part, vector=vector)


# ---------------------------------------------------------------------------
# Bases and dimension counts
# ---------------------------------------------------------------------------


def skew_basis_indices() -> list[tuple[int, int]]:
    """Index pairs (i < j) of the basis E_ij - E_ji of so(7)."""
    return [(i, j) for i in range(DIM) for j in range(i + 1, DIM)]


def p_matrix(table: CrossTable) -> list[list[Fraction]]:
    """Matrix of the eps contraction on so(7) in the E_ij - E_ji basis (7 x 21)."""
    pairs = skew_basis_indices()
    cols = []
    for (i, j) in pairs:
        coords = [Fraction(0)] * DIM
        for a in range(DIM):
            # contribution of a_ij = 1, a_ji = -1
            coords[a] += table.eps(a, i, j) - table.eps(a, j, i)
        cols.append(coords)
    return [[cols[c][r] for c in range(len(pairs))] for r in range(DIM)]


@lru_cache(maxsize=None)
def _g2_basis_cached(table: CrossTable) -> tuple[Mat7, ...]:
    pairs = skew_basis_indices()
    kernel = nullspace(p_matrix(table))
    mats = []
    for coeffs in kernel:
        rows = [[Fraction(0)] * DIM for _ in range(DIM)]
        for c, (i, j) in zip(coeffs, pairs):
            rows[i][j] += c
            rows[j][i] -= c
        mats.append(Mat7.from_rows(rows))
    return tuple(mats)


def g2_basis(frame: G2Frame) -> tuple[Mat7, ...]:
    """A basis (14 matrices) of the kernel of the eps contraction on so(7)."""
    return _g2_basis_cached(frame.table)


def is_derivation_of_cross(a: Mat7, frame: G2Frame) -> bool:
    """Whether a(u x v) = a(u) x v + u x a(v) on all basis pairs."""
    for i in range(DIM):
        ei = Vec7.basis(i)
        for j in range(DIM):
            ej = Vec7.basis(j)
            lhs = a @ cross(ei, ej, frame)
            rhs = cross(a @ ei, ej, frame) + cross(ei, a @ ej, frame)
            if lhs != rhs:
                return False
    return True


def endo_part_maps(t: Mat7, frame: G2Frame) -> tuple[Mat7, Mat7, Mat7, Mat7]:
    """The four projections of t as matrices (scalar, sym0, g2, vector)."""
    s = decompose_endo(t, frame)
    return (
        Mat7.identity().scale(s.scalar),
        s.sym0,
        s.g2part.mat,
        cross_operator(s.vector, frame).mat,
    )

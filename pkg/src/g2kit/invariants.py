"""Quadratic invariants of endomorphisms of R^7.

sigma1, sigma2, the squared trace norm and the characteristic polynomial are
orthogonal invariants; i0, i1, i2 are built from the cross product and are
invariants of the frame-preserving subgroup only, so every i-evaluator takes
the frame explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .frames import CheckReport, G2Frame
from .linalg import DIM, Mat7, int_matmul, integer_rows
from .so7 import decompose_endo


def _int_columns(t: Mat7) -> tuple[list[list[int]], int]:
    rows, d = integer_rows(t)
    return [[rows[i][j] for i in range(DIM)] for j in range(DIM)], d


def _int_cross(table, u: list[int], v: list[int]) -> list[int]:
    out = [0] * DIM
    for i, j, k, s in table.nonzero_ordered():
        ui = u[i]
        if ui:
            vj = v[j]
            if vj:
                out[k] += s * ui * vj
    return out


def char_poly(t: Mat7) -> tuple[Fraction, ...]:
    """Coefficients (c_0, ..., c_7) of det(T - t I) = sum_i c_i t^i.

    Computed by the Faddeev-LeVerrier trace recursion on the denominator-
    scaled integer matrix; the recursion's divisions by the step index are
    exact there, and the common denominator is restored per degree.
    """
    n_rows, d = integer_rows(t)
    m = n_rows
    c = [sum(m[i][i] for i in range(DIM))]
    for k in range(2, DIM + 1):
        shifted = [[m[i][j] - (c[-1] if i == j else 0) for j in range(DIM)] for i in range(DIM)]
        m = int_matmul(n_rows, shifted)
        tr = sum(m[i][i] for i in range(DIM))
        assert tr % k == 0
        c.append(tr // k)
    # det(tI - N) = t^7 - c_1 t^6 - ... - c_7 for the integer matrix N = d T,
    # so det(T - tI) = -t^7 + sum_k (c_k / d^k) t^{7-k}
    coeffs = [Fraction(0)] * (DIM + 1)
    coeffs[DIM] = Fraction(-1)
    for k in range(1, DIM + 1):
        coeffs[DIM - k] = Fraction(c[k - 1], d**k)
    return tuple(coeffs)


def sigma_from_char_poly(coeffs: tuple[Fraction, ...], k: int) -> Fraction:
    """Elementary symmetric function sigma_k from det(T - tI) coefficients,
    following det(T - tI) = sum_i (-1)^i sigma_{7-i} t^i."""
    return (-1) ** (k + 1) * coeffs[DIM - k]


def sigma2(t: Mat7) -> Fraction:
    """Second elementary symmetric function, ((tr T)^2 - tr(T^2)) / 2."""
    rows, d = integer_rows(t)
    tr = sum(rows[i][i] for i in range(DIM))
    tr2 = sum(rows[i][j] * rows[j][i] for i in range(DIM) for j in range(DIM))
    return Fraction(tr * tr - tr2, 2 * d * d)


def _int_cross_basis(table, v: list[int], j: int) -> list[int]:
    """v x e_j for an integer coordinate vector v."""
    out = [0] * DIM
    for a in range(DIM):
        va = v[a]
        if va:
            for k, s in table.pair_slots(a, j):
                out[k] += s * va
    return out


def i0(t: Mat7, frame: G2Frame) -> Fraction:
    """sum_ij <T(e_i) x T(e_j), e_i x e_j>."""
    table = frame.table
    cols, d = _int_columns(t)
    total = 0
    for i in range(DIM):
        for j in range(i + 1, DIM):
            cij = _int_cross(table, cols[i], cols[j])
            total += 2 * sum(s * cij[k] for k, s in table.pair_slots(i, j))
    return Fraction(total, d * d)


def i1(t: Mat7, frame: G2Frame) -> Fraction:
    """sum_ij <T(e_i) x e_i, T(e_j) x e_j> = |sum_i T(e_i) x e_i|^2."""
    table = frame.table
    cols, d = _int_columns(t)
    acc = [0] * DIM
    for i in range(DIM):
        ci = _int_cross_basis(table, cols[i], i)
        for k in range(DIM):
            acc[k] += ci[k]
    return Fraction(sum(x * x for x in acc), d * d)


def i2(t: Mat7, frame: G2Frame) -> Fraction:
    """sum_ij <T(e_i) x e_j, T(e_j) x e_i>."""
    table = frame.table
    cols, d = _int_columns(t)
    crossed = [
        [_int_cross_basis(table, cols[i], j) for j in range(DIM)] for i in range(DIM)
    ]
    total = 0
    for i in range(DIM):
        total += sum(x * x for x in crossed[i][i])
        for j in range(i + 1, DIM):
            total += 2 * sum(a * b for a, b in zip(crossed[i][j], crossed[j][i]))
    return Fraction(total, d * d)


@dataclass(frozen=True)
class InvariantReport:
    sigma1: Fraction
    sigma2: Fraction
    norm_sq: Fraction
    i0: Fraction
    i1: Fraction
    i2: Fraction
    charpoly: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        from .serialize import rational_str

        return {
            "sigma1": rational_str(self.sigma1),
            "sigma2": rational_str(self.sigma2),
            "norm_sq": rational_str(self.norm_sq),
            "i0": rational_str(self.i0),
            "i1": rational_str(self.i1),
            "i2": rational_str(self.i2),
            "charpoly": [rational_str(c) for c in self.charpoly],
        }


def invariant_report(t: Mat7, frame: G2Frame) -> InvariantReport:
    return InvariantReport(
        sigma1=t.trace(),
        sigma2=sigma2(t),
        norm_sq=t.norm_sq(),
        i0=i0(t, frame),
        i1=i1(t, frame),
        i2=i2(t, frame),
        charpoly=char_poly(t),
    )


@dataclass(frozen=True)
class QuadraticRelationsReport:
    passed: bool
    invariants: InvariantReport
    residual_i1: Fraction
    residual_i2: Fraction
    residual_difference: Fraction

    def to_dict(self) -> dict:
        from .serialize import rational_str

        return {
            "passed": self.passed,
            "invariants": self.invariants.to_dict(),
            "residual_i1": rational_str(self.residual_i1),
            "residual_i2": rational_str(self.residual_i2),
            "residual_difference": rational_str(self.residual_difference),
        }


def verify_quadratic_relations(t: Mat7, frame: G2Frame) -> QuadraticRelationsReport:
    """Check i1 = -i0 + |T|^2 + 4 sigma2 - sigma1^2,
    i2 = i0 + |T|^2 - 2 sigma2 - sigma1^2 and their difference identity."""
    inv = invariant_report(t, frame)
    s1sq = inv.sigma1 * inv.sigma1
    r1 = inv.i1 - (-inv.i0 + inv.norm_sq + 4 * inv.sigma2 - s1sq)
    r2 = inv.i2 - (inv.i0 + inv.norm_sq - 2 * inv.sigma2 - s1sq)
    rd = (inv.i1 - inv.i2) - (-2 * inv.i0 + 6 * inv.sigma2)
    return QuadraticRelationsReport(
        passed=(r1 == 0 and r2 == 0 and rd == 0),
        invariants=inv,
        residual_i1=r1,
        residual_i2=r2,
        residual_difference=rd,
    )


def special_case_check(t: Mat7, frame: G2Frame) -> CheckReport:
    """Detect scalar, symmetric, or cross-operator shape and assert the
    closed-form invariant values for that shape.

    Scalar lambda*Id: (i0, i1, i2) = (42, 0, -42) lambda^2, sigma2 = 21
    lambda^2, |T|^2 = 7 lambda^2.  Symmetric: i0 = 2 sigma2, i1 = 0,
    i2 = -2 sigma2.  Cross operator A_Z: (i0, i1, i2, sigma2, |T|^2) =
    (-18, 36, -18, 3, 6) |Z|^2 and i1 - i2 = 54 |Z|^2.
    "not special" is a valid non-error outcome.
    """
    split = decompose_endo(t, frame)
    failures: list[str] = []

    def expect(label: str, actual: Fraction, wanted: Fraction):
        if actual != wanted:
            failures.append(f"{label}: expected {wanted}, got {actual}")

    if split.sym0.is_zero() and split.g2part.is_zero() and split.vector.is_zero():
        case = "scalar"
        lam2 = split.scalar * split.scalar
        expect("i0", i0(t, frame), 42 * lam2)
        expect("i1", i1(t, frame), Fraction(0))
        expect("i2", i2(t, frame), -42 * lam2)
        expect("sigma2", sigma2(t), 21 * lam2)
        expect("norm_sq", t.norm_sq(), 7 * lam2)
    elif t.is_symmetric():
        case = "symmetric"
        s2 = sigma2(t)
        expect("i0", i0(t, frame), 2 * s2)
        expect("i1", i1(t, frame), Fraction(0))
        expect("i2", i2(t, frame), -2 * s2)
    elif split.scalar == 0 and split.sym0.is_zero() and split.g2part.is_zero():
        case = "vector"
        zsq = split.vector.norm_sq()
        expect("i0", i0(t, frame), -18 * zsq)
        expect("i1", i1(t, frame), 36 * zsq)
        expect("i2", i2(t, frame), -18 * zsq)
        expect("sigma2", sigma2(t), 3 * zsq)
        expect("norm_sq", t.norm_sq(), 6 * zsq)
        expect("i1 - i2", i1(t, frame) - i2(t, frame), 54 * zsq)
    else:
        case = "not special"

    return CheckReport(
        name="special-case",
        passed=not failures,
        counts=(),
        failures=tuple(failures),
        notes=(f"case: {case}",),
    )

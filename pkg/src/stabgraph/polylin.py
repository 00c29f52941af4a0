"""Bivariate polynomials that are linear in the second variable.

Everything the graph construction produces has z2-degree at most one, because
z2 enters the vertex pencil through a single diagonal slot. That structural
fact is encoded in BiLinPoly: a pair of univariate polynomials (c0, c1) in z1
representing c0(z1) + z2*c1(z1). Keeping the z2-linearity explicit turns all
determinant work into univariate computations and makes reduction of rational
functions decidable by a single cross-determinant test.

PolyMatrix determinants use fraction-free Bareiss elimination (exact division
by the previous pivot at every step), falling back to cofactor expansion for
n <= 4 where the recursion has the cheaper constant factor.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeOverflow, VariableMismatch, ZeroDenominator
from .exactalg import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    Scalarish,
    UniPoly,
    gcd,
    poly_text_terms,
)

_Z1 = "z1"


def _unipoly_z1(p) -> UniPoly:
    if isinstance(p, UniPoly):
        if p.var != _Z1:
            raise VariableMismatch(f"expected a z1 polynomial, got {p.var!r}")
        return p
    return UniPoly(_Z1, [p] if not isinstance(p, (list, tuple)) else p)


class BiLinPoly:
    """c0(z1) + z2 * c1(z1), exact coefficients."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0=None, c1=None):
        self.c0 = _unipoly_z1(c0) if c0 is not None else UniPoly.zero(_Z1)
        self.c1 = _unipoly_z1(c1) if c1 is not None else UniPoly.zero(_Z1)

    @staticmethod
    def zero() -> "BiLinPoly":
        return BiLinPoly()

    @staticmethod
    def one() -> "BiLinPoly":
        return BiLinPoly(UniPoly.one(_Z1))

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.c0.is_real() and self.c1.is_real()

    def bidegree(self) -> tuple[int | float, int]:
        """(degree in z1, degree in z2); z1-degree is NEG_INF for zero."""
        return max(self.c0.deg, self.c1.deg), (1 if self.c1 else 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiLinPoly):
            return self.c0 == other.c0 and self.c1 == other.c1
        return NotImplemented

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __add__(self, other):
        if not isinstance(other, BiLinPoly):
            return NotImplemented
        return BiLinPoly(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other):
        if not isinstance(other, BiLinPoly):
            return NotImplemented
        return BiLinPoly(self.c0 - other.c0, self.c1 - other.c1)

    def __neg__(self):
        return BiLinPoly(-self.c0, -self.c1)

    def __mul__(self, other):
        if not isinstance(other, BiLinPoly):
            return NotImplemented
        if self.c1 and other.c1:
            raise DegreeOverflow("product would have z2-degree 2")
        return BiLinPoly(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
        )

    def mul_uni(self, p: UniPoly) -> "BiLinPoly":
        p = _unipoly_z1(p)
        return BiLinPoly(self.c0 * p, self.c1 * p)

    def scale(self, c: Scalarish) -> "BiLinPoly":
        return BiLinPoly(self.c0.scale(c), self.c1.scale(c))

    def shift_down_z1(self, k: int) -> "BiLinPoly":
        return BiLinPoly(self.c0.shift_down(k), self.c1.shift_down(k))

    def eval_at(self, x1: Scalarish, x2: Scalarish) -> GaussianRational:
        x2 = GaussianRational.of(x2)
        return self.c0.eval_at(x1) + x2 * self.c1.eval_at(x1)

    def eval_complex(self, x1: complex, x2: complex) -> complex:
        return self.c0.eval_complex(x1) + x2 * self.c1.eval_complex(x1)

    def text(self) -> str:
        terms = [(k, c, ()) for k, c in enumerate(self.c0.coeffs)]
        terms += [(k, c, ("z2",)) for k, c in enumerate(self.c1.coeffs)]
        return poly_text_terms(terms, _Z1)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"BiLinPoly({self.text()!r})"


class PolyMatrix:
    """Square matrix of univariate z1 polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        self.rows = tuple(tuple(_unipoly_z1(e) for e in row) for row in rows)
        for row in self.rows:
            if len(row) != len(self.rows):
                raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def at(self, i: int, j: int) -> UniPoly:
        return self.rows[i][j]

    def minor(self, drop_row: int, drop_col: int) -> "PolyMatrix":
        return PolyMatrix(
            tuple(
                tuple(e for j, e in enumerate(row) if j != drop_col)
                for i, row in enumerate(self.rows)
                if i != drop_row
            )
        )

    def drop_first(self) -> "PolyMatrix":
        return self.minor(0, 0)

    def drop_last(self) -> "PolyMatrix":
        return self.minor(self.n - 1, self.n - 1)

    def det(self) -> UniPoly:
        if self.n <= 4:
            return _det_cofactor(self.rows)
        return _det_bareiss([list(row) for row in self.rows])


def _det_cofactor(rows) -> UniPoly:
    n = len(rows)
    if n == 0:
        return UniPoly.one(_Z1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = UniPoly.zero(_Z1)
    for j, e in enumerate(rows[0]):
        if not e:
            continue
        sub = tuple(tuple(r[k] for k in range(n) if k != j) for r in rows[1:])
        term = e * _det_cofactor(sub)
        acc = acc - term if j % 2 else acc + term
    return acc


def _det_bareiss(m) -> UniPoly:
    n = len(m)
    sign = 1
    prev = UniPoly.one(_Z1)
    zero = UniPoly.zero(_Z1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero  # column of zeros below and at the pivot
        piv = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * piv - head * m[k][j]
                row_i[j] = num.exact_div(prev)  # exact by the Sylvester identity
            row_i[k] = zero
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def det_split(m0: PolyMatrix, c: Scalarish) -> BiLinPoly:
    """Determinant of M0 + z2*c*E_nn as a z2-linear polynomial.

    The perturbation sits in the single (n, n) slot, so the determinant is
    det(M0) + z2*c*det(M0 with its last row and column removed). An empty
    matrix has determinant 1 and no slot to perturb.
    """
    if m0.n == 0:
        return BiLinPoly.one()
    base = m0.det()
    cofactor = m0.drop_last().det()
    return BiLinPoly(base, cofactor.scale(c))


class RationalFunction2:
    """Quotient of two z2-linear polynomials."""

    __slots__ = ("num", "den", "reduced")

    def __init__(self, num: BiLinPoly, den: BiLinPoly, reduced: bool = False):
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        self.num = num
        self.den = den
        self.reduced = reduced

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction2):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def eval_at(self, x1: Scalarish, x2: Scalarish) -> GaussianRational:
        return self.num.eval_at(x1, x2) / self.den.eval_at(x1, x2)

    def text(self) -> str:
        return f"({self.num.text()}) / ({self.den.text()})"

    def __repr__(self) -> str:
        return f"RationalFunction2({self.text()!r}, reduced={self.reduced})"


def cross_determinant(num: BiLinPoly, den: BiLinPoly) -> UniPoly:
    """num.c0*den.c1 - num.c1*den.c0; identically zero iff num and den share
    a z2-involving factor (or are both z2-free)."""
    return num.c0 * den.c1 - num.c1 * den.c0


def rf_reduce(f: RationalFunction2) -> RationalFunction2:
    """Canonical partial reduction of a z2-linear rational function.

    Strips the largest power of z1 dividing all four component polynomials,
    then cancels any common z2-involving factor (detected by a vanishing
    cross-determinant, in which case the value is a univariate ratio and is
    returned with coprime numerator and denominator, both z2-free).
    Common z1-only factors m(z1) with m(0) != 0 are deliberately kept: they
    change neither boundary zeros nor contact orders.
    """
    if f.reduced:
        return f
    num, den = f.num, f.den
    if num.is_zero():
        return RationalFunction2(BiLinPoly.zero(), BiLinPoly.one(), reduced=True)
    k = min(
        num.c0.valuation(),
        num.c1.valuation(),
        den.c0.valuation(),
        den.c1.valuation(),
    )
    if k:
        num = num.shift_down_z1(k)
        den = den.shift_down_z1(k)
    if (num.c1 or den.c1) and cross_determinant(num, den).is_zero():
        # num = lam*den over Q(i)(z1); both c1 parts are nonzero here since
        # num and den are nonzero, so the value is num.c1/den.c1
        g = gcd(num.c1, den.c1)
        u = num.c1.exact_div(g)
        v = den.c1.exact_div(g)
        return RationalFunction2(BiLinPoly(u), BiLinPoly(v), reduced=True)
    return RationalFunction2(num, den, reduced=True)

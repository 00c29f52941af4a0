"""Graph to stable-pair pipeline.

A colored graph determines a matrix pencil M = A - z1*diag(1,..,1,t)
- (1-t)*z2*E_nn. The function f is the (1,1) entry of M^{-1}, a rational
function whose numerator and denominator are polynomials of degree at most
one in z2. A Cayley-type substitution z_j -> i(1-z_j)/(1+z_j) followed by
denominator clearing turns f into a rational inner function on the bidisk,
written q/p with p stable (no zeros in the open bidisk).

Everything here is exact Gaussian-rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegeneratePencil,
    DegreeTooSmall,
    NotRealCoefficients,
    PreconditionViolated,
    ZeroDenominator,
)
from .exactalg import GR_I, GR_ONE, GR_ZERO, GaussianRational, UniPoly, gcd_many
from .graphcore import ColoredGraph
from .polylin import BiLinPoly, PolyMatrix, RationalFunction2, det_split, rf_reduce


def _z1_const(value) -> UniPoly:
    return UniPoly.const("z1", GaussianRational.of(value))


def _z1_linear(c0, c1) -> UniPoly:
    return UniPoly("z1", [GaussianRational.of(c0), GaussianRational.of(c1)])


@dataclass(frozen=True)
class Pencil:
    """M0 = A - z1*diag(1,...,1,t) plus the z2 weight c = -(1-t) on slot (n,n)."""

    n: int
    m0: PolyMatrix
    c: GaussianRational

    def value_at(self, z1: GaussianRational, z2: GaussianRational) -> list[list[GaussianRational]]:
        """Pointwise A - z1*Y - z2*(I-Y), for spot checks."""
        vals = [[self.m0.at(i, j).eval_at(z1) for j in range(self.n)] for i in range(self.n)]
        vals[self.n - 1][self.n - 1] = vals[self.n - 1][self.n - 1] + self.c * z2
        return vals


def build_pencil(g: ColoredGraph) -> Pencil:
    t = g.t
    adj = g.adjacency()
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                slope = -t if i == g.n - 1 else Fraction(-1)
                row.append(_z1_linear(0, slope))
            else:
                row.append(_z1_const(adj[i][j]))
        rows.append(row)
    return Pencil(g.n, PolyMatrix(rows), GaussianRational.of(t - 1))


def f_of_graph(g: ColoredGraph) -> RationalFunction2:
    """The (1,1) entry of the pencil inverse, as an unreduced ratio."""
    pen = build_pencil(g)
    den = det_split(pen.m0, pen.c)
    if den.is_zero():
        raise DegeneratePencil("pencil determinant vanishes identically")
    num = det_split(pen.m0.drop_first(), pen.c)
    return RationalFunction2(num, den)


# ---------------------------------------------------------------------------
# Cayley substitution and the stable pair

ONE_PLUS_Z1 = _z1_linear(1, 1)


@dataclass(frozen=True)
class StablePair:
    """Rational inner function q/p with p normalized so p(0,0) = 1."""

    q: BiLinPoly
    p: BiLinPoly

    def __post_init__(self):
        if self.p.eval_at(GR_ZERO, GR_ZERO) != GR_ONE:
            raise PreconditionViolated("denominator must be normalized to p(0,0) = 1")

    @property
    def bidegree(self) -> tuple[int, int]:
        d1q, d2q = self.q.bidegree()
        d1p, d2p = self.p.bidegree()
        d1 = max(d1q, d1p)
        return (0 if d1 < 0 else int(d1), max(d2q, d2p))

    def phi_at(self, z1, z2) -> GaussianRational:
        z1, z2 = GaussianRational.of(z1), GaussianRational.of(z2)
        pv = self.p.eval_at(z1, z2)
        if pv.is_zero():
            raise ZeroDenominator("denominator vanishes at the sample point")
        return self.q.eval_at(z1, z2) / pv

    def text(self) -> str:
        return f"q = {self.q.text()}\np = {self.p.text()}"


def _clear_substitute(part: UniPoly, table: list[UniPoly]) -> UniPoly:
    """a(z1) -> (1+z1)^d * a(i(1-z1)/(1+z1)) via the precomputed power table."""
    out = UniPoly.zero("z1")
    for k, coef in enumerate(part.coeffs):
        if not coef.is_zero():
            out = out + table[k].scale(coef)
    return out


def _cayley_substitute(poly: BiLinPoly, d1: int, d2: int, table: list[UniPoly]) -> BiLinPoly:
    if d2 == 1:
        a = poly.c0 + poly.c1.scale(GR_I)
        b = poly.c0 - poly.c1.scale(GR_I)
    else:
        a, b = poly.c0, UniPoly.zero("z1")
    return BiLinPoly(_clear_substitute(a, table), _clear_substitute(b, table))


def _divisible(part: UniPoly, u: UniPoly) -> bool:
    if part.is_zero():
        return True
    _, rem = part.divmod(u)
    return rem.is_zero()


def _div_parts(poly: BiLinPoly, u: UniPoly) -> BiLinPoly:
    return BiLinPoly(poly.c0.exact_div(u), poly.c1.exact_div(u))


def _reduce_pair(num: BiLinPoly, den: BiLinPoly) -> tuple[BiLinPoly, BiLinPoly]:
    # candidate factors from the substitution are known: z1 powers and (1+z_j)
    while all(
        _divisible(part, ONE_PLUS_Z1)
        for part in (num.c0, num.c1, den.c0, den.c1)
    ):
        num, den = _div_parts(num, ONE_PLUS_Z1), _div_parts(den, ONE_PLUS_Z1)
    if num.c0 == num.c1 and den.c0 == den.c1 and not num.is_zero() and not den.is_zero():
        num, den = BiLinPoly(num.c0), BiLinPoly(den.c0)  # common (1+z2)
    parts = [p for p in (num.c0, num.c1, den.c0, den.c1) if not p.is_zero()]
    g = gcd_many(parts, "z1")
    if g.deg > 0:
        num, den = _div_parts(num, g), _div_parts(den, g)
    reduced = rf_reduce(RationalFunction2(num, den))
    return reduced.num, reduced.den


def cayley_to_rif(f: RationalFunction2, g: ColoredGraph | None = None) -> StablePair:
    """Map f to the stable pair (q, p) of its Cayley conjugate.

    With f = N/D (real coefficients), the conjugated function is
    (D + iN)/(D - iN) with z_j -> i(1-z_j)/(1+z_j); both sides are cleared
    by the same (1+z1)^d1 (1+z2)^d2 so the ratio is untouched, then the
    fraction is fully reduced and p is normalized to p(0,0) = 1.
    """
    f = rf_reduce(f)
    n_part, d_part = f.num, f.den
    if not (n_part.is_real() and d_part.is_real()):
        where = "" if g is None else f" for graph on {g.n} vertices"
        raise NotRealCoefficients(f"pre-substitution parts must be real{where}")
    i_n = BiLinPoly(n_part.c0.scale(GR_I), n_part.c1.scale(GR_I))
    num = d_part + i_n
    den = d_part - i_n
    degs = [p.deg for p in (num.c0, num.c1, den.c0, den.c1) if not p.is_zero()]
    d1 = max((int(d) for d in degs), default=0)
    d2 = 1 if (not num.c1.is_zero() or not den.c1.is_zero()) else 0
    i_one_minus = UniPoly("z1", [GR_I, -GR_I])
    table = []
    for k in range(d1 + 1):
        term = UniPoly.one("z1")
        for _ in range(k):
            term = term * i_one_minus
        for _ in range(d1 - k):
            term = term * ONE_PLUS_Z1
        table.append(term)
    num = _cayley_substitute(num, d1, d2, table)
    den = _cayley_substitute(den, d1, d2, table)
    num, den = _reduce_pair(num, den)
    scale = den.eval_at(GR_ZERO, GR_ZERO)
    if scale.is_zero():
        raise PreconditionViolated("stable denominator vanishes at the origin")
    inv = scale.inv()
    return StablePair(q=num.scale(inv), p=den.scale(inv))


def rif_of_graph(g: ColoredGraph) -> StablePair:
    return cayley_to_rif(f_of_graph(g), g)


# ---------------------------------------------------------------------------
# reflection and scalar equivalence

def reflect(poly: BiLinPoly, bidegree: tuple[int, int]) -> BiLinPoly:
    """z1^m z2^n2 times the conjugate of poly at (1/z1, 1/z2), expanded."""
    m, n2 = bidegree
    d1, d2 = poly.bidegree()
    if m < d1 or n2 < d2:
        raise DegreeTooSmall(f"bidegree ({m},{n2}) below actual ({d1},{d2})")

    def rev(part: UniPoly) -> UniPoly:
        coeffs = [part.coeff(m - k).conj() for k in range(m + 1)]
        return UniPoly("z1", coeffs)

    if n2 == 1:
        return BiLinPoly(rev(poly.c1), rev(poly.c0))
    return BiLinPoly(rev(poly.c0))


def scalar_equiv(a: BiLinPoly, b: BiLinPoly) -> bool:
    """True iff a = lam * b for some nonzero Gaussian-rational lam."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    part_b = b.c0 if not b.c0.is_zero() else b.c1
    part_a = a.c0 if not b.c0.is_zero() else a.c1
    k = int(part_b.valuation())
    ref = part_a.coeff(k) if not part_a.is_zero() else GR_ZERO
    if ref.is_zero():
        return False
    lam = ref / part_b.coeff(k)
    return a == b.scale(lam)

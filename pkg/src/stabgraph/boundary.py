"""Boundary-zero location on the unit torus.

A stable pair's denominator p = a(z1) + z2*b(z1) vanishes at (tau1, tau2)
with |tau1| = |tau2| = 1 exactly when |a(tau1)| = |b(tau1)| and
tau2 = -a(tau1)/b(tau1). The scan therefore works on the single-variable
polynomial F = a*rev(a) - b*rev(b) (rev = conjugate coefficient reversal),
whose unit-circle roots are the tau1 candidates. Boundary zeros are
even-order minima of |F| on the circle, so F is reduced to its square-free
part exactly before companion-matrix rooting; a coarse angular sweep with a
golden-section polish backstops anything the eigensolver misses.

Distinguished rational points (the guaranteed zeros, and the weighted/
unweighted transfer between them) are handled in exact arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .construct import StablePair
from .errors import MinusOneInput, PreconditionViolated, ZeroB
from .exactalg import GR_I, GR_ONE, GaussianRational, UniPoly, gcd
from .graphcore import ColoredGraph, Connectivity, is_connected_1n

CIRCLE_TOL = 1e-9          # companion roots accepted this close to |z| = 1
PAIR_TOL = 1e-8            # -a/b accepted as unimodular within this
SHARED_ROOT_TOL = 1e-12    # |b(tau1)| below this means tau2 is undetermined
SWEEP_FLOOR = 1e-14        # relative depth for a polished minimum to count

_EXACT_UNITS = (
    GaussianRational.of(1),
    GaussianRational.of(-1),
    GR_I,
    -GR_I,
)


def _snap(value: complex):
    for unit in _EXACT_UNITS:
        if abs(value - unit.to_complex()) < CIRCLE_TOL:
            return unit
    return None


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the unit torus, exact when both coordinates are Gaussian rational."""

    tau1: object
    tau2: object
    exact: bool

    def __post_init__(self):
        for tau in (self.tau1, self.tau2):
            if self.exact:
                if not isinstance(tau, GaussianRational):
                    raise PreconditionViolated("exact point needs Gaussian-rational parts")
                if tau.re * tau.re + tau.im * tau.im != 1:
                    raise PreconditionViolated(f"|{tau}| != 1")
            else:
                if abs(abs(complex(tau)) - 1) > 1e-12:
                    raise PreconditionViolated("numeric point too far from the torus")

    @staticmethod
    def of_exact(tau1, tau2) -> "BoundaryPoint":
        return BoundaryPoint(GaussianRational.of(tau1), GaussianRational.of(tau2), True)

    @staticmethod
    def of_numeric(tau1: complex, tau2: complex) -> "BoundaryPoint":
        s1, s2 = _snap(tau1), _snap(tau2)
        if s1 is not None and s2 is not None:
            return BoundaryPoint(s1, s2, True)
        return BoundaryPoint(
            tau1 / abs(tau1),
            tau2 / abs(tau2),
            False,
        )

    def as_complex(self) -> tuple[complex, complex]:
        if self.exact:
            return self.tau1.to_complex(), self.tau2.to_complex()
        return complex(self.tau1), complex(self.tau2)


# ---------------------------------------------------------------------------
# guaranteed zeros

@dataclass(frozen=True)
class GuaranteedZeroReport:
    predicted_by_graph: bool
    actual_zero: bool
    agree: bool
    point: BoundaryPoint
    t: Fraction


def guaranteed_point(t: Fraction) -> BoundaryPoint:
    if t == 0:
        return BoundaryPoint.of_exact(-1, 1)
    return BoundaryPoint.of_exact(-1, -1)


def guaranteed_zero_check(g: ColoredGraph, pair: StablePair) -> GuaranteedZeroReport:
    point = guaranteed_point(g.t)
    predicted = is_connected_1n(g) is Connectivity.CONNECTED_1N
    value = pair.p.eval_at(point.tau1, point.tau2)
    actual = value.is_zero()
    return GuaranteedZeroReport(predicted, actual, predicted == actual, point, g.t)


# ---------------------------------------------------------------------------
# transfer between weighted and unweighted zeros

def _beta_exact(w: GaussianRational) -> GaussianRational:
    return (GR_ONE + w * GR_I) / (GR_ONE - w * GR_I)


def _beta_inv_exact(z: GaussianRational) -> GaussianRational:
    return GR_I * (GR_ONE - z) / (GR_ONE + z)


def _transfer_exact(tau1, tau2, t: Fraction, sign: int) -> tuple:
    w1 = _beta_inv_exact(tau1)
    w2 = _beta_inv_exact(tau2)
    ct = GaussianRational.of(t)
    if sign > 0:
        mid = (w2 - ct * w1) / GaussianRational.of(1 - t)
    else:
        mid = w2 * GaussianRational.of(1 - t) + ct * w1
    return tau1, _beta_exact(mid)


def _transfer_numeric(tau1: complex, tau2: complex, t: float, sign: int) -> tuple:
    def beta(w):
        return (1 + w * 1j) / (1 - w * 1j)

    def beta_inv(z):
        return 1j * (1 - z) / (1 + z)

    w1, w2 = beta_inv(tau1), beta_inv(tau2)
    mid = (w2 - t * w1) / (1 - t) if sign > 0 else w2 * (1 - t) + t * w1
    return tau1, beta(mid)


def _transfer(tau1, tau2, t: Fraction, sign: int) -> BoundaryPoint:
    t = Fraction(t)
    exact_in = isinstance(tau1, GaussianRational) and isinstance(tau2, GaussianRational)
    if exact_in:
        if tau1 == GaussianRational.of(-1) or tau2 == GaussianRational.of(-1):
            raise MinusOneInput("transfer map is undefined at -1")
        l1, l2 = _transfer_exact(tau1, tau2, t, sign)
        return BoundaryPoint(l1, l2, True)
    c1, c2 = complex(tau1), complex(tau2)
    if c1 == -1 or c2 == -1:
        raise MinusOneInput("transfer map is undefined at -1")
    l1, l2 = _transfer_numeric(c1, c2, float(t), sign)
    return BoundaryPoint.of_numeric(l1, l2)


def t_transfer(tau1, tau2, t) -> BoundaryPoint:
    """Map a boundary zero of the unweighted p to the matching zero of p^t."""
    return _transfer(tau1, tau2, t, +1)


def t_transfer_inverse(lambda1, lambda2, t) -> BoundaryPoint:
    """Map a boundary zero of p^t back to the matching zero of the unweighted p."""
    return _transfer(lambda1, lambda2, t, -1)


# ---------------------------------------------------------------------------
# circle scan

def _conj_reverse(p: UniPoly, d: int) -> UniPoly:
    return UniPoly(p.var, [p.coeff(d - k).conj() for k in range(d + 1)])


def _desc_complex(p: UniPoly) -> np.ndarray:
    return np.array([c.to_complex() for c in reversed(p.coeffs)], dtype=complex)


def _golden_min(fn, lo: float, hi: float) -> tuple[float, float]:
    inv = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(90):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = fn(d)
    x = (a + b) / 2
    return x, fn(x)


def circle_scan(pair: StablePair, resolution: int = 256) -> list[BoundaryPoint]:
    """Locate zeros of p on the torus; numeric output, snapped to exact units."""
    a, b = pair.p.c0, pair.p.c1
    if b.is_zero():
        raise ZeroB("denominator has no z2 part; the torus criterion needs one")
    d = max(int(a.deg) if not a.is_zero() else 0, int(b.deg))
    f_poly = a * _conj_reverse(a, d) - b * _conj_reverse(b, d)
    if f_poly.is_zero():
        raise PreconditionViolated(
            "|a| = |b| identically on the circle; zero set meets the torus in a curve"
        )

    points: list[tuple[complex, complex]] = []

    def try_tau1(tau1: complex) -> None:
        tau1 = tau1 / abs(tau1)
        for seen1, _ in points:
            if abs(tau1 - seen1) < 1e-7:
                return
        bv = complex(b.eval_complex(tau1))
        if abs(bv) < SHARED_ROOT_TOL:
            return
        tau2 = -complex(a.eval_complex(tau1)) / bv
        if abs(abs(tau2) - 1) < PAIR_TOL:
            points.append((tau1, tau2))

    # exact square-free reduction keeps companion eigenvalues well-conditioned
    # at the even-multiplicity circle roots
    square_free = f_poly.exact_div(gcd(f_poly, f_poly.derivative()))
    if square_free.deg >= 1:
        for root in np.roots(_desc_complex(square_free)):
            if abs(abs(root) - 1) < CIRCLE_TOL:
                try_tau1(complex(root))

    # angular sweep: the real form T(theta) = F(e^{i theta}) e^{-i d theta}
    # is |a|^2 - |b|^2 >= 0, so missed zeros appear as deep local minima.
    # The golden-section minimum only locates a zero to the width of the
    # floating-point noise plateau (wide when the zero has high order), so
    # each hit is polished by Newton iteration on the square-free part.
    if resolution >= 3 and square_free.deg >= 1:
        desc = _desc_complex(f_poly)
        scale = float(max(np.abs(desc)))
        sf_desc = _desc_complex(square_free)
        sf_deriv = np.polyder(sf_desc)

        def t_val(theta: float) -> float:
            z = cmath.exp(1j * theta)
            return (np.polyval(desc, z) * cmath.exp(-1j * d * theta)).real

        def newton_polish(z: complex) -> complex | None:
            for _ in range(60):
                dv = np.polyval(sf_deriv, z)
                if abs(dv) < 1e-300:
                    return None
                step = np.polyval(sf_desc, z) / dv
                z = z - step
                if abs(step) < 1e-14 * max(1.0, abs(z)):
                    return complex(z)
            return None

        thetas = np.linspace(0.0, 2 * math.pi, resolution, endpoint=False)
        zs = np.exp(1j * thetas)
        vals = (np.polyval(desc, zs) * np.exp(-1j * d * thetas)).real
        for k in range(resolution):
            v = vals[k]
            if v > 1e-6 * scale:
                continue
            if v <= vals[k - 1] and v <= vals[(k + 1) % resolution]:
                lo = thetas[k] - 2 * math.pi / resolution
                hi = thetas[k] + 2 * math.pi / resolution
                theta_star, v_star = _golden_min(t_val, lo, hi)
                if abs(v_star) < SWEEP_FLOOR * scale:
                    root = newton_polish(cmath.exp(1j * theta_star))
                    if root is not None and abs(abs(root) - 1) < CIRCLE_TOL:
                        try_tau1(root)

    def angle_key(item):
        ang = math.atan2(item[0].imag, item[0].real)
        return ang + 2 * math.pi if ang < 0 else ang

    return [BoundaryPoint.of_numeric(t1, t2) for t1, t2 in sorted(points, key=angle_key)]


# ---------------------------------------------------------------------------
# numeric stability spot check

@dataclass(frozen=True)
class StabilityReport:
    min_modulus: float
    at: tuple[complex, complex]
    grid: int
    radius: float


def stability_scan(pair: StablePair, grid: int = 50, radius: float = 0.99) -> StabilityReport:
    """Min |p| over an angular grid at fixed polydisc radius. Advisory only."""
    grid = max(int(grid), 1)
    thetas = np.linspace(0.0, 2 * math.pi, grid, endpoint=False)
    z1s = radius * np.exp(1j * thetas)
    z2s = radius * np.exp(1j * thetas)
    a_vals = np.polyval(_desc_complex(pair.p.c0), z1s) if not pair.p.c0.is_zero() else np.zeros(grid, dtype=complex)
    b_vals = np.polyval(_desc_complex(pair.p.c1), z1s) if not pair.p.c1.is_zero() else np.zeros(grid, dtype=complex)
    table = np.abs(a_vals[:, None] + np.outer(b_vals, z2s))
    k1, k2 = np.unravel_index(int(np.argmin(table)), table.shape)
    return StabilityReport(
        min_modulus=float(table[k1, k2]),
        at=(complex(z1s[k1]), complex(z2s[k2])),
        grid=grid,
        radius=radius,
    )

"""Contact order of boundary zeros, exactly and by a numeric cross-check.

The exact route works on the half-plane side. With f = q1/q2 the graph's
rational function (reduced so the parts share no z1 power and no factor
involving z2), the combination r = q2 - i*q1 splits as r1(w1) + w2*r2(w1),
and the contact order at the distinguished boundary point is the order of
vanishing at 0 of Im(r1(x)*conj(r2)(x)) along the real axis. Targets with a
-1 component are moved to the distinguished point first by the substitution
w -> -1/w in the matching slot, cleared back to polynomials.

The numeric cross-check never touches r1/r2: it tracks two unimodular level
sets of the inner function toward the zero and reads the contact order off
the decay exponent of their separation. The two routes are independent down
to the graph input, which is what makes the oracle worth keeping.

Path graphs admit closed forms for every determinant in sight; those live
here too, together with the binomial-difference sum whose vanishing makes
the path contact orders come out as they do.
"""

from __future__ import annotations

import cmath
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .construct import f_of_graph, rif_of_graph
from .errors import (
    DegenerateR2,
    FitUnstable,
    NoBoundaryZero,
    PreconditionViolated,
    UnsupportedTarget,
    ZeroPairing,
)
from .exactalg import GR_I, GR_ZERO, GaussianRational, UniPoly
from .graphcore import ColoredGraph
from .polylin import BiLinPoly, RationalFunction2, rf_reduce

Target = tuple[int, int]

_ALLOWED_TARGETS = {(1, 1), (-1, 1), (1, -1), (-1, -1)}

# ladder geometry for the level-set oracle; resolves orders up to ~16
# before double-rounding of the fitted slope would dominate
ORACLE_THETA0 = 1e-2
ORACLE_RUNGS = 20
ORACLE_FIT_TAIL = 10
ORACLE_SLOPE_TOL = 0.2
ORACLE_RETRIES = 6
ORACLE_DPS = 150

# fixed generic phases; anything off the small exceptional set works
DEFAULT_ETA1 = cmath.exp(0.813j)
DEFAULT_ETA2 = cmath.exp(2.337j)


def _validate_target(target) -> Target:
    try:
        t1, t2 = target
        key = (int(t1), int(t2))
    except (TypeError, ValueError):
        raise UnsupportedTarget(f"target must be a pair of signs, got {target!r}")
    if key not in _ALLOWED_TARGETS or (t1, t2) != key:
        raise UnsupportedTarget(
            f"target must be one of (1,1), (-1,1), (1,-1), (-1,-1), got {target!r}"
        )
    return key


@dataclass(frozen=True)
class ContactReport:
    """Exact contact order together with the polynomials that witness it."""

    order: int
    pairing: UniPoly
    target: Target
    r1: UniPoly
    r2: UniPoly

    def __post_init__(self):
        assert self.pairing.is_real()
        assert self.order == self.pairing.valuation()


def transform_for_target(f: RationalFunction2, target) -> RationalFunction2:
    """Move a sign-pattern target to the distinguished point.

    A -1 in the second slot substitutes w2 -> -1/w2, which on z2-linear
    parts is the swap (c0, c1) -> (-c1, c0) after clearing one w2. A -1 in
    the first slot substitutes w1 -> -1/w1 and clears a shared power of w1
    across all four parts. The result is re-reduced.
    """
    target = _validate_target(target)
    f = rf_reduce(f)
    num, den = f.num, f.den
    if target[1] == -1:
        num = BiLinPoly(-num.c1, num.c0)
        den = BiLinPoly(-den.c1, den.c0)
    if target[0] == -1:
        parts = [num.c0, num.c1, den.c0, den.c1]
        d = max(int(p.deg) for p in parts if p)

        def sub(part: UniPoly) -> UniPoly:
            if not part:
                return part
            return part.flip(-1).times_power(d - int(part.deg))

        num = BiLinPoly(sub(num.c0), sub(num.c1))
        den = BiLinPoly(sub(den.c0), sub(den.c1))
    return rf_reduce(RationalFunction2(num, den))


def imag_pairing(r1: UniPoly, r2: UniPoly) -> UniPoly:
    """The polynomial equal to Im(r1(x) * conjugate(r2(x))) for real x."""
    twice_i = r1 * r2.conj_coeffs() - r1.conj_coeffs() * r2
    # dividing by 2i multiplies by -i/2
    return twice_i.scale(GaussianRational(0, Fraction(-1, 2)))


def contact_of_fraction(f: RationalFunction2, target) -> ContactReport:
    """Contact order of the fraction's Cayley conjugate at a sign target.

    Assumes the caller has already confirmed a boundary zero there; use
    contact_order for the graph-level entry with that check included.
    """
    target = _validate_target(target)
    g = transform_for_target(f, target)
    r1 = g.den.c0 - g.num.c0.scale(GR_I)
    r2 = g.den.c1 - g.num.c1.scale(GR_I)
    if not r2.eval_at(GR_ZERO):
        raise DegenerateR2("z2 part of r vanishes at 0; reduction is incomplete")
    s = imag_pairing(r1, r2)
    if s.is_zero():
        raise ZeroPairing("pairing polynomial is identically zero")
    k = int(s.valuation())
    if k % 2:
        msg = f"odd vanishing order {k}; the reduction must have dropped a factor"
        if __debug__:
            raise AssertionError(msg)
        warnings.warn(msg, RuntimeWarning)
    return ContactReport(
        order=k,
        pairing=s.with_var("x"),
        target=target,
        r1=r1.with_var("x"),
        r2=r2.with_var("x"),
    )


def contact_order(g: ColoredGraph, target) -> ContactReport:
    """Exact contact order of the graph's stable pair at a sign target."""
    target = _validate_target(target)
    pair = rif_of_graph(g)
    if pair.p.eval_at(target[0], target[1]):
        raise NoBoundaryZero(f"denominator does not vanish at {target}")
    return contact_of_fraction(f_of_graph(g), target)


# ---------------------------------------------------------------------------
# numeric level-set oracle

def _mpc_of(c: GaussianRational):
    re = mp.mpf(c.re.numerator) / c.re.denominator
    im = mp.mpf(c.im.numerator) / c.im.denominator
    return mp.mpc(re, im)


def _mp_polyval(coeffs, z):
    acc = mp.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _fit_slope(xs, ys) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def level_set_oracle(
    g: ColoredGraph,
    target,
    eta1: complex | None = None,
    eta2: complex | None = None,
    seed: int = 7,
) -> int:
    """Estimate the contact order from two unimodular level sets.

    Solves q = eta*p for z2 (the functions are z2-linear, so this is explicit)
    along a geometric ladder of circle points approaching tau1, then fits the
    decay exponent of |g_eta1 - g_eta2|. Accepts any torus target, not just
    the four sign patterns. Retries with fresh random phases when the fit
    does not settle near an even integer, and raises FitUnstable if no pair
    of phases works.
    """
    tau1, tau2 = complex(target[0]), complex(target[1])
    if abs(abs(tau1) - 1) > 1e-6 or abs(abs(tau2) - 1) > 1e-6:
        raise PreconditionViolated("target must lie on the torus")
    pair = rif_of_graph(g)
    if abs(pair.p.eval_complex(tau1, tau2)) > 1e-6:
        raise NoBoundaryZero(f"denominator does not vanish near {target}")

    rng = random.Random(seed)
    attempts = [(
        DEFAULT_ETA1 if eta1 is None else eta1,
        DEFAULT_ETA2 if eta2 is None else eta2,
    )]
    attempts += [
        (cmath.exp(1j * rng.uniform(0, 2 * math.pi)),
         cmath.exp(1j * rng.uniform(0, 2 * math.pi)))
        for _ in range(ORACLE_RETRIES)
    ]

    with mp.workdps(ORACLE_DPS):
        qa = [_mpc_of(c) for c in pair.q.c0.coeffs]
        qb = [_mpc_of(c) for c in pair.q.c1.coeffs]
        pa = [_mpc_of(c) for c in pair.p.c0.coeffs]
        pb = [_mpc_of(c) for c in pair.p.c1.coeffs]
        t1 = mp.mpc(tau1.real, tau1.imag)

        def branch(eta, z1):
            num = eta * _mp_polyval(pa, z1) - _mp_polyval(qa, z1)
            den = _mp_polyval(qb, z1) - eta * _mp_polyval(pb, z1)
            return num / den

        for e1, e2 in attempts:
            m1, m2 = mp.mpc(e1.real, e1.imag), mp.mpc(e2.real, e2.imag)
            xs, ys = [], []
            try:
                for j in range(1, ORACLE_RUNGS + 1):
                    theta = mp.mpf(ORACLE_THETA0) * mp.mpf(2) ** (-j)
                    z1 = t1 * mp.exp(mp.mpc(0, 1) * theta)
                    diff = branch(m1, z1) - branch(m2, z1)
                    if diff == 0:
                        raise ZeroDivisionError
                    xs.append(float(mp.log(abs(z1 - t1))))
                    ys.append(float(mp.log(abs(diff))))
            except ZeroDivisionError:
                continue
            slope = _fit_slope(xs[-ORACLE_FIT_TAIL:], ys[-ORACLE_FIT_TAIL:])
            k = 2 * round(slope / 2)
            if k >= 2 and abs(slope - k) <= ORACLE_SLOPE_TOL:
                return int(k)
    raise FitUnstable("level-set separation exponent did not settle")


# ---------------------------------------------------------------------------
# path-graph closed forms

def _check_path_index(n: int):
    if n < 1:
        raise PreconditionViolated(f"path index must be at least 1, got {n}")


def path_det(n: int) -> UniPoly:
    """det(A - z1*I) for the n-vertex path adjacency matrix, by recursion."""
    _check_path_index(n)
    a = UniPoly("z1", [0, -1])
    if n == 1:
        return a
    b = UniPoly("z1", [-1, 0, 1])
    for _ in range(n - 2):
        a, b = b, -b.times_power(1) - a
    return b


def _comb0(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 whenever 0 <= a < b or b < 0."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def path_det_closed(n: int) -> UniPoly:
    """The same determinant from its alternating binomial expansion."""
    _check_path_index(n)
    coeffs = [GR_ZERO] * (n + 1)
    if n % 2:
        half = (n - 1) // 2
        for m in range(half + 1):
            c = _comb0(half + 1 + m, half - m) * (-1) ** (half + 1 - m)
            coeffs[2 * m + 1] = GaussianRational(c)
    else:
        half = n // 2
        for m in range(half + 1):
            c = _comb0(half + m, half - m) * (-1) ** (half - m)
            coeffs[2 * m] = GaussianRational(c)
    return UniPoly("z1", coeffs)


def path_det_reversed(n: int) -> UniPoly:
    """Coefficient reversal z1^n * path_det(n)(1/z1); constant term is never 0."""
    _check_path_index(n)
    return path_det(n).flip(1)


def path_det_reversed_closed(n: int) -> UniPoly:
    """The reversal from its re-indexed binomial form: even powers only."""
    _check_path_index(n)
    coeffs = [GR_ZERO] * (n + 1)
    top = (n - 1) // 2 if n % 2 else n // 2
    sign_shift = 1 if n % 2 else 0
    for m in range(top + 1):
        c = _comb0(n - m, m) * (-1) ** (m + sign_shift)
        coeffs[2 * m] = GaussianRational(c)
    return UniPoly("z1", coeffs)


def sub_binomial(a1: int, a2: int, k: int) -> int:
    """Difference of the two shifted binomial convolutions.

    Zero on the whole region a1 > k, a2 >= k, which is exactly what collapses
    the path pairing polynomial to a monomial.
    """
    if min(a1, a2, k) < 0:
        raise PreconditionViolated("arguments must be nonnegative")
    total = 0
    for m in range(k + 1):
        total += _comb0(a1 - m, m) * _comb0(a2 - (k - m), k - m)
        total -= _comb0(a1 - 1 - m, m) * _comb0(a2 + 1 - (k - m), k - m)
    return total

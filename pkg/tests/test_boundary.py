"""Boundary-zero tests: guaranteed points, the weighted/unweighted transfer
map, the torus scan, and the advisory stability check."""

import random
from fractions import Fraction

import pytest

from stabgraph.boundary import (
    BoundaryPoint,
    circle_scan,
    guaranteed_point,
    guaranteed_zero_check,
    stability_scan,
    t_transfer,
    t_transfer_inverse,
)
from stabgraph.construct import StablePair, rif_of_graph
from stabgraph.errors import MinusOneInput, PreconditionViolated, ZeroB
from stabgraph.exactalg import GaussianRational, UniPoly
from stabgraph.graphcore import ColoredGraph, Connectivity, is_connected_1n, path_graph
from stabgraph.polylin import BiLinPoly

SQUARE = ColoredGraph.of(4, [(1, 2), (2, 3), (1, 4), (3, 4)])


def up(*coeffs):
    return UniPoly("z1", [GaussianRational.of(c) for c in coeffs])


def gr(re, im=0):
    return GaussianRational.of(re) if im == 0 else GaussianRational(Fraction(re), Fraction(im))


def random_connected(rng, n_lo=2, n_hi=6, t=0):
    while True:
        n = rng.randint(n_lo, n_hi)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = ColoredGraph.of(n, edges, t)
        if is_connected_1n(g) is Connectivity.CONNECTED_1N:
            return g


# ---------------------------------------------------------------------------
# guaranteed zeros

def test_guaranteed_square_unweighted():
    rep = guaranteed_zero_check(SQUARE, rif_of_graph(SQUARE))
    assert rep.predicted_by_graph and rep.actual_zero and rep.agree
    assert rep.point.exact
    assert rep.point.tau1 == gr(-1) and rep.point.tau2 == gr(1)


def test_guaranteed_disconnected():
    g = ColoredGraph.of(4, [(1, 2), (3, 4)])
    rep = guaranteed_zero_check(g, rif_of_graph(g))
    assert not rep.predicted_by_graph and not rep.actual_zero and rep.agree


def test_guaranteed_square_weighted():
    g = SQUARE.with_t(Fraction(1, 2))
    rep = guaranteed_zero_check(g, rif_of_graph(g))
    assert rep.predicted_by_graph and rep.actual_zero and rep.agree
    assert rep.point.tau1 == gr(-1) and rep.point.tau2 == gr(-1)
    assert guaranteed_point(Fraction(1, 2)).tau2 == gr(-1)


def test_guaranteed_isolated():
    g = ColoredGraph.of(3, [(2, 3)])
    rep = guaranteed_zero_check(g, rif_of_graph(g))
    assert not rep.predicted_by_graph and not rep.actual_zero and rep.agree


# ---------------------------------------------------------------------------
# transfer map

def test_transfer_fixes_one_one():
    for t in (Fraction(1, 4), Fraction(1, 2), Fraction(5, 7)):
        out = t_transfer(gr(1), gr(1), t)
        assert out.exact and out.tau1 == gr(1) and out.tau2 == gr(1)


def test_transfer_worked_example():
    out = t_transfer(gr(1), gr(0, -1), Fraction(1, 2))
    assert out.exact
    assert out.tau1 == gr(1)
    assert out.tau2 == GaussianRational(Fraction(-3, 5), Fraction(-4, 5))
    mod = out.tau2.re * out.tau2.re + out.tau2.im * out.tau2.im
    assert mod == 1
    back = t_transfer_inverse(out.tau1, out.tau2, Fraction(1, 2))
    assert back.tau1 == gr(1) and back.tau2 == gr(0, -1)


def test_transfer_rejects_minus_one():
    with pytest.raises(MinusOneInput):
        t_transfer(gr(-1), gr(1), Fraction(1, 2))
    with pytest.raises(MinusOneInput):
        t_transfer(gr(1), gr(-1), Fraction(1, 2))
    with pytest.raises(MinusOneInput):
        t_transfer_inverse(complex(-1), 1j, Fraction(1, 4))


def rational_unit(rng) -> GaussianRational:
    while True:
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        if (a, b) == (0, 0):
            continue
        den = Fraction(a * a + b * b)
        tau = GaussianRational(Fraction(a * a - b * b) / den, Fraction(2 * a * b) / den)
        if tau != gr(-1):
            return tau


def test_transfer_stays_on_circle_and_inverts():
    rng = random.Random(13)
    for _ in range(40):
        tau1, tau2 = rational_unit(rng), rational_unit(rng)
        t = Fraction(rng.randint(1, 6), 7)
        out = t_transfer(tau1, tau2, t)
        assert out.exact
        assert out.tau2.re ** 2 + out.tau2.im ** 2 == 1
        back = t_transfer_inverse(out.tau1, out.tau2, t)
        assert back.tau1 == tau1 and back.tau2 == tau2


def test_transfer_numeric_matches_exact():
    tau1, tau2 = gr(1), gr(0, -1)
    exact = t_transfer(tau1, tau2, Fraction(1, 2))
    numeric = t_transfer(1 + 0j, -1j, Fraction(1, 2))
    e1, e2 = exact.as_complex()
    n1, n2 = numeric.as_complex()
    assert abs(e1 - n1) < 1e-14 and abs(e2 - n2) < 1e-14


# ---------------------------------------------------------------------------
# circle scan

def test_scan_two_path_finds_guaranteed_zero():
    pts = circle_scan(rif_of_graph(path_graph(2)))
    assert len(pts) == 1
    pt = pts[0]
    assert pt.exact and pt.tau1 == gr(-1) and pt.tau2 == gr(1)


def test_scan_square_finds_both_known_zeros():
    pts = circle_scan(rif_of_graph(SQUARE))
    coords = [(p.tau1, p.tau2) for p in pts if p.exact]
    assert (gr(1), gr(1)) in coords
    assert (gr(-1), gr(1)) in coords
    assert len(pts) == 2
    # deterministic order: ascending angle of tau1
    assert pts[0].tau1 == gr(1)


def test_scan_rejects_z2_free():
    with pytest.raises(ZeroB):
        circle_scan(rif_of_graph(ColoredGraph.of(3, [(2, 3)])))


def test_scan_resolution_invariance():
    a = circle_scan(rif_of_graph(SQUARE), resolution=64)
    b = circle_scan(rif_of_graph(SQUARE), resolution=512)
    assert len(a) == len(b)
    for pa, pb in zip(a, b):
        xa, ya = pa.as_complex()
        xb, yb = pb.as_complex()
        assert abs(xa - xb) < 1e-9 and abs(ya - yb) < 1e-9


def test_scan_contains_guaranteed_point_everywhere():
    rng = random.Random(101)
    for k in range(200):
        t = Fraction(1, 4) if k % 4 == 0 else Fraction(0)
        g = random_connected(rng, t=t)
        pair = rif_of_graph(g)
        target = guaranteed_point(g.t).as_complex()
        pts = circle_scan(pair)
        hit = any(
            abs(p.as_complex()[0] - target[0]) < 1e-7
            and abs(p.as_complex()[1] - target[1]) < 1e-7
            for p in pts
        )
        assert hit, (g.edges, g.t)


def test_transfer_round_trip_on_scanned_zeros():
    rng = random.Random(103)
    graphs = [SQUARE, path_graph(4)] + [random_connected(rng) for _ in range(25)]
    for g in graphs:
        p0 = rif_of_graph(g)
        zeros = circle_scan(p0)
        for t in (Fraction(1, 4), Fraction(1, 2)):
            pt_pair = rif_of_graph(g.with_t(t))
            for z in zeros:
                c1, c2 = z.as_complex()
                if abs(c1 + 1) <= 1e-6 or abs(c2 + 1) <= 1e-6:
                    continue
                lam = t_transfer(c1, c2, t)
                l1, l2 = lam.as_complex()
                assert abs(pt_pair.p.eval_complex(l1, l2)) < 1e-8
            # inverse direction: weighted zeros map back to unweighted zeros
            for z in circle_scan(pt_pair):
                c1, c2 = z.as_complex()
                if abs(c1 + 1) <= 1e-6 or abs(c2 + 1) <= 1e-6:
                    continue
                tau = t_transfer_inverse(c1, c2, t)
                x1, x2 = tau.as_complex()
                assert abs(p0.p.eval_complex(x1, x2)) < 1e-8


def test_exact_points_transfer_exactly():
    # the guaranteed zero pair relates (-1,1) to (-1,-1); both are at the
    # excluded -1 abscissa, so this uses direct evaluation, not the map
    for t in (Fraction(1, 4), Fraction(1, 2)):
        pair = rif_of_graph(SQUARE.with_t(t))
        assert pair.p.eval_at(gr(-1), gr(-1)).is_zero()


# ---------------------------------------------------------------------------
# stability scan

def test_stability_scan_square():
    rep = stability_scan(rif_of_graph(SQUARE), grid=50)
    assert rep.min_modulus > 0
    assert rep.grid == 50 and rep.radius == 0.99


def test_stability_scan_constant():
    pair = rif_of_graph(ColoredGraph.of(2))
    rep = stability_scan(pair, grid=7)
    assert abs(rep.min_modulus - 1.0) < 1e-12


def test_stability_scan_flags_corruption():
    good = rif_of_graph(SQUARE)
    # flip the sign of the z1^2 coefficient in the z2 part; the modified
    # denominator has |b(z1)| > 1 = |a(z1)| on part of the circle, so a zero
    # curve enters the open bidisk and crosses the sampled torus
    bad_c1 = up(*[Fraction(-1, 4), Fraction(-1, 4), Fraction(3, 4), Fraction(1, 4)])
    corrupted = StablePair(q=good.q, p=BiLinPoly(good.p.c0, bad_c1))
    good_min = stability_scan(good, grid=400).min_modulus
    bad_min = stability_scan(corrupted, grid=400).min_modulus
    assert bad_min < good_min
    assert bad_min < 0.01
    assert good_min > 0.015


def test_boundary_point_validation():
    with pytest.raises(PreconditionViolated):
        BoundaryPoint(gr(2), gr(1), True)
    with pytest.raises(PreconditionViolated):
        BoundaryPoint(0.5 + 0j, 1 + 0j, False)
    snapped = BoundaryPoint.of_numeric(-1 + 1e-12j, 1 + 0j)
    assert snapped.exact and snapped.tau1 == gr(-1)

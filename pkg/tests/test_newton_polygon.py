"""Newton polygon, edges, edge polynomials, non-degeneracy, Minkowski sums."""

from __future__ import annotations

import random
from fractions import Fraction

from discurve.bipoly import BiPoly, parse_poly, ueval
from discurve.coeffs import Ctx, make_sqrt
from discurve.newton_polygon import (
    edge_polynomial,
    edges,
    is_nondegenerate,
    minkowski,
    polygon,
    support_points,
)


def test_polygon_vertices_of_quartic():
    # implicit equation of (t^4, t^6 + t^7); (3,2) sits on the single edge
    # from (0,4) to (6,0), so it is not a vertex
    f = parse_poly("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7")
    assert polygon(f) == [(0, 4), (6, 0)]


def test_polygon_single_edge():
    assert polygon(parse_poly("y^2 - x^5")) == [(0, 2), (5, 0)]


def test_support_points_drop_zero_coefficients():
    f = BiPoly({(0, 2): Fraction(1), (3, 0): Fraction(0)}, ("x", "y"))
    assert support_points(f) == {(0, 2)}


def test_edges_carry_inclination():
    f = parse_poly("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7")
    es = edges(f)
    # collinear segments merge into one edge of two lattice steps
    assert len(es) == 1
    e = es[0]
    assert (e.p, e.q, e.steps) == (3, 2, 2)
    assert e.top == (0, 4) and e.bot == (6, 0)


def test_edge_polynomial_is_lowest_first_and_not_palindromed():
    # single edge from (0,2) to (3,0); w = c^q must satisfy 4w - 8 = 0
    f = parse_poly("4*y^2 - 8*x^3")
    e = edges(f)[0]
    h = edge_polynomial(f, e)
    assert h == [-8, 4]
    assert ueval(h, Fraction(2)) == 0


def test_edge_polynomial_vanishes_on_root_data():
    # y ~ c x^(3/2) with c^2 = 1 for y^2 - x^3
    f = parse_poly("y^2 - x^3")
    e = edges(f)[0]
    h = edge_polynomial(f, e)
    assert ueval(h, Fraction(1)) == 0


def test_nondegenerate_cusp():
    flag, witness = is_nondegenerate(parse_poly("y^2 - x^3"))
    assert flag and witness is None


def test_degenerate_square_detected():
    # (y - x^2)^2 has a repeated edge root
    f = parse_poly("y^2 - 2*x^2*y + x^4")
    flag, witness = is_nondegenerate(f)
    assert not flag
    assert witness is not None and witness["repeated_root"] == 1


def test_degenerate_with_radical_root():
    # (y - sqrt(6) x)^2 = y^2 - 2 sqrt(6) x y + 6 x^2
    s6 = make_sqrt(0, 2, 6)
    f = BiPoly({(0, 2): Fraction(1), (1, 1): -s6, (2, 0): Fraction(6)},
               ("x", "y"))
    flag, witness = is_nondegenerate(f, Ctx())
    assert not flag


def _random_positive_poly(rng: random.Random) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(2, 5)):
        terms[(rng.randint(0, 4), rng.randint(0, 4))] = Fraction(rng.randint(1, 5))
    if all(i > 0 for i, _ in terms) or all(j > 0 for _, j in terms):
        terms[(0, rng.randint(1, 3))] = Fraction(1)
        terms[(rng.randint(1, 3), 0)] = Fraction(1)
    return BiPoly(terms, ("x", "y"))


def test_minkowski_matches_product_polygon_seeded():
    # with positive coefficients no hull vertex can cancel, so the polygon
    # of a product is the Minkowski sum of the polygons
    rng = random.Random(73)
    for _ in range(30):
        f = _random_positive_poly(rng)
        g = _random_positive_poly(rng)
        pf, pg = polygon(f), polygon(g)
        assert polygon(f * g) == list(minkowski(pf, pg))

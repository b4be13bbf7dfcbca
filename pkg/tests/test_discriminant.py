"""Discriminant curve: exact computation, branch extraction, Merle polygon."""

from __future__ import annotations

from fractions import Fraction

from discurve.bipoly import BiPoly, parse_poly
from discurve.coeffs import Ctx
from discurve.discriminant import (
    DiscBranch,
    EquisingularityType,
    discriminant_branches,
    discriminant_exact,
    discriminant_polygon,
    discriminant_type,
    eq_type_of_branches,
    merle_polygon,
    polar,
)
from discurve.invariants import semigroup, semigroup_from_char
from discurve.newton_polygon import is_nondegenerate, polygon
from discurve.puiseux import Parametrization, compose, implicitize

QUARTIC = "y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"  # (t^4, t^6 + t^7)


def test_exact_discriminant_of_quartic():
    D = discriminant_exact(parse_poly(QUARTIC))
    want = parse_poly(
        "v^3 - u^6*v^2 + 3*u^7*v^2 - 20*u^13*v + 3*u^14*v"
        " + 16*u^19 + 8*u^20 + u^21", ("u", "v"))
    assert D.terms == want.terms
    assert D.vars == ("u", "v")


def test_exact_discriminant_of_cusps():
    for s1 in (3, 5, 7, 9):
        f = parse_poly("y^2 - x^%d" % s1)
        D = discriminant_exact(f)
        assert D.terms == parse_poly("v + u^%d" % s1, ("u", "v")).terms


def test_polar_curve():
    f = parse_poly(QUARTIC)
    p = polar(f)
    assert p.terms == parse_poly("4*y^3 - 4*x^3*y - 4*x^5").terms


def test_discriminant_polygon_matches_merle():
    cases = [
        ("y^2 - x^5", (2, 5)),
        (QUARTIC, (4, 6, 7)),
    ]
    for text, char in cases:
        f = parse_poly(text)
        assert discriminant_polygon(f) == merle_polygon(semigroup_from_char(char))


def test_merle_polygon_knowns():
    assert merle_polygon(semigroup_from_char((2, 5))) == ((0, 1), (5, 0))
    assert merle_polygon(semigroup_from_char((4, 6, 7))) == ((0, 3), (6, 2), (19, 0))
    assert merle_polygon(semigroup_from_char((4, 10, 11))) == ((0, 3), (10, 2), (31, 0))


def test_branch_degrees_sum_to_n_minus_one():
    ctx = Ctx()
    for text in ("y^2 - x^3", "y^3 - x^7", QUARTIC):
        f = parse_poly(text)
        brs = discriminant_branches(f, Fraction(60), ctx)
        assert sum(b.ram * b.mult for b in brs) == f.deg("y") - 1


def test_composed_branches_are_roots_of_exact_discriminant():
    # dual route: the exact resultant and the composed-series branches must
    # describe the same curve
    ctx = Ctx()
    f = parse_poly(QUARTIC)
    D = discriminant_exact(f)
    Dxy = BiPoly(dict(D.terms), ("x", "y"))
    brs = discriminant_branches(f, Fraction(40), ctx)
    orders = sorted(b.series.order(ctx) for b in brs)
    assert orders == [Fraction(6), Fraction(13, 2)]
    for b in brs:
        g = compose(Dxy, b.series, ctx)
        assert g.significant_terms(ctx) == []


def test_quartic_type():
    et = discriminant_type(parse_poly(QUARTIC))
    assert et.render() == "smooth + <2,13>; i0(1,2)=12"
    doc = et.to_dict()
    assert [b["generators"] for b in doc["branches"]] == [[1], [2, 13]]
    assert doc["pairwise"] == [[0, 12], [12, 0]]


def test_quartic_discriminant_is_nondegenerate():
    D = discriminant_exact(parse_poly(QUARTIC))
    flag, _ = is_nondegenerate(D)
    assert flag


def test_cusp_type_is_smooth_branch():
    et = discriminant_type(parse_poly("y^2 - x^7"))
    assert et.render() == "smooth"
    assert et.branches[0].mult == 1


def test_type_canonicalization_is_input_order_invariant():
    specs_a = [((1,), 1), ((2, 13), 1)]
    specs_b = [((2, 13), 1), ((1,), 1)]
    mat_a = [[0, 12], [12, 0]]
    mat_b = [[0, 12], [12, 0]]
    ta = EquisingularityType.make(specs_a, mat_a)
    tb = EquisingularityType.make(specs_b, mat_b)
    assert ta == tb
    # identical branches: the pairwise matrix picks the canonical labeling
    specs = [((1,), 1), ((1,), 1), ((1,), 1)]
    ta = EquisingularityType.make(specs, [[0, 5, 7], [5, 0, 9], [7, 9, 0]])
    tb = EquisingularityType.make(specs, [[0, 9, 5], [9, 0, 7], [5, 7, 0]])
    assert ta == tb


def test_merged_multiplicity_from_coincident_polar_roots():
    # (t^2, t^9): polar is y-general of degree 1... use a multiplicity-3
    # example instead where two polar roots give one discriminant branch
    f = parse_poly("y^3 - x^7")
    ctx = Ctx()
    brs = discriminant_branches(f, Fraction(40), ctx)
    assert len(brs) == 1
    b = brs[0]
    assert b.ram * b.mult == 2
    et = eq_type_of_branches(brs, ctx)
    assert "smooth" in et.render() or "<" in et.render()


def test_discriminant_type_of_singular_discriminant():
    # (t^3, t^7 + t^8): lambda = 8, discriminant has a <2,15> branch
    par = Parametrization.make(3, {7: Fraction(1), 8: Fraction(1)})
    et = discriminant_type(implicitize(par))
    assert et.render() == "<2,15>"

"""Puiseux expansions, composition, implicitization, parametrizations."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from discurve.bipoly import BiPoly, parse_poly
from discurve.coeffs import Ctx, make_sqrt
from discurve.errors import InvalidInput, ParseError
from discurve.puiseux import (
    Parametrization,
    PuiseuxSeries,
    _demote_mixed,
    _radicands,
    compose,
    implicitize,
    puiseux_roots,
)


def test_cusp_roots():
    f = parse_poly("y^2 - x^3")
    ctx = Ctx()
    roots = puiseux_roots(f, Fraction(6), ctx)
    # one conjugacy class of ramification 2 covering both sheets
    assert sum(s.ram * m for s, m in roots) == 2
    (s, m), = roots
    assert m == 1 and s.ram == 2
    assert list(s.terms) == [Fraction(3, 2)]


def test_roots_vanish_under_composition():
    f = parse_poly("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7")
    ctx = Ctx()
    for s, _ in puiseux_roots(f, Fraction(12), ctx):
        g = compose(f, s, ctx)
        assert g.significant_terms(ctx) == []


def test_implicitize_quartic():
    par = Parametrization.parse("t^4", "t^6 + t^7")
    f = implicitize(par)
    assert f.terms == parse_poly("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7").terms


def test_implicitize_cusp():
    par = Parametrization.parse("t^2", "t^5")
    f = implicitize(par)
    assert f.terms == parse_poly("y^2 - x^5").terms


def test_parse_rejects_non_primitive():
    with pytest.raises(InvalidInput):
        Parametrization.parse("t^4", "t^6 + t^8")


def test_parse_rejects_non_monomial_x():
    with pytest.raises(ParseError):
        Parametrization.parse("t^4 + t^5", "t^6")


def test_leading_coefficient_tracks_precision():
    # y^3 = 2 x^5 has y = 2^(1/3) x^(5/3); the stored numeric coefficient
    # must be accurate at working precision, not rounded through a 53-bit
    # intermediate during chart recombination
    f = parse_poly("y^3 - 2*x^5")
    ctx = Ctx(prec=256)
    roots = puiseux_roots(f, Fraction(10), ctx)
    s = roots[0][0]
    c = s.terms[Fraction(5, 3)]
    with ctx.workprec():
        res = abs(c ** 3 - 2)
    assert res < mpmath.mpf(2) ** -200


def test_radicand_collection_and_demotion():
    s6 = make_sqrt(0, 1, 6)
    i1 = make_sqrt(0, 1, -1)
    f = BiPoly({(0, 1): s6, (1, 0): i1}, ("x", "y"))
    assert _radicands(f.terms.values()) == {6, -1}
    ctx = Ctx()
    g = _demote_mixed(f, ctx)
    for c in g.terms.values():
        assert isinstance(c, mpmath.mpc)
    # single-radicand input passes through untouched
    h = BiPoly({(0, 1): s6, (1, 0): Fraction(2)}, ("x", "y"))
    assert _demote_mixed(h, ctx) is h


def test_significant_terms_drop_numeric_noise():
    ctx = Ctx()
    with ctx.workprec():
        tiny = mpmath.mpc(mpmath.mpf(2) ** -120)
    s = PuiseuxSeries({Fraction(1): Fraction(1), Fraction(2): tiny},
                      ram=1, trunc=Fraction(5))
    sig = s.significant_terms(ctx)
    assert [e for e, _ in sig] == [Fraction(1)]


def test_diff_order_of_conjugates():
    f = parse_poly("y^2 - x^3")
    ctx = Ctx()
    roots = puiseux_roots(f, Fraction(6), ctx)
    series = roots[0][0].conjugates(ctx)
    assert len(series) == 2
    a, b = series
    order, limit = a.diff_order(b, ctx)
    assert order == Fraction(3, 2)


def test_entire_flags_integer_exponents():
    par = Parametrization.parse("t^2", "t^5")
    f = implicitize(par)
    ctx = Ctx()
    for s, _ in puiseux_roots(f, Fraction(8), ctx):
        assert not s.entire
    g = parse_poly("y - x^2")
    (s, m), = puiseux_roots(g, Fraction(8), ctx)
    assert m == 1 and list(s.terms) == [Fraction(2)]

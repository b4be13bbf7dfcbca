"""Coefficient tower, univariate/bivariate polynomials, resultants, roots."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from discurve.bipoly import (
    BiPoly,
    parse_poly,
    ueval,
    ufrom_roots,
    ugcd,
    umul,
    uyun,
)
from discurve.coeffs import (
    Ctx,
    SqrtCoef,
    cto_mpc,
    make_sqrt,
    parse_coeff,
    render_coeff,
    try_sqrt,
)
from discurve.errors import ParseError
from discurve.resultants import resultant, squarefree_decompose
from discurve.roots import complex_roots, newton_polish


# ---------------------------------------------------------------------------
# exact coefficients


def test_make_sqrt_normalizes_radicand():
    # sqrt(12) = 2*sqrt(3)
    v = make_sqrt(0, 1, 12)
    assert (v.a, v.b, v.d) == (0, 2, 3)
    # a rational square collapses to Fraction
    assert make_sqrt(1, 2, 9) == Fraction(7)
    with pytest.raises(ValueError):
        make_sqrt(0, 3, 0)


def test_sqrt_arithmetic_same_radicand():
    x = make_sqrt(1, 2, 3)
    y = make_sqrt(2, -1, 3)
    assert x + y == make_sqrt(3, 1, 3)
    assert x - y == make_sqrt(-1, 3, 3)
    # (1+2r)(2-r) = 2 - r + 4r - 2*3 = -4 + 3r
    assert x * y == make_sqrt(-4, 3, 3)
    assert x * y / y == x
    assert x ** 2 == make_sqrt(13, 4, 3)


def test_sqrt_mixed_radicands_add_is_refused():
    x = make_sqrt(0, 1, 2)
    y = make_sqrt(0, 1, 3)
    with pytest.raises(ValueError, match="cannot add sqrt"):
        x + y
    with pytest.raises(ValueError, match="cannot multiply"):
        make_sqrt(1, 1, 2) * make_sqrt(1, 1, 3)


def test_pure_radical_cross_product():
    assert make_sqrt(0, 1, 2) * make_sqrt(0, 1, 3) == make_sqrt(0, 1, 6)
    # principal branches: sqrt(-1)*sqrt(-6) = -sqrt(6)
    assert make_sqrt(0, 1, -1) * make_sqrt(0, 1, -6) == make_sqrt(0, -1, 6)
    assert make_sqrt(0, 1, -1) * make_sqrt(0, 1, 6) == make_sqrt(0, 1, -6)


def test_sqrt_to_mpc_and_try_sqrt():
    with mpmath.workprec(128):
        v = cto_mpc(make_sqrt(0, Fraction(4, 9), 6))
        assert abs(v - mpmath.sqrt(6) * 4 / 9) < mpmath.ldexp(1, -120)
    assert try_sqrt(Fraction(4)) == 2
    assert try_sqrt(Fraction(-9, 4)) == make_sqrt(0, Fraction(3, 2), -1)
    assert try_sqrt(make_sqrt(0, 1, 6)) is None or isinstance(
        try_sqrt(make_sqrt(0, 1, 6)), (SqrtCoef, type(None)))


def test_parse_render_roundtrip():
    for text in ["4/9*sqrt(6)", "-3/2", "7", "1+sqrt(2)", "-4/81*sqrt(6)"]:
        v = parse_coeff(text)
        assert parse_coeff(render_coeff(v)) == v


def test_parse_coeff_rejects_garbage():
    with pytest.raises(ParseError):
        parse_coeff("4//9")
    with pytest.raises(ParseError):
        parse_coeff("sqrt(2")


def test_ctx_escalate_returns_new_context():
    ctx = Ctx(prec=128)
    up = ctx.escalate()
    assert ctx.prec == 128 and up.prec == 256
    assert up.zero_eps == mpmath.ldexp(1, -128)
    assert ctx.zero_eps == mpmath.ldexp(1, -64)
    assert ctx.band_eps > ctx.cluster_eps > ctx.zero_eps


def test_ctx_workprec_scopes_precision():
    ctx = Ctx(prec=256)
    with ctx.workprec():
        assert mpmath.mp.prec == 256
    assert mpmath.mp.prec != 256


# ---------------------------------------------------------------------------
# univariate helpers (lowest-degree-first lists)


def test_uyun_squarefree_multiplicities():
    # (x-1)^2 (x-2)
    p = umul(umul([-1, 1], [-1, 1]), [-2, 1])
    parts = uyun(p)
    got = sorted((m, tuple(q)) for q, m in parts if len(q) > 1)
    assert got == [(1, (-2, 1)), (2, (-1, 1))]


def test_ufrom_roots_and_eval():
    p = ufrom_roots([1, 2, 3])
    assert ueval(p, 2) == 0
    assert ueval(p, 0) == -6


def test_ugcd():
    a = umul([-1, 1], [1, 1])        # x^2 - 1
    b = umul([-1, 1], [3, 1])        # (x-1)(x+3)
    g = ugcd(a, b)
    assert g == [-1, 1] or g == [Fraction(-1), Fraction(1)]


# ---------------------------------------------------------------------------
# bivariate polynomials


def test_parse_poly_basic():
    f = parse_poly("y^2 - x^5")
    assert f.terms == {(0, 2): 1, (5, 0): -1}
    g = parse_poly("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7")
    assert g.deg("y") == 4 and g.deg("x") == 7


def test_parse_poly_position_annotated_error():
    with pytest.raises(ParseError) as ei:
        parse_poly("y^2 - * x^5")
    assert ei.value.position is not None


def test_bipoly_arithmetic():
    x = BiPoly({(1, 0): 1}, ("x", "y"))
    y = BiPoly({(0, 1): 1}, ("x", "y"))
    f = (y - x ** 2) * (y + x ** 2)
    assert f.terms == {(0, 2): 1, (4, 0): -1}


# ---------------------------------------------------------------------------
# resultants: two routes must agree


def _random_upoly(rng: random.Random, deg: int) -> list:
    p = [Fraction(rng.randint(-4, 4)) for _ in range(deg)]
    p.append(Fraction(rng.randint(1, 4)))
    return p


def test_resultant_prs_equals_sylvester_seeded():
    rng = random.Random(20140618)
    for _ in range(25):
        dx = rng.randint(1, 3)
        f = BiPoly({(rng.randint(0, dx), j): Fraction(rng.randint(-3, 3))
                    for j in range(rng.randint(1, 3) + 1)}, ("x", "y"))
        g = BiPoly({(rng.randint(0, dx), j): Fraction(rng.randint(-3, 3))
                    for j in range(rng.randint(1, 3) + 1)}, ("x", "y"))
        if f.deg("y") < 1 or g.deg("y") < 1:
            continue
        r1 = resultant(f, g, "y", method="prs")
        r2 = resultant(f, g, "y", method="sylvester")
        assert r1.terms == r2.terms


def test_resultant_known_discriminant():
    f = parse_poly("y^2 - x^3")
    r = resultant(f, f.deriv("y"), "y")
    # Res_y(y^2 - x^3, 2y) = -4 x^3
    assert r.terms == {(3, 0): -4}


def test_squarefree_decompose():
    f = parse_poly("y^2 - x^3")
    g = f * f * parse_poly("y - x")
    cof, parts = squarefree_decompose(g, "y")
    got = sorted((m, p.deg("y")) for p, m in parts)
    assert got == [(1, 1), (2, 2)]
    # the cofactor carries no y and the parts rebuild g
    assert cof.deg("y") == 0
    rebuilt = cof
    for p, m in parts:
        rebuilt = rebuilt * p ** m
    assert rebuilt.terms == g.terms


# ---------------------------------------------------------------------------
# complex roots


def test_complex_roots_exact_rational():
    # (w-1)(w+2)^2, lowest first: w^3 + 3w^2 - 4
    p = [Fraction(-4), Fraction(0), Fraction(3), Fraction(1)]
    roots = complex_roots(p, Ctx())
    got = sorted((str(r), m) for r, m in roots)
    assert got == [("-2", 2), ("1", 1)]


def test_complex_roots_exact_quadratic_radical():
    # w^2 - 6
    roots = complex_roots([Fraction(-6), 0, Fraction(1)], Ctx())
    vals = {render_coeff(r) for r, _ in roots}
    assert vals == {"sqrt(6)", "-sqrt(6)"}


def test_complex_roots_residual_tracks_precision():
    # w^3 - 2 has no exact representation here; the numeric roots must be
    # accurate at the requested precision, not at the interpreter default
    p = [Fraction(-2), 0, 0, Fraction(1)]
    for prec in (128, 256, 512):
        ctx = Ctx(prec=prec)
        roots = complex_roots(p, ctx)
        assert len(roots) == 3
        with ctx.workprec():
            for r, m in roots:
                assert m == 1
                res = abs(cto_mpc(r) ** 3 - 2)
                assert res < mpmath.ldexp(1, -(prec - 12))


def test_newton_polish_refines():
    p = [Fraction(-2), 0, 0, Fraction(1)]
    with mpmath.workprec(256):
        z0 = mpmath.mpc(mpmath.mpf("1.26"), 0)
        z = newton_polish(p, z0)
        assert abs(z ** 3 - 2) < mpmath.ldexp(1, -200)

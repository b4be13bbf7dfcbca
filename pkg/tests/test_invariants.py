"""Semigroups, Milnor/Tjurina numbers, Zariski invariant, intersections."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from math import gcd

import pytest

from _jet import tau_jet
from discurve.bipoly import parse_poly
from discurve.coeffs import Ctx
from discurve.errors import InvalidInput
from discurve.invariants import (
    characteristic_exponents,
    intersection_number,
    intersection_with_param,
    milnor,
    milnor_from_semigroup,
    semigroup,
    semigroup_from_char,
    semigroup_oracle,
    tjurina,
    zariski_invariant,
)
from discurve.puiseux import Parametrization, implicitize


def _par(n, *terms):
    return Parametrization.make(n, {e: Fraction(1) for e in terms})


def test_characteristic_exponents():
    assert characteristic_exponents(_par(4, 6, 7)) == (4, 6, 7)
    assert characteristic_exponents(_par(2, 5)) == (2, 5)
    assert characteristic_exponents(_par(6, 8, 9)) == (6, 8, 9)
    # t^9 is in <4,6> + higher, so it is not characteristic
    assert characteristic_exponents(_par(4, 6, 7, 9)) == (4, 6, 7)


def test_semigroup_from_char_knowns():
    sg = semigroup_from_char((4, 6, 7))
    assert sg.generators == (4, 6, 13)
    assert sg.conductor == 16 and sg.milnor == 16
    assert sg.delta == 8 and sg.genus == 2 and sg.multiplicity == 4
    sg = semigroup_from_char((6, 8, 9))
    assert sg.generators == (6, 8, 25) and sg.conductor == 36
    sg = semigroup_from_char((2, 5))
    assert sg.generators == (2, 5) and sg.conductor == 4


def test_semigroup_from_char_rejects_bad_sequences():
    with pytest.raises(InvalidInput):
        semigroup_from_char((4, 6))  # gcd chain never reaches 1
    with pytest.raises(InvalidInput):
        semigroup_from_char((4, 7, 6))
    with pytest.raises(InvalidInput):
        semigroup_from_char((0, 3))


def _sg_elements(gens, bound):
    els = {0}
    for g in gens:
        for v in sorted(els):
            w = v + g
            while w < bound:
                els.add(w)
                w += g
    return {v for v in els if v < bound}


def test_recursion_matches_valuation_oracle_seeded():
    rng = random.Random(41)
    seen = 0
    while seen < 12:
        n = rng.choice([2, 3, 4, 5, 6])
        beta = [n, rng.randint(n + 1, 3 * n)]
        while reduce(gcd, beta) != 1 and len(beta) < 4:
            beta.append(beta[-1] + rng.randint(1, 5))
        try:
            sg = semigroup_from_char(tuple(beta))
        except InvalidInput:
            continue  # sampled sequence is not characteristic; resample
        par = _par(n, *beta[1:])
        vals, bound = semigroup_oracle(par)
        assert set(vals) == _sg_elements(sg.generators, bound)
        seen += 1


def test_milnor_methods_agree_on_knowns():
    cases = {
        "y^2 - x^3": 2,
        "y^2 - x^5": 4,
        "y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7": 16,
    }
    for text, mu in cases.items():
        f = parse_poly(text)
        assert milnor(f, "resultant") == mu
        assert milnor(f, "polar") == mu


def test_milnor_equals_conductor():
    for par in (_par(4, 6, 7), _par(3, 7, 8), _par(6, 8, 9)):
        f = implicitize(par)
        assert milnor(f, "resultant") == semigroup(par).conductor


def test_tjurina_knowns():
    assert tjurina(_par(4, 6, 7)) == 14
    assert tjurina(_par(3, 7, 8)) == 11
    assert tjurina(_par(3, 7)) == 12  # quasi-homogeneous: tau = mu


def test_tjurina_requires_a_branch():
    # y^3 + x^2 y - x^4 splits into three smooth branches at 0
    g = parse_poly("y^3 - x^4 + x^2*y")
    with pytest.raises(InvalidInput):
        tjurina(g)
    # mu and tau are still defined for the multi-branch germ
    assert milnor(g, "resultant") == 4
    assert tau_jet(g) == 4


def test_jet_oracle_cross_checks():
    assert tau_jet(implicitize(_par(4, 6, 7))) == 14
    assert tau_jet(implicitize(_par(3, 7, 8))) == 11
    assert tau_jet(implicitize(_par(3, 7))) == 12


def test_zariski_invariant_knowns():
    assert zariski_invariant(_par(3, 7, 8)) == 8
    assert zariski_invariant(_par(4, 5, 7)) == 7
    assert zariski_invariant(_par(3, 7)) is None
    assert zariski_invariant(_par(2, 9)) is None


def test_intersection_knowns():
    a = parse_poly("y^2 - x^3")
    b = parse_poly("y^3 - x^2")
    assert intersection_number(a, b, "hz") == 4
    assert intersection_number(a, b, "resultant") == 4
    par = _par(2, 3)
    assert intersection_with_param(par, parse_poly("y^2 - x^5")) == 6


def test_intersection_methods_agree_seeded():
    rng = random.Random(977)
    pars = []
    while len(pars) < 6:
        n = rng.choice([2, 3])
        a = rng.randint(n + 1, 3 * n)
        if gcd(n, a) != 1:
            continue
        b = a + rng.randint(1, 3)
        par = Parametrization.make(
            n, {a: Fraction(rng.randint(1, 3)), b: Fraction(rng.randint(0, 2))})
        if par not in pars:
            pars.append(par)
    curves = [implicitize(p) for p in pars]
    ctx = Ctx()
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if curves[i].terms == curves[j].terms:
                continue
            hz = intersection_number(curves[i], curves[j], "hz", ctx)
            rs = intersection_number(curves[i], curves[j], "resultant", ctx)
            assert hz == rs


def test_gap_count_formula_for_two_generators():
    # q = c/2 - s1 + floor(s1/s0) + 1 for <s0, s1>, s0 > 2
    rng = random.Random(5)
    checked = 0
    while checked < 10:
        s0 = rng.randint(3, 7)
        s1 = rng.randint(s0 + 1, 4 * s0)
        if gcd(s0, s1) != 1:
            continue
        sg = semigroup_from_char((s0, s1))
        assert sg.q == sg.conductor // 2 - s1 + s1 // s0 + 1
        checked += 1
    assert semigroup_from_char((5, 7)).q == 7
    assert semigroup_from_char((3, 7)).q == 2


def test_milnor_from_semigroup():
    assert milnor_from_semigroup(semigroup_from_char((4, 6, 7))) == 16
    assert milnor_from_semigroup(semigroup_from_char((2, 5))) == 4

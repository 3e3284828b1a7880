"""Buchberger, normal forms, footprints, Buchberger-Moller."""

import random
from itertools import product

import pytest

from gagcodes.gf import make_field
from gagcodes.groebner import (
    buchberger,
    buchberger_moller,
    footprint,
    reduce_poly,
)
from gagcodes.polyring import (
    Poly,
    WeightedOrder,
    evaluate,
    mono_divides,
    parse_poly,
)


def _spoly_reductions_vanish(gb):
    from gagcodes.groebner import _spoly

    polys = gb.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = _spoly(polys[i], polys[j])
            assert reduce_poly(s, list(polys)).is_zero


def _is_reduced(gb):
    for i, g in enumerate(gb.polys):
        assert g.lc().enc == 1
        for m in g.terms:
            for j, h in enumerate(gb.polys):
                if i == j:
                    continue
                assert not mono_divides(h.lm(), m)


def test_sextic_curve_basis(curve56):
    f4, order = curve56.field, curve56.order
    expected = {
        parse_poly("Y^2+X^3+Y", f4, order),
        parse_poly("X*Y^2+X*Y+X", f4, order),
        parse_poly("Y^4+Y", f4, order),
    }
    assert set(curve56.gb_base.polys) == expected
    _is_reduced(curve56.gb_base)
    _spoly_reductions_vanish(curve56.gb_base)


def test_principal_monomial_ideal():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    gb = buchberger([parse_poly("X", f4, order)])
    assert [str(g) for g in gb.polys] == ["X"]


def test_empty_and_zero_generators():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    with pytest.raises(ValueError):
        buchberger([])
    with pytest.raises(ValueError):
        buchberger([Poly.zero(f4, order)])


def test_basis_size_cap():
    from gagcodes.errors import ResourceCapError

    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    gens = [parse_poly(s, f4, order) for s in ("X^6+Y^5+Y", "X^4+X", "Y^4+Y")]
    with pytest.raises(ResourceCapError):
        buchberger(gens, cap=3)  # completion needs more than the three inputs


def _random_ideal_with_field_equations(rng, fld, order):
    gens = []
    for _ in range(rng.randrange(1, 3)):
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            mono = (rng.randrange(3), rng.randrange(3))
            terms[mono] = fld.element(rng.randrange(1, fld.q))
        if terms:
            gens.append(Poly(fld, order, terms))
    q = fld.q
    gens.append(Poly(fld, order, {(q, 0): fld.one, (1, 0): -fld.one}))
    gens.append(Poly(fld, order, {(0, q): fld.one, (0, 1): -fld.one}))
    return gens


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1)])
def test_random_zero_dimensional_ideals(p, k):
    fld = make_field(p, k)
    order = WeightedOrder(["X", "Y"], [2, 3])
    rng = random.Random(100 * p)
    for _ in range(8):
        gens = _random_ideal_with_field_equations(rng, fld, order)
        gb = buchberger(gens)
        for g in gens:
            assert gb.normal_form(g).is_zero
        _is_reduced(gb)
        _spoly_reductions_vanish(gb)
        fp = footprint(gb)
        assert fp.finite
        # footprint size equals the number of points (ideal is radical:
        # it contains the field equations); count by brute force
        count = 0
        for pt in product(list(fld.elements()), repeat=2):
            if all(evaluate(g, pt).enc == 0 for g in gens):
                count += 1
        assert len(fp) == count


def test_normal_form_properties(curve56):
    f4, order, gb = curve56.field, curve56.order, curve56.gb_base
    # membership
    gen = curve56.generator
    assert gb.normal_form(gen).is_zero
    # X^3 reduces to Y^2 + Y
    nf = gb.normal_form(parse_poly("X^3", f4, order))
    assert nf == parse_poly("Y^2+Y", f4, order)
    # re-multiplication check: X^3 - NF(X^3) is in the ideal
    diff = parse_poly("X^3", f4, order) - nf
    assert gb.normal_form(diff).is_zero
    rng = random.Random(23)
    for _ in range(30):
        terms = {
            (rng.randrange(7), rng.randrange(6)): f4.element(rng.randrange(1, 4))
            for _ in range(rng.randrange(1, 5))
        }
        f = Poly(f4, order, terms)
        g = Poly(
            f4, order,
            {(rng.randrange(7), rng.randrange(6)): f4.element(rng.randrange(1, 4))},
        )
        nf_f = gb.normal_form(f)
        # idempotent, linear, supported on the footprint
        assert gb.normal_form(nf_f) == nf_f
        assert gb.normal_form(f + g) == nf_f + gb.normal_form(g)
        fp = curve56.fp_base
        assert all(m in fp.monomials for m in nf_f.terms)


def test_footprint_of_base_ideal(curve56):
    fp = curve56.fp_base
    order = curve56.order
    names = [order.format_mono(m) for m in fp.monomials]
    assert names == ["1", "X", "Y", "X^2", "X*Y", "Y^2", "X^2*Y", "Y^3"]
    assert fp.weights == (0, 5, 6, 10, 11, 12, 16, 18)
    # downward closed under divisibility
    for m in fp.monomials:
        for i in range(2):
            if m[i] > 0:
                divisor = tuple(e - (1 if j == i else 0) for j, e in enumerate(m))
                assert divisor in fp.monomials


def test_footprint_of_hermitian_base_ideal(hermitian):
    order = hermitian.order
    names = [order.format_mono(m) for m in hermitian.fp_base.monomials]
    assert names == ["1", "X", "Y", "X^2", "X*Y", "Y^2", "X^2*Y", "Y^3"]
    assert hermitian.fp_base.weights == (0, 2, 3, 4, 5, 6, 7, 9)


def test_footprint_maximal_ideal():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    gb = buchberger([parse_poly(s, f4, order) for s in ("X", "Y")])
    fp = footprint(gb)
    assert fp.monomials == ((0, 0),)


def test_footprint_infinite(curve56):
    fp = curve56.fp_generic
    assert not fp.finite
    assert fp.monomials is None
    with pytest.raises(ValueError):
        len(fp)
    small = fp.up_to_weight(12)
    assert [curve56.order.format_mono(m) for m in small] == [
        "1", "X", "Y", "X^2", "X*Y", "Y^2",
    ]
    assert fp.monomial_of_weight(10) == (2, 0)
    with pytest.raises(ValueError):
        fp.monomial_of_weight(1)


def test_buchberger_moller_nine_points(curve56):
    fp = footprint(curve56.gb_points)
    order = curve56.order
    assert [order.format_mono(m) for m in fp.monomials] == [
        "1", "X", "Y", "X^2", "X*Y", "Y^2", "X^3", "X^2*Y", "Y^3",
    ]
    assert fp.weights == (0, 5, 6, 10, 11, 12, 15, 16, 18)
    _is_reduced(curve56.gb_points)
    _spoly_reductions_vanish(curve56.gb_points)
    for g in curve56.gb_points.polys:
        for pt in curve56.selection.comp_points():
            assert evaluate(g, pt).enc == 0


def test_buchberger_moller_single_point():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    gb = buchberger_moller([(f4.zero, f4.zero)], order)
    assert sorted(str(g) for g in gb.polys) == ["X", "Y"]
    assert footprint(gb).monomials == ((0, 0),)


def test_buchberger_moller_random_sweeps():
    f8 = make_field(2, 3)
    order = WeightedOrder(["X", "Y"], [2, 3])
    rng = random.Random(31)
    elems = list(f8.elements())
    for _ in range(20):
        count = rng.randrange(1, 9)
        encs = rng.sample(range(64), count)
        pts = [(elems[e // 8], elems[e % 8]) for e in encs]
        gb = buchberger_moller(pts, order)
        fp = footprint(gb)
        assert len(fp) == count
        for g in gb.polys:
            for pt in pts:
                assert evaluate(g, pt).enc == 0
        _is_reduced(gb)


def test_buchberger_moller_matches_buchberger_on_full_variety(curve56_rational):
    # vanishing ideal of all rational points = the base ideal (it is
    # radical), so the two algorithms must produce the identical basis
    c = curve56_rational
    assert set(c.gb_points.polys) == set(c.gb_base.polys)
    assert c.gb_points.provenance == "buchberger_moller"


def test_buchberger_moller_duplicate_points():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    pt = (f4.zero, f4.one)
    with pytest.raises(ValueError):
        buchberger_moller([pt, pt], order)

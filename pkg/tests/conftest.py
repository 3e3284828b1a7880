"""Shared fixtures: the two curve test beds, built once per session."""

from types import SimpleNamespace

import pytest

from gagcodes import (
    WeightedOrder,
    buchberger,
    buchberger_moller,
    check_order_domain,
    delta_sequence,
    footprint,
    gamma_from_footprint,
    make_field,
    parse_poly,
    select_points,
)
from gagcodes.codes import default_inner_codes


def _curve(generator_text, weights, extra=()):
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], weights)
    gen = parse_poly(generator_text, f4, order)
    gb_generic = buchberger([gen])
    fp_generic = footprint(gb_generic)
    diagnosis = check_order_domain(gb_generic, fp_generic)
    gamma = gamma_from_footprint(fp_generic)
    field_eqs = [parse_poly("X^4+X", f4, order), parse_poly("Y^4+Y", f4, order)]
    gb_base = buchberger([gen] + field_eqs)
    fp_base = footprint(gb_base)
    selection = select_points(gb_generic, "all", extra)
    gb_points = buchberger_moller(selection.comp_points(), order)
    fp_points = footprint(gb_points)
    dseq = delta_sequence(fp_generic, gamma, selection)
    return SimpleNamespace(
        field=f4,
        order=order,
        generator=gen,
        gb_generic=gb_generic,
        fp_generic=fp_generic,
        diagnosis=diagnosis,
        gamma=gamma,
        gb_base=gb_base,
        fp_base=fp_base,
        selection=selection,
        gb_points=gb_points,
        fp_points=fp_points,
        dseq=dseq,
        identity_inners=default_inner_codes(selection),
    )


@pytest.fixture(scope="session")
def curve56():
    """X^6 + Y^5 + Y over GF(4), w = (5, 6); 8 rational points plus the
    degree-3 closed point at index 0."""
    return _curve("X^6+Y^5+Y", [5, 6], extra=[(3, 0)])


@pytest.fixture(scope="session")
def curve56_rational():
    """Same curve, rational points only."""
    return _curve("X^6+Y^5+Y", [5, 6])


@pytest.fixture(scope="session")
def hermitian():
    """X^3 + Y^2 + Y over GF(4), w = (2, 3); all 8 rational points."""
    return _curve("X^3+Y^2+Y", [2, 3])


@pytest.fixture(scope="session")
def hermitian_ext():
    """Hermitian curve with one degree-3 point adjoined."""
    return _curve("X^3+Y^2+Y", [2, 3], extra=[(3, 0)])

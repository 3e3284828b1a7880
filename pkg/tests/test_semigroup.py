"""Semigroups, sigma counts, shifted gaps, order-domain diagnosis."""

import random

import pytest

from gagcodes.gf import make_field
from gagcodes.groebner import buchberger, footprint
from gagcodes.polyring import WeightedOrder, parse_poly
from gagcodes.semigroup import (
    Semigroup,
    check_order_domain,
    gamma_from_footprint,
    gap_count_shift,
    sigma,
)


def test_gamma_of_sextic_curve(curve56):
    gamma = curve56.gamma
    assert gamma.generators == (5, 6)
    assert gamma.gaps == (1, 2, 3, 4, 7, 8, 9, 13, 14, 19)
    assert gamma.genus == 10
    assert gamma.conductor == 20


def test_gamma_of_hermitian(hermitian):
    gamma = hermitian.gamma
    assert gamma.generators == (2, 3)
    assert gamma.gaps == (1,)
    assert gamma.genus == 1


def test_free_semigroup():
    n0 = Semigroup([1])
    assert n0.gaps == ()
    assert n0.genus == 0
    assert n0.conductor == 0
    assert all(n0.contains(x) for x in range(50))


def test_random_pairs_gap_count_formula():
    # genus of <a, b> with gcd 1 is (a-1)(b-1)/2; check the sieve against
    # an independent double-loop enumeration as well
    rng = random.Random(41)
    import math

    tried = 0
    while tried < 15:
        a, b = rng.randrange(2, 12), rng.randrange(2, 12)
        if a == b or math.gcd(a, b) != 1:
            continue
        tried += 1
        sg = Semigroup([a, b])
        assert sg.genus == (a - 1) * (b - 1) // 2
        bound = a * b
        reachable = {i * a + j * b for i in range(bound) for j in range(bound)}
        gaps = tuple(x for x in range(bound) if x not in reachable)
        assert sg.gaps == gaps


def test_negative_generators_rejected():
    with pytest.raises(ValueError):
        Semigroup([5, -6])
    with pytest.raises(ValueError):
        Semigroup([(1, 0), (0, -1)])


def test_membership_and_gcd():
    sg = Semigroup([4, 6])  # gcd 2, infinitely many gaps
    assert sg.gcd == 2
    assert sg.gaps is None and sg.genus is None
    assert sg.contains(10) and not sg.contains(8 + 1)
    assert not sg.contains(2)
    assert sg.contains(0)
    empty = Semigroup([])
    assert empty.contains(0) and not empty.contains(1)


def test_vector_semigroup_membership():
    sg = Semigroup([(1, 0), (0, 1)])
    assert sg.r == 2
    assert sg.contains((3, 2))
    sg2 = Semigroup([(2, 0), (0, 2)])
    assert not sg2.contains((1, 1))
    assert sg2.contains((4, 2))
    with pytest.raises(ValueError):
        Semigroup([5, (2, 3)])


def test_sigma_fixture_values():
    gamma = Semigroup([5, 6])
    dw = (0, 5, 6, 10, 11, 12, 15, 16, 18)
    assert sigma(0, dw, gamma) == 9
    assert sigma(5, dw, gamma) == 5
    assert sigma(6, dw, gamma) == 5
    assert min(sigma(w, dw, gamma) for w in (0, 5, 6)) == 5
    with pytest.raises(ValueError):
        sigma(7, dw, gamma)


def test_sigma_qualifying_sets():
    gamma = Semigroup([5, 6])
    dw = (0, 5, 6, 10, 11, 12, 15, 16, 18)
    qual5 = [eta for eta in dw if eta - 5 >= 0 and gamma.contains(eta - 5)]
    assert qual5 == [5, 10, 11, 15, 16]
    qual6 = [eta for eta in dw if eta - 6 >= 0 and gamma.contains(eta - 6)]
    assert qual6 == [6, 11, 12, 16, 18]


def test_gap_count_shift_examples():
    g56 = Semigroup([5, 6])
    assert gap_count_shift(g56, 5) == 5
    shifted_out = [g for g in g56.elements_up_to(25) if not g56.contains(g - 5)]
    assert shifted_out == [0, 6, 12, 18, 24]
    assert gap_count_shift(g56, 0) == 0
    assert gap_count_shift(Semigroup([1]), 7) == 7
    with pytest.raises(ValueError):
        gap_count_shift(g56, 7)  # 7 is a gap
    with pytest.raises(ValueError):
        gap_count_shift(Semigroup([4, 6]), 4)  # infinitely many gaps


@pytest.mark.parametrize("gens", [(5, 6), (2, 3), (3, 5), (4, 7)])
def test_shifted_gap_lemma(gens):
    sg = Semigroup(gens)
    for lam in sg.elements_up_to(sg.conductor + 20):
        assert gap_count_shift(sg, lam) == lam


def test_order_domain_satisfied(curve56, hermitian):
    for c in (curve56, hermitian):
        assert c.diagnosis.satisfied
        assert c.diagnosis.exhaustive
    assert "satisfied" in curve56.diagnosis.describe()


def test_order_domain_affine_line():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [1, 2])
    gb = buchberger([parse_poly("Y+X^2", f4, order)])
    diag = check_order_domain(gb, footprint(gb))
    assert diag.satisfied


def test_order_domain_equal_weights_fail():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [1, 1])
    gb = buchberger([parse_poly("X^3+Y^3+X*Y", f4, order)])
    fp = footprint(gb)
    diag = check_order_domain(gb, fp)
    assert not diag.satisfied
    m1, m2 = diag.colliding_pair
    # witness soundness: both standard, same weight, distinct
    assert m1 != m2
    assert order.weight(m1) == order.weight(m2)
    assert fp.is_standard(m1) and fp.is_standard(m2)
    assert {m1, m2} == {(1, 0), (0, 1)}


def test_order_domain_condition_one_fail():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [5, 6])
    gb = buchberger([parse_poly("X^2+X+1", f4, order)])  # one top monomial
    diag = check_order_domain(gb, footprint(gb))
    assert not diag.satisfied
    g = diag.failing_generator
    weights = [order.weight(m) for m in g.terms]
    assert weights.count(max(weights)) != 2


def test_order_domain_pure_power_collision_in_window():
    # weights (2, 3) on an ideal whose footprint keeps X^3 and Y^2:
    # the collision at weight 6 must be caught even though it sits
    # beyond twice the conductor of the candidate semigroup
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [2, 3])
    gb = buchberger([parse_poly("X^4+X*Y^2+1", f4, order)])
    diag = check_order_domain(gb, footprint(gb))
    assert not diag.satisfied
    assert tuple(sorted(diag.colliding_pair)) == ((0, 2), (3, 0))


def test_gamma_from_finite_footprint():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [2, 3])
    gb = buchberger([parse_poly(s, f4, order) for s in ("X^3", "Y^2")])
    fp = footprint(gb)
    sg = gamma_from_footprint(fp)
    # weights are {0,2,3,4,5,7}: greedy generators
    assert sg.generators == (2, 3)


def test_sigma_vector_weights():
    gamma = Semigroup([(1, 0), (0, 1)])
    dw = ((0, 0), (1, 0), (0, 1), (2, 1))
    assert sigma((0, 0), dw, gamma) == 4
    assert sigma((1, 0), dw, gamma) == 2  # (1,0) and (2,1)


def test_order_domain_vector_weights_box():
    f4 = make_field(2, 2)
    # w(X) = (1,0), w(Y) = (2,0): X^2 and Y tie at the top of the generator
    order = WeightedOrder(["X", "Y"], [(1, 0), (2, 0)])
    gb = buchberger([parse_poly("X^2+Y+1", f4, order)])
    diag = check_order_domain(gb, footprint(gb))
    assert diag.satisfied
    assert not diag.exhaustive  # verified inside a finite weight box
    # equal vector weights on two variables collide inside the box
    order2 = WeightedOrder(["X", "Y"], [(1, 1), (1, 1)])
    gb2 = buchberger([parse_poly("X^2+X*Y+1", f4, order2)])
    diag2 = check_order_domain(gb2, footprint(gb2))
    assert not diag2.satisfied
    assert diag2.colliding_pair is not None


def test_gamma_from_finite_footprint_vector_weights():
    f4 = make_field(2, 2)
    order = WeightedOrder(["X", "Y"], [(1, 0), (0, 1)])
    gb = buchberger([parse_poly(s, f4, order) for s in ("X^2", "Y^2")])
    sg = gamma_from_footprint(footprint(gb))
    assert sg.r == 2
    assert set(sg.generators) == {(1, 0), (0, 1)}

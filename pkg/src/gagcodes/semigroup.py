"""Weight semigroups, sigma counts, and the order-domain condition check.

The numerical case (scalar weights, gcd of generators 1) carries the
full machinery: element table, gaps, genus, conductor.  Vector weights
are supported structurally (membership by bounded search) as the code
constructions only require scalar weights in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _sieve(gens, bound):
    reach = bytearray(bound + 1)
    reach[0] = 1
    for g in gens:
        for i in range(g, bound + 1):
            if reach[i - g]:
                reach[i] = 1
    return reach


class Semigroup:
    """Additive semigroup of N_0^r generated by a finite set, 0 included."""

    def __init__(self, generators):
        gens = []
        scalar = True
        for g in generators:
            if isinstance(g, int):
                gens.append(g)
            else:
                v = tuple(int(c) for c in g)
                if len(v) == 1:
                    gens.append(v[0])
                else:
                    gens.append(v)
                    scalar = False
        if not scalar and any(isinstance(g, int) for g in gens):
            raise ValueError("cannot mix scalar and vector generators")
        self.r = 1 if scalar else len(next(g for g in gens if not isinstance(g, int)))
        if scalar:
            if any(g < 0 for g in gens):
                raise ValueError("generators must be nonnegative")
            self.generators = tuple(sorted({g for g in gens if g > 0}))
            self._init_scalar()
        else:
            if any(len(g) != self.r for g in gens):
                raise ValueError("generator vectors must share one length")
            if any(c < 0 for g in gens for c in g):
                raise ValueError("generators must be nonnegative")
            gens = sorted({g for g in gens if any(c > 0 for c in g)})
            self.generators = tuple(gens)
            self._member_cache = {(0,) * self.r: True}
            self.gcd = None
            self.conductor = None
            self.gaps = None

    def _init_scalar(self):
        gens = self.generators
        if not gens:
            self.gcd = 0
            self.conductor = None
            self.gaps = None
            self._reach = bytearray((1,))
            return
        d = 0
        for g in gens:
            d = math.gcd(d, g)
        self.gcd = d
        if d == 1:
            bound = gens[0] * gens[-1] + 1
            self._reach = _sieve(gens, bound)
            gaps = [i for i in range(bound + 1) if not self._reach[i]]
            self.gaps = tuple(gaps)
            self.conductor = (gaps[-1] + 1) if gaps else 0
        else:
            self._scaled = Semigroup([g // d for g in gens])
            self.conductor = None
            self.gaps = None

    @property
    def genus(self):
        """Gap count; defined only for numerical semigroups with gcd 1."""
        if self.gaps is None:
            return None
        return len(self.gaps)

    def contains(self, x):
        if self.r > 1:
            return self._contains_vector(tuple(x))
        if not isinstance(x, int):
            if len(x) != 1:
                return False
            x = x[0]
        if x < 0:
            return False
        if not self.generators:
            return x == 0
        if self.gcd == 1:
            if x >= self.conductor:
                return True
            return bool(self._reach[x])
        if x % self.gcd != 0:
            return False
        return self._scaled.contains(x // self.gcd)

    def _contains_vector(self, v):
        if any(c < 0 for c in v):
            return False
        cached = self._member_cache.get(v)
        if cached is not None:
            return cached
        result = False
        for g in self.generators:
            if all(a >= b for a, b in zip(v, g)):
                if self._contains_vector(tuple(a - b for a, b in zip(v, g))):
                    result = True
                    break
        self._member_cache[v] = result
        return result

    def elements_up_to(self, bound):
        """Sorted elements <= bound (scalar semigroups only)."""
        if self.r > 1:
            raise ValueError("element enumeration needs a scalar semigroup")
        return [x for x in range(bound + 1) if self.contains(x)]

    def __contains__(self, x):
        return self.contains(x)

    def __repr__(self):
        return f"Semigroup{self.generators}"


def _extract_generators(weights):
    """Greedy minimal generators from a sorted, downward-complete window."""
    weights = sorted(set(weights))
    if not weights or weights[0] != 0:
        raise ValueError("weight window must contain 0")
    bound = weights[-1]
    reach = bytearray(bound + 1)
    reach[0] = 1
    gens = []
    for w in weights[1:]:
        if reach[w]:
            continue
        gens.append(w)
        for i in range(w, bound + 1):
            if reach[i - w]:
                reach[i] = 1
    return gens


def gamma_from_footprint(fp, max_window=1 << 20):
    """Weight semigroup of a generic-ideal footprint (scalar weights).

    Enumerates standard-monomial weights over a growing window, extracts
    minimal generators greedily, and stops once the window provably
    contains every minimal generator (all generators lie below
    conductor + multiplicity for gcd-1 numerical semigroups).
    """
    order = fp.order
    if order.r != 1:
        if not fp.finite:
            raise ValueError("vector-weight semigroup extraction needs a finite footprint")
        gens = []
        for w in sorted(set(fp.weights), key=lambda v: (sum(v), v)):
            if all(c == 0 for c in w):
                continue
            if gens and Semigroup(gens).contains(w):
                continue
            gens.append(w)
        return Semigroup(gens if gens else [(0,) * order.r])
    if fp.finite:
        weights = sorted(set(fp.weights))
        return Semigroup(_extract_generators(weights))
    maxw = max(order.var_weight(i) for i in range(order.num_vars))
    bound = max(4 * maxw * maxw, 64)
    while bound <= max_window:
        weights = sorted({order.weight(m) for m in fp.up_to_weight(bound)})
        gens = _extract_generators(weights)
        if not gens:
            raise ValueError("no nonzero standard-monomial weights found")
        sg = Semigroup(gens)
        # every minimal generator lies below conductor + multiplicity, so a
        # window past that certifies completeness (scaled by gcd if needed)
        if sg.gcd == 1:
            if sg.conductor + gens[0] <= bound:
                return sg
        else:
            scaled = sg._scaled
            if (scaled.conductor + scaled.generators[0]) * sg.gcd <= bound:
                return sg
        bound *= 2
    raise ValueError("semigroup generator window exceeded cap")


def sigma(lam, delta_weights, gamma):
    """Count of eta in delta_weights with eta - lam in gamma.

    lam must itself belong to delta_weights.
    """
    weights = list(delta_weights)
    if lam not in weights:
        raise ValueError(f"{lam} is not a footprint weight")
    count = 0
    for eta in weights:
        if gamma.r > 1:
            diff = tuple(a - b for a, b in zip(eta, lam))
            if any(c < 0 for c in diff):
                continue
        else:
            diff = eta - lam
            if diff < 0:
                continue
        if gamma.contains(diff):
            count += 1
    return count


def gap_count_shift(gamma, lam):
    """Size of Gamma \\ (lam + Gamma) for a numerical semigroup.

    Enumerates up to conductor + lam; the result equals lam whenever
    gamma has finitely many gaps.
    """
    if gamma.r > 1:
        raise ValueError("defined for numerical semigroups only")
    if gamma.gaps is None:
        raise ValueError("semigroup has infinitely many gaps")
    if not gamma.contains(lam):
        raise ValueError(f"{lam} is not in the semigroup")
    count = 0
    for g in gamma.elements_up_to(lam + gamma.conductor - 1 if gamma.conductor else lam):
        if not gamma.contains(g - lam):
            count += 1
    return count


@dataclass
class OrderDomainDiagnosis:
    """Outcome of the two order-domain conditions, with witnesses.

    exhaustive is False when condition (ii) was only verified below
    checked_weight_bound (more than two variables with an infinite
    footprint, or vector weights over a finite box).
    """

    satisfied: bool
    failing_generator: object = None
    colliding_pair: object = None
    checked_weight_bound: object = None
    exhaustive: bool = True
    order: object = None

    def describe(self):
        if self.satisfied:
            scope = "exhaustive" if self.exhaustive else (
                f"verified up to weight {self.checked_weight_bound}"
            )
            return f"order-domain conditions satisfied ({scope})"
        if self.failing_generator is not None:
            return (
                "condition (i) fails: generator "
                f"{self.failing_generator} does not have exactly two top-weight monomials"
            )
        m1, m2 = self.colliding_pair
        if self.order is not None:
            m1, m2 = self.order.format_mono(m1), self.order.format_mono(m2)
        return f"condition (ii) fails: monomials {m1} and {m2} share a weight"


def _vector_box_monomials(fp, box):
    order = fp.order
    for i in range(order.num_vars):
        if all(c == 0 for c in order.weight_vectors[i]):
            raise ValueError("zero-weight variable: bounded enumeration impossible")
    one = order.one()
    if not fp.is_standard(one):
        return []
    seen = {one}
    stack = [one]
    while stack:
        m = stack.pop()
        for i in range(order.num_vars):
            child = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            if child in seen:
                continue
            w = order.weight_vec(child)
            if any(a > b for a, b in zip(w, box)):
                continue
            if not fp.is_standard(child):
                continue
            seen.add(child)
            stack.append(child)
    return sorted(seen, key=order.key)


def check_order_domain(gb, fp, weight_box=None):
    """Check both order-domain conditions on a generic ideal.

    Condition (i): every basis element has exactly two monomials of
    maximal weight.  Condition (ii): standard-monomial weights are
    pairwise distinct.  For finite footprints (ii) is exhaustive; for
    infinite footprints with scalar weights it is checked below a
    window that is provably sufficient for two variables (any collision
    cancels down to a pure-power pair of weight lcm(w_i, w_j)) and
    reported as bounded verification otherwise.
    """
    order = gb.order
    for g in gb.polys:
        weights = [order.weight_vec(m) for m in g.terms]
        top = max(weights)
        if weights.count(top) != 2:
            return OrderDomainDiagnosis(False, failing_generator=g, order=order)

    if fp.finite:
        monos = list(fp.monomials)
        bound = max(fp.weights) if fp.weights else 0
        exhaustive = True
    elif order.r == 1:
        var_w = [order.var_weight(i) for i in range(order.num_vars)]
        if any(w <= 0 for w in var_w):
            raise ValueError("positive variable weights required for this check")
        pair_lcm = 0
        for i in range(len(var_w)):
            for j in range(i + 1, len(var_w)):
                pair_lcm = max(pair_lcm, var_w[i] * var_w[j] // math.gcd(var_w[i], var_w[j]))
        probe = max(4 * max(var_w) * max(var_w), pair_lcm, 64)
        probe_weights = sorted({order.weight(m) for m in fp.up_to_weight(probe)})
        cand = Semigroup(_extract_generators(probe_weights)) if probe_weights else None
        conductor_part = 2 * cand.conductor if cand and cand.conductor is not None else 0
        bound = max(pair_lcm, conductor_part) + max(var_w)
        monos = fp.up_to_weight(bound)
        exhaustive = order.num_vars <= 2
    else:
        if weight_box is None:
            total = [0] * order.r
            for vec in order.weight_vectors:
                total = [a + 2 * b for a, b in zip(total, vec)]
            weight_box = tuple(max(c, 1) for c in total)
        bound = tuple(weight_box)
        monos = _vector_box_monomials(fp, bound)
        exhaustive = False

    seen = {}
    for m in monos:
        w = order.weight(m)
        if w in seen:
            pair = tuple(sorted((seen[w], m), key=order.key))
            return OrderDomainDiagnosis(
                False, colliding_pair=pair, checked_weight_bound=bound,
                exhaustive=exhaustive, order=order,
            )
        seen[w] = m
    return OrderDomainDiagnosis(
        True, checked_weight_bound=bound, exhaustive=exhaustive, order=order
    )

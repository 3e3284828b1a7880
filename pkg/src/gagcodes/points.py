"""Variety points over GF(q) and its extensions, grouped by Frobenius orbit.

Point search is exhaustive (the caps are explicit and the scale is
small), orbit representatives are the minimal coordinate-encoding
tuples, and every returned ordering is deterministic.
"""

from __future__ import annotations

import math
from itertools import product

from .errors import ResourceCapError
from .gf import build_embedding, frobenius, make_field
from .polyring import evaluate

SEARCH_CAP = 1 << 24


class EvaluationPoint:
    """A closed point: representative coordinates plus the full orbit."""

    def __init__(self, field, coords, degree, orbit, orbit_id):
        self.field = field
        self.coords = coords
        self.degree = degree
        self.orbit = orbit
        self.orbit_id = orbit_id

    def enc(self):
        return tuple(x.enc for x in self.coords)

    def __repr__(self):
        return f"EvaluationPoint(deg={self.degree}, coords={self.enc()})"


def _scan_variety(polys, field, order):
    m = order.num_vars
    if field.q ** m > SEARCH_CAP:
        raise ResourceCapError(
            f"point search space {field.q}^{m} exceeds cap 2^24"
        )
    hits = []
    elems = list(field.elements())
    for combo in product(elems, repeat=m):
        if all(evaluate(g, combo).enc == 0 for g in polys):
            hits.append(combo)
    return hits


def rational_points(gb):
    """All GF(q)-rational points of the variety, sorted by encoding."""
    return _scan_variety(gb.polys, gb.field, gb.order)


def variety_over_extension(gb, d):
    """All points over GF(q^d): returns (extension field, embedding, points)."""
    base = gb.field
    if d == 1:
        ident = build_embedding(base, base)
        return base, ident, _scan_variety(gb.polys, base, gb.order)
    ext = make_field(base.p, base.k * d)
    emb = build_embedding(base, ext)
    lifted = [g.map_coeffs(emb, ext) for g in gb.polys]
    return ext, emb, _scan_variety(lifted, ext, gb.order)


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def points_of_degree(gb, d):
    """Orbit representatives of the points of exact degree d over GF(q).

    A point has exact degree d when its coordinates generate GF(q^d):
    for every maximal proper subfield GF(q^(d/l)) at least one
    coordinate moves under the corresponding power map.
    """
    base = gb.field
    q = base.q
    ext, _, pts = variety_over_extension(gb, d)
    exact = []
    for pt in pts:
        is_exact = True
        for ell in _prime_divisors(d):
            sub_q = q ** (d // ell)
            if all((x ** sub_q) == x for x in pt):
                is_exact = False
                break
        if is_exact:
            exact.append(pt)
    seen = set()
    reps = []
    for pt in exact:
        key = tuple(x.enc for x in pt)
        if key in seen:
            continue
        orbit = [pt]
        cur = pt
        for _ in range(d - 1):
            cur = tuple(frobenius(x, q) for x in cur)
            orbit.append(cur)
        for member in orbit:
            seen.add(tuple(x.enc for x in member))
        rep = min(orbit, key=lambda p: tuple(x.enc for x in p))
        # rotate so the orbit starts at the representative
        idx = orbit.index(rep)
        orbit = orbit[idx:] + orbit[:idx]
        assert len({tuple(x.enc for x in p) for p in orbit}) == d
        reps.append((rep, tuple(orbit)))
    reps.sort(key=lambda item: tuple(x.enc for x in item[0]))
    return [
        EvaluationPoint(ext, rep, d, orbit, i)
        for i, (rep, orbit) in enumerate(reps)
    ]


class SelectedPoint:
    """One evaluation point inside a selection, lifted to the compositum."""

    def __init__(self, degree, field, coords, comp_coords, orbit):
        self.degree = degree
        self.field = field
        self.coords = coords
        self.comp_coords = comp_coords
        self.orbit = orbit

    def enc(self):
        return tuple(x.enc for x in self.coords)


class PointSelection:
    """Ordered disjoint-orbit selection with its compositum field.

    Rational points come first (by coordinate encoding), then
    higher-degree orbit representatives ordered by degree and minimal
    encoding.  The compositum has degree lcm(r_1, ..., r_h) over the
    base field; every point carries coordinates lifted there.
    """

    def __init__(self, base_field, order, points, compositum, base_embedding, degree_fields):
        self.base_field = base_field
        self.order = order
        self.points = tuple(points)
        self.compositum = compositum
        self.base_embedding = base_embedding
        self.degree_fields = degree_fields

    @property
    def degrees(self):
        return tuple(p.degree for p in self.points)

    def comp_points(self):
        return [p.comp_coords for p in self.points]

    def __len__(self):
        return len(self.points)


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def select_points(gb, rational="all", extra=()):
    """Build a PointSelection from a rational choice plus degree/index requests.

    rational: "all", or an explicit list of coordinate-encoding tuples
    (each must lie on the variety).  extra: iterable of (degree, index)
    into the deterministic enumeration of points_of_degree.
    """
    base = gb.field
    order = gb.order
    all_rational = rational_points(gb)
    if rational == "all":
        chosen_rational = all_rational
    elif rational in ("none", None):
        chosen_rational = []
    else:
        by_enc = {tuple(x.enc for x in pt): pt for pt in all_rational}
        chosen_rational = []
        seen = set()
        for enc in rational:
            enc = tuple(int(c) for c in enc)
            if enc not in by_enc:
                raise ValueError(f"{enc} is not a rational point of the variety")
            if enc in seen:
                raise ValueError(f"rational point {enc} requested twice")
            seen.add(enc)
            chosen_rational.append(by_enc[enc])
        chosen_rational.sort(key=lambda pt: tuple(x.enc for x in pt))

    requests = [(int(d), int(i)) for d, i in extra]
    if len(set(requests)) != len(requests):
        raise ValueError("orbit collision: the same closed point was requested twice")
    reps_cache = {}
    extra_points = []
    for d, i in requests:
        if d < 1:
            raise ValueError("point degree must be >= 1")
        if d == 1:
            raise ValueError("degree-1 points are selected through points.rational")
        if d not in reps_cache:
            reps_cache[d] = points_of_degree(gb, d)
        reps = reps_cache[d]
        if i < 0 or i >= len(reps):
            raise ValueError(
                f"no point of degree {d} with index {i} (found {len(reps)})"
            )
        extra_points.append(reps[i])
    extra_points.sort(key=lambda ep: (ep.degree, ep.enc()))

    degrees = [1] * len(chosen_rational) + [ep.degree for ep in extra_points]
    if not degrees:
        raise ValueError("empty point selection")
    big_r = _lcm(degrees)
    comp = base if big_r == 1 else make_field(base.p, base.k * big_r)
    base_emb = build_embedding(base, comp)
    degree_fields = {1: (base, base_emb)}
    for d in sorted({ep.degree for ep in extra_points}):
        fd = make_field(base.p, base.k * d)
        degree_fields[d] = (fd, build_embedding(fd, comp))

    selected = []
    for pt in chosen_rational:
        comp_coords = tuple(base_emb(x) for x in pt)
        selected.append(SelectedPoint(1, base, pt, comp_coords, (pt,)))
    for ep in extra_points:
        _, emb_d = degree_fields[ep.degree]
        comp_coords = tuple(emb_d(x) for x in ep.coords)
        selected.append(
            SelectedPoint(ep.degree, ep.field, ep.coords, comp_coords, ep.orbit)
        )
    return PointSelection(base, order, selected, comp, base_emb, degree_fields)

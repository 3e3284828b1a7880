"""Buchberger's algorithm, normal forms, footprints, Buchberger-Moller.

All routines are deterministic: pair selection uses the normal strategy
(minimal lcm of leading monomials under the ring order, ties by index),
bases are fully inter-reduced with unit leading coefficients, and
output is sorted by increasing leading monomial.
"""

from __future__ import annotations

import heapq

from .errors import ResourceCapError
from .polyring import Poly, mono_div, mono_divides, mono_lcm, mono_mul

BASIS_CAP = 1000


def _validate_gens(gens):
    gens = [g for g in gens]
    if not gens:
        raise ValueError("nonempty generator list required")
    field = gens[0].field
    order = gens[0].order
    for g in gens:
        if g.is_zero:
            raise ValueError("generators must be nonzero")
        if g.field != field or g.order != order:
            raise ValueError("generators must share one ring")
    return field, order


def reduce_poly(f, basis):
    """Full normal form of f against a list of nonzero polynomials."""
    if f.is_zero:
        return f
    lead = [(g.lm(), g.lc(), g) for g in basis]
    p = f
    remainder = Poly.zero(f.field, f.order)
    while not p.is_zero:
        m = p.lm()
        c = p.terms[m]
        for lmg, lcg, g in lead:
            if mono_divides(lmg, m):
                p = p - g.mul_term(mono_div(m, lmg), c / lcg)
                break
        else:
            term = Poly.monomial(f.field, f.order, m, c)
            remainder = remainder + term
            p = p - term
    return remainder


def _spoly(f, g):
    m = mono_lcm(f.lm(), g.lm())
    return f.mul_term(mono_div(m, f.lm()), f.lc().inverse()) - g.mul_term(
        mono_div(m, g.lm()), g.lc().inverse()
    )


class GroebnerBasis:
    """Reduced Groebner basis, sorted by increasing leading monomial."""

    def __init__(self, polys, provenance):
        field, order = _validate_gens(polys)
        self.field = field
        self.order = order
        self.polys = tuple(sorted(polys, key=lambda g: order.key(g.lm())))
        self.provenance = provenance

    def lead_monomials(self):
        return tuple(g.lm() for g in self.polys)

    def normal_form(self, f):
        if f.field != self.field:
            raise ValueError("polynomial field does not match basis field")
        return reduce_poly(f, self.polys)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} polys, {self.provenance})"


def _interreduce(polys):
    """Minimalize and tail-reduce a Groebner basis; returns sorted monic list."""
    order = polys[0].order
    ordered = sorted((g.monic() for g in polys), key=lambda g: order.key(g.lm()))
    minimal = []
    for g in ordered:
        if not any(mono_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            r = reduce_poly(minimal[i], others).monic()
            if r != minimal[i]:
                minimal[i] = r
                changed = True
    return minimal


def buchberger(gens, cap=BASIS_CAP):
    """Reduced Groebner basis by Buchberger's algorithm, normal strategy."""
    field, order = _validate_gens(gens)
    basis = [g.monic() for g in gens]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                order.key(mono_lcm(basis[ij[0]].lm(), basis[ij[1]].lm())),
                ij,
            ),
        )
        pairs.remove((i, j))
        lm_i, lm_j = basis[i].lm(), basis[j].lm()
        if mono_lcm(lm_i, lm_j) == mono_mul(lm_i, lm_j):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        r = reduce_poly(_spoly(basis[i], basis[j]), basis)
        if not r.is_zero:
            basis.append(r.monic())
            if len(basis) > cap:
                raise ResourceCapError(f"basis size exceeded cap {cap}")
            pairs.update((t, len(basis) - 1) for t in range(len(basis) - 1))
    return GroebnerBasis(_interreduce(basis), "buchberger")


def normal_form(f, gb):
    return gb.normal_form(f)


class Footprint:
    """Standard monomials of an ideal: those divisible by no basis lm.

    For finite footprints the monomials are listed in increasing order
    with their weights.  Infinite footprints keep only the leading
    monomials and support weight-bounded enumeration (scalar weights).
    """

    def __init__(self, order, lead_monomials, monomials=None):
        self.order = order
        self.lead_monomials = tuple(lead_monomials)
        self.finite = monomials is not None
        self.monomials = tuple(monomials) if monomials is not None else None
        self.weights = (
            tuple(order.weight(m) for m in self.monomials) if self.finite else None
        )

    def is_standard(self, mono):
        return not any(mono_divides(lm, mono) for lm in self.lead_monomials)

    def __len__(self):
        if not self.finite:
            raise ValueError("infinite footprint has no length")
        return len(self.monomials)

    def up_to_weight(self, bound):
        """Standard monomials of scalar weight <= bound, sorted.

        Requires every variable to carry positive scalar weight so the
        enumeration terminates.
        """
        order = self.order
        if order.r != 1:
            raise ValueError("weight-bounded enumeration needs scalar weights")
        if any(order.var_weight(i) <= 0 for i in range(order.num_vars)):
            raise ValueError("weight-bounded enumeration needs positive variable weights")
        one = order.one()
        if not self.is_standard(one):
            return []
        seen = {one}
        queue = [one]
        while queue:
            m = queue.pop()
            for i in range(order.num_vars):
                child = mono_mul(m, order.var(i))
                if child in seen:
                    continue
                if order.weight(child) > bound:
                    continue
                if not self.is_standard(child):
                    continue
                seen.add(child)
                queue.append(child)
        return sorted(seen, key=order.key)

    def monomial_of_weight(self, w):
        """The unique standard monomial of scalar weight w.

        Assumes footprint weights are pairwise distinct (order-domain
        condition); raises if there is no match or more than one.
        """
        if self.finite:
            hits = [m for m in self.monomials if self.order.weight(m) == w]
        else:
            hits = [m for m in self.up_to_weight(w) if self.order.weight(m) == w]
        if not hits:
            raise ValueError(f"no standard monomial of weight {w}")
        if len(hits) > 1:
            raise ValueError(f"weight {w} is not unique in the footprint")
        return hits[0]


def footprint(gb):
    """Footprint of a Groebner basis; finite iff every variable has a
    pure power among the leading monomials."""
    order = gb.order
    leads = gb.lead_monomials()
    if any(all(e == 0 for e in lm) for lm in leads):
        return Footprint(order, leads, monomials=())
    bounds = []
    for i in range(order.num_vars):
        pure = [
            lm[i]
            for lm in leads
            if lm[i] > 0 and all(e == 0 for j, e in enumerate(lm) if j != i)
        ]
        if not pure:
            return Footprint(order, leads)
        bounds.append(min(pure))
    monos = []
    stack = [(0,) * order.num_vars]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        monos.append(m)
        for i in range(order.num_vars):
            if m[i] + 1 >= bounds[i]:
                continue
            child = mono_mul(m, order.var(i))
            if child in seen:
                continue
            seen.add(child)
            stack.append(child)
    standard = [m for m in monos if not any(mono_divides(lm, m) for lm in leads)]
    standard.sort(key=order.key)
    return Footprint(order, leads, monomials=standard)


def buchberger_moller(points, order):
    """Reduced Groebner basis of the vanishing ideal of distinct points.

    Points are coordinate tuples over one field.  The footprint of the
    result has exactly one standard monomial per point.
    """
    if not points:
        raise ValueError("at least one point required")
    field = points[0][0].field
    for pt in points:
        if len(pt) != order.num_vars:
            raise ValueError("point arity does not match variable count")
        for x in pt:
            if x.field != field:
                raise ValueError("points must share one field")
    encs = [tuple(x.enc for x in pt) for pt in points]
    if len(set(encs)) != len(encs):
        raise ValueError("points must be pairwise distinct")

    def eval_mono(mono):
        out = []
        for pt in points:
            acc = field.one
            for x, e in zip(pt, mono):
                if e:
                    acc = acc * (x ** e)
            out.append(acc)
        return out

    basis_polys = []
    lead_monos = []
    fp = []
    rows = []  # (vector, pivot index, expr dict mono -> coeff)
    one = order.one()
    heap = [(order.key(one), one)]
    queued = {one}
    while heap:
        _, t = heapq.heappop(heap)
        if any(mono_divides(lm, t) for lm in lead_monos):
            continue
        vec = eval_mono(t)
        expr = {t: field.one}
        for rvec, rpiv, rexpr in rows:
            c = vec[rpiv]
            if c.enc == 0:
                continue
            factor = c / rvec[rpiv]
            vec = [a - factor * b for a, b in zip(vec, rvec)]
            for m, rc in rexpr.items():
                cur = expr.get(m, field.zero) - factor * rc
                if cur.enc == 0:
                    expr.pop(m, None)
                else:
                    expr[m] = cur
        pivot = next((idx for idx, v in enumerate(vec) if v.enc != 0), None)
        if pivot is None:
            basis_polys.append(Poly(field, order, expr))
            lead_monos.append(t)
        else:
            fp.append(t)
            rows.append((vec, pivot, expr))
            for i in range(order.num_vars):
                child = mono_mul(t, order.var(i))
                if child in queued:
                    continue
                queued.add(child)
                heapq.heappush(heap, (order.key(child), child))
    assert len(fp) == len(points)
    return GroebnerBasis(basis_polys, "buchberger_moller")

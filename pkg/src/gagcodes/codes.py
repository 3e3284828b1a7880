"""Code constructions: evaluation codes, concatenated extensions, bounds.

Families built here, all over the base field GF(q):

- affine-variety codes (rational evaluation of a function space),
- extended codes (evaluation at closed points of arbitrary degree,
  each value pushed through an inner [n_i, r_i, d_i] code),
- weight-threshold codes E(lambda) and improved codes selected by the
  sigma count, in both plain and concatenated form.

Every instance carries its applicable lower bounds on the minimum
distance (sigma/product, one-point, designed GAG distance) plus the
dimension bound of the classical parameter proposition.  The default
isomorphism GF(q^r) -> GF(q)^r is the coordinate map with respect to
the polynomial basis (1, g, ..., g^(r-1)) of the degree-r extension,
followed by the inner generator matrix; bounds do not depend on this
choice but the matrix output does, so it is pinned for
reproducibility.

One-point bounds read the threshold lambda as the degree of a divisor
supported at the place at infinity; with affine evaluation points that
support is automatically disjoint from every selected closed point,
which is assumed rather than checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iter_product

from .distoracle import exact_min_distance
from .errors import ResourceCapError
from .groebner import footprint
from .polyring import Poly, evaluate
from .semigroup import sigma


# -- linear algebra over a field (dense, small) --------------------------------

def rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(mat)):
            if mat[r][col].enc != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col].enc != 0:
                c = mat[r][col]
                mat[r] = [a - c * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return [tuple(r) for r in mat[:rank]], pivots


def row_space_key(rows):
    """Canonical fingerprint of a row space (RREF encodings)."""
    reduced, _ = rref(rows)
    return tuple(tuple(x.enc for x in r) for r in reduced)


# -- function spaces -----------------------------------------------------------

class FunctionSpace:
    """Well-behaving basis of a subspace of the residue ring.

    basis polynomials are supported on the footprint, have unit leading
    coefficients, and strictly increasing leading monomials; box is the
    set of those leading monomials (invariant of the space).
    """

    def __init__(self, basis, box, fp, gb):
        self.basis = tuple(basis)
        self.box = tuple(box)
        self.footprint = fp
        self.gb = gb
        self.dim = len(self.basis)

    @property
    def box_weights(self):
        return tuple(self.gb.order.weight(m) for m in self.box)


def well_behaving_basis(span, gb, fp=None):
    """Echelonize a spanning set over the footprint coordinates.

    Polynomials are reduced to normal form first; rows are fully
    reduced (RREF over the coordinates in decreasing monomial order),
    so the output is the canonical basis of the space.
    """
    if fp is None:
        fp = footprint(gb)
    if not fp.finite:
        raise ValueError("function spaces need a finite footprint")
    order = gb.order
    columns = sorted(fp.monomials, key=order.key, reverse=True)
    col_index = {m: i for i, m in enumerate(columns)}
    rows = []
    for f in span:
        nf = gb.normal_form(f)
        vec = [gb.field.zero] * len(columns)
        for mono, coeff in nf.terms.items():
            vec[col_index[mono]] = coeff
        rows.append(vec)
    reduced, pivots = rref(rows)
    if not reduced:
        raise ValueError("span reduces to the zero space")
    basis = []
    box = []
    for row, piv in zip(reduced, pivots):
        terms = {columns[i]: c for i, c in enumerate(row) if c.enc != 0}
        basis.append(Poly(gb.field, order, terms))
        box.append(columns[piv])
    # echelon order is decreasing leading monomial; flip to increasing
    basis.reverse()
    box.reverse()
    return FunctionSpace(basis, box, fp, gb)


def fq_poly_basis(span):
    """Canonical basis of the plain coefficient span of polynomials.

    No ideal reduction: this picks an independent spanning subset in
    the coefficient space, used to index generator-matrix rows.
    """
    if not span:
        raise ValueError("empty span")
    fld = span[0].field
    order = span[0].order
    monos = sorted({m for f in span for m in f.terms}, key=order.key, reverse=True)
    idx = {m: i for i, m in enumerate(monos)}
    rows = []
    for f in span:
        vec = [fld.zero] * len(monos)
        for m, c in f.terms.items():
            vec[idx[m]] = c
        rows.append(vec)
    reduced, _ = rref(rows)
    if not reduced:
        raise ValueError("span reduces to the zero space")
    out = []
    for row in reduced:
        out.append(Poly(fld, order, {monos[i]: c for i, c in enumerate(row) if c.enc != 0}))
    out.reverse()
    return out


# -- inner codes ---------------------------------------------------------------

class InnerCode:
    """Linear [n, r, d] code over GF(q) receiving a GF(q^r) value.

    The isomorphism is coordinates w.r.t. the polynomial basis of the
    degree-r extension followed by this generator matrix.  The declared
    distance is re-verified by full enumeration at construction.
    """

    def __init__(self, fld, matrix, distance, label):
        matrix = tuple(tuple(row) for row in matrix)
        k = len(matrix)
        n = len(matrix[0]) if matrix else 0
        if any(len(row) != n for row in matrix):
            raise ValueError("ragged inner generator matrix")
        _, pivots = rref(matrix)
        if len(pivots) != k:
            raise ValueError("inner generator matrix must have full rank")
        report = exact_min_distance(fld, matrix)
        if report.exact_distance != distance:
            raise ValueError(
                f"declared inner distance {distance} does not match the true "
                f"distance {report.exact_distance}"
            )
        self.field = fld
        self.matrix = matrix
        self.n = n
        self.k = k
        self.d = distance
        self.label = label

    @classmethod
    def identity(cls, fld, r):
        rows = [
            tuple(fld.one if i == j else fld.zero for j in range(r))
            for i in range(r)
        ]
        return cls(fld, rows, 1, f"identity[{r},{r},1]")

    @classmethod
    def parity(cls, fld, r):
        rows = [
            tuple(fld.one if i == j else fld.zero for j in range(r)) + (fld.one,)
            for i in range(r)
        ]
        return cls(fld, rows, 2, f"parity[{r + 1},{r},2]")

    @classmethod
    def from_matrix(cls, fld, rows, distance):
        elems = [
            [fld.element(int(c)) if not hasattr(c, "enc") else c for c in row]
            for row in rows
        ]
        return cls(fld, elems, distance, f"custom[{len(elems[0])},{len(elems)},{distance}]")

    def encode(self, coords):
        if len(coords) != self.k:
            raise ValueError("coordinate/dimension mismatch")
        out = [self.field.zero] * self.n
        for j, c in enumerate(coords):
            if c.enc == 0:
                continue
            row = self.matrix[j]
            for t in range(self.n):
                out[t] = out[t] + c * row[t]
        return tuple(out)

    def __repr__(self):
        return f"InnerCode({self.label})"


def default_inner_codes(selection, kind="identity"):
    fld = selection.base_field
    make = InnerCode.identity if kind == "identity" else InnerCode.parity
    return [make(fld, p.degree) for p in selection.points]


# -- the coordinate maps pi_i ---------------------------------------------------

def coordinate_tables(selection):
    """Per-degree maps from compositum encodings to GF(q)-coordinates.

    For degree d the table sends the embedded value of each element of
    GF(q^d) to its coordinate tuple over the basis (1, g, ..., g^(d-1)),
    g the polynomial-basis generator of the degree-d extension.
    """
    cached = getattr(selection, "_coord_tables", None)
    if cached is not None:
        return cached
    base = selection.base_field
    base_emb = selection.base_embedding
    tables = {}
    for d, (fld_d, emb_d) in selection.degree_fields.items():
        if d == 1:
            tables[1] = {base_emb(x).enc: (x,) for x in base.elements()}
            continue
        gen_image = emb_d(fld_d.gen)
        powers = [selection.compositum.one]
        for _ in range(d - 1):
            powers.append(powers[-1] * gen_image)
        table = {}
        for coords in iter_product(list(base.elements()), repeat=d):
            acc = selection.compositum.zero
            for c, pw in zip(coords, powers):
                if c.enc:
                    acc = acc + base_emb(c) * pw
            table[acc.enc] = coords
        if len(table) != base.q ** d:
            raise ValueError("polynomial basis failed to span the extension")
        tables[d] = table
    selection._coord_tables = tables
    return tables


def _concatenated_row(f, selection, inners, tables):
    """ev-bar of one base-field polynomial: blocks pi_i(f(P_i))."""
    base_emb = selection.base_embedding
    row = []
    for pt, inner in zip(selection.points, inners):
        value = evaluate(f, pt.comp_coords, emb=base_emb)
        coords = tables[pt.degree].get(value.enc)
        if coords is None:
            raise ValueError(
                "evaluation left the expected subfield; degree bookkeeping is wrong"
            )
        row.extend(inner.encode(coords))
    return tuple(row)


# -- code instances -------------------------------------------------------------

class CodeInstance:
    """A constructed linear code with its bounds and provenance."""

    def __init__(self, fld, n, k, matrix, construction, bounds, provenance):
        self.field = fld
        self.n = n
        self.k = k
        self.matrix = tuple(tuple(r) for r in matrix)
        self.construction = construction
        self.bounds = dict(bounds)
        self.provenance = dict(provenance)

    def matrix_encodings(self):
        return [[x.enc for x in row] for row in self.matrix]

    def __repr__(self):
        return f"CodeInstance([{self.n},{self.k}] over GF({self.field.q}), {self.construction})"


def matrix_file_text(code):
    """Documented matrix format: `n k q` then k rows of encodings."""
    lines = [f"{code.n} {code.k} {code.field.q}"]
    for row in code.matrix_encodings():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _validate_inners(selection, inners):
    if len(inners) != len(selection.points):
        raise ValueError(
            f"{len(inners)} inner codes for {len(selection.points)} points"
        )
    for pt, inner in zip(selection.points, inners):
        if inner.k != pt.degree:
            raise ValueError(
                f"inner code dimension {inner.k} does not match point degree {pt.degree}"
            )
        if inner.field != selection.base_field:
            raise ValueError("inner codes must live over the base field")


def _one_point_bounds(bounds, order, lam, selection, inners, gamma):
    """Attach h - lambda, the designed GAG distance, and related data."""
    if order.r != 1:
        return
    h = len(selection.points)
    bounds["one_point_bound"] = h - lam
    ks = [p.degree for p in selection.points]
    ds = [c.d for c in inners]
    if sum(ks) > lam:
        bounds["gag_designed"] = gag_designed_distance(lam, ks, ds)


def build_affine_variety_code(fs, selection, gamma):
    """Evaluation of a function space at rational points only.

    The sigma bound of the footprint-weight theory is attached; it is
    valid only when the points are the full variety of the function
    space's ideal, so the footprint size must equal the point count
    (evaluate subsets through the vanishing-ideal route instead).
    Rank loss (evaluation not injective on the space) is an error.
    """
    if any(p.degree != 1 for p in selection.points):
        raise ValueError("affine-variety codes evaluate at rational points only")
    base = selection.base_field
    if fs.gb.field != base:
        raise ValueError("function space must be defined over the base field")
    if len(fs.footprint) != len(selection.points):
        raise ValueError(
            f"footprint size {len(fs.footprint)} does not match point count "
            f"{len(selection.points)}; build subsets from their vanishing ideal"
        )
    rows = [
        tuple(evaluate(b, pt.coords) for pt in selection.points)
        for b in fs.basis
    ]
    _, pivots = rref(rows)
    if len(pivots) != len(rows):
        raise ValueError(
            "evaluation is not injective on the space (rank loss); "
            "the point set does not separate the footprint"
        )
    delta = min(sigma(w, fs.footprint.weights, gamma) for w in fs.box_weights)
    bounds = {"sigma_bound": delta, "inner_min": 1, "product_bound": delta}
    if fs.gb.order.r == 1:
        lam = max(fs.box_weights)
        inners = [InnerCode.identity(base, 1) for _ in selection.points]
        _one_point_bounds(bounds, fs.gb.order, lam, selection, inners, gamma)
    provenance = {
        "construction": "affine_variety",
        "space": [str(b) for b in fs.basis],
        "box_weights": list(fs.box_weights),
        "points": [list(pt.enc()) for pt in selection.points],
    }
    return CodeInstance(
        base, len(selection.points), len(rows), rows, "affine_variety", bounds, provenance
    )


def build_extended_code(span, selection, inners, gamma, gb_points):
    """Concatenated evaluation at closed points of arbitrary degree.

    span: base-field polynomials spanning the function space L.  The
    sigma bound is computed from the well-behaving basis of L over the
    compositum, modulo the vanishing ideal of the selected points; the
    generator matrix rows are the images of a base-field basis of L.
    """
    _validate_inners(selection, inners)
    base = selection.base_field
    comp = selection.compositum
    if gb_points.field != comp:
        raise ValueError("point ideal basis must live over the compositum field")
    emb = selection.base_embedding
    lifted = [f.map_coeffs(emb, comp) for f in span]
    fs = well_behaving_basis(lifted, gb_points)
    if len(fs.footprint) != len(selection.points):
        raise ValueError(
            f"footprint size {len(fs.footprint)} does not match point count "
            f"{len(selection.points)}; pass the vanishing ideal of the selection"
        )
    span_basis = fq_poly_basis(span)
    tables = coordinate_tables(selection)
    rows = [_concatenated_row(f, selection, inners, tables) for f in span_basis]
    _, pivots = rref(rows)
    if len(pivots) != len(rows):
        raise ValueError(
            "evaluation is not injective on the space (rank loss)"
        )
    d_hat = min(c.d for c in inners)
    delta = min(sigma(w, fs.footprint.weights, gamma) for w in fs.box_weights)
    bounds = {
        "sigma_bound": delta,
        "inner_min": d_hat,
        "product_bound": delta * d_hat,
    }
    if fs.gb.order.r == 1:
        lam = max(fs.box_weights)
        _one_point_bounds(bounds, fs.gb.order, lam, selection, inners, gamma)
    n = sum(c.n for c in inners)
    provenance = {
        "construction": "extended_av",
        "space": [str(b) for b in span_basis],
        "box_weights": list(fs.box_weights),
        "points": [list(pt.enc()) for pt in selection.points],
        "degrees": list(selection.degrees),
        "inner_codes": [c.label for c in inners],
    }
    return CodeInstance(base, n, len(rows), rows, "extended_av", bounds, provenance)


@dataclass
class DeltaSequence:
    """Greedily selected weights whose basis functions evaluate independently."""

    weights: tuple
    monomials: tuple
    sigma_table: dict = dc_field(default_factory=dict)


def delta_sequence(fp_generic, gamma, selection, max_weight=None):
    """The increasing weights picked by the linear-independence rule.

    Iterates the semigroup in increasing order; a weight joins when the
    evaluation vector of its standard monomial (over the compositum, at
    the selected points) is independent of the earlier ones.  Exactly
    h = number of points weights are selected.
    """
    order = fp_generic.order
    if order.r != 1:
        raise ValueError("delta sequences are computed for scalar weights")
    comp = selection.compositum
    h = len(selection.points)
    if max_weight is None:
        conductor = gamma.conductor if gamma.conductor is not None else 0
        maxvar = max(order.var_weight(i) for i in range(order.num_vars))
        max_weight = conductor + maxvar * (h + 2) + 64
    chosen_w = []
    chosen_m = []
    echelon = []  # (vector, pivot)
    lam = 0
    pts = selection.comp_points()
    while len(chosen_w) < h:
        if lam > max_weight:
            raise ResourceCapError(
                f"delta sequence did not close below weight {max_weight}"
            )
        if gamma.contains(lam):
            mono = fp_generic.monomial_of_weight(lam)
            vec = []
            for pt in pts:
                acc = comp.one
                for x, e in zip(pt, mono):
                    if e:
                        acc = acc * (x ** e)
                vec.append(acc)
            for evec, piv in echelon:
                c = vec[piv]
                if c.enc:
                    factor = c / evec[piv]
                    vec = [a - factor * b for a, b in zip(vec, evec)]
            pivot = next((i for i, v in enumerate(vec) if v.enc), None)
            if pivot is not None:
                echelon.append((vec, pivot))
                chosen_w.append(lam)
                chosen_m.append(mono)
        lam += 1
    weights = tuple(chosen_w)
    table = {w: sigma(w, weights, gamma) for w in weights}
    return DeltaSequence(weights, tuple(chosen_m), table)


def _span_rows_code(monomials, selection, inners, construction, bounds, provenance):
    """Common tail: rows from monomial images, canonical RREF, instance."""
    base = selection.base_field
    order = selection.order
    tables = coordinate_tables(selection)
    span = [Poly.monomial(base, order, m) for m in monomials]
    rows = [_concatenated_row(f, selection, inners, tables) for f in span]
    reduced, _ = rref(rows)
    n = sum(c.n for c in inners)
    return CodeInstance(base, n, len(reduced), reduced, construction, bounds, provenance)


def build_E_lambda(lam, fp_generic, gamma, selection, inners, dseq):
    """Span of the images of all basis functions of weight <= lambda."""
    _validate_inners(selection, inners)
    if not gamma.contains(lam):
        raise ValueError(f"{lam} is not in the weight semigroup")
    etas = [w for w in range(lam + 1) if gamma.contains(w)]
    monos = [fp_generic.monomial_of_weight(w) for w in etas]
    d_hat = min(c.d for c in inners)
    gamma_min = min(dseq.sigma_table[w] for w in dseq.weights if w <= lam)
    h = len(selection.points)
    bounds = {
        "sigma_bound": gamma_min,
        "inner_min": d_hat,
        "product_bound": gamma_min * d_hat,
        "one_point_bound": h - lam,
    }
    ks = [p.degree for p in selection.points]
    ds = [c.d for c in inners]
    if sum(ks) > lam:
        bounds["gag_designed"] = gag_designed_distance(lam, ks, ds)
        # dimension bound needs the same hypothesis: it makes the
        # evaluation injective on the full weight-threshold space
        if gamma.genus is not None:
            bounds["xnl_dim_bound"] = lam + 1 - gamma.genus
    tag = "E_lambda"
    provenance = {
        "construction": tag,
        "lambda": lam,
        "weights_used": etas,
        "points": [list(pt.enc()) for pt in selection.points],
        "degrees": list(selection.degrees),
        "inner_codes": [c.label for c in inners],
    }
    return _span_rows_code(monos, selection, inners, tag, bounds, provenance)


def build_E_improved(delta, fp_generic, gamma, selection, inners, dseq):
    """Span of the images of the basis functions with sigma >= delta."""
    _validate_inners(selection, inners)
    if delta < 1:
        raise ValueError("target distance must be >= 1")
    chosen = [w for w in dseq.weights if dseq.sigma_table[w] >= delta]
    d_hat = min(c.d for c in inners)
    plain = all(c.label.startswith("identity[1,") for c in inners) and all(
        p.degree == 1 for p in selection.points
    )
    tag = "E_tilde" if plain else "E_hat"
    bounds = {
        "sigma_bound": delta,
        "inner_min": d_hat,
        "product_bound": delta * d_hat,
    }
    provenance = {
        "construction": tag,
        "delta": delta,
        "weights_used": chosen,
        "points": [list(pt.enc()) for pt in selection.points],
        "degrees": list(selection.degrees),
        "inner_codes": [c.label for c in inners],
    }
    if not chosen:
        n = sum(c.n for c in inners)
        return CodeInstance(selection.base_field, n, 0, (), tag, bounds, provenance)
    monos = [fp_generic.monomial_of_weight(w) for w in chosen]
    return _span_rows_code(monos, selection, inners, tag, bounds, provenance)


# -- designed distance of the concatenated construction -------------------------

def gag_designed_distance(deg_g, ks, ds):
    """min over S with sum_{i in S} k_i <= deg(G) of sum_{i not in S} d_i.

    Exact 0/1 knapsack: maximize the erased distance sum under the
    degree budget.
    """
    if len(ks) != len(ds):
        raise ValueError("degree and distance lists must have equal length")
    if any(k < 1 for k in ks) or any(d < 1 for d in ds):
        raise ValueError("degrees and distances must be >= 1")
    if sum(ks) <= deg_g:
        raise ValueError("requires sum of degrees > deg(G)")
    if deg_g < 0:
        raise ValueError("deg(G) must be >= 0")
    best = [0] * (deg_g + 1)
    for k_i, d_i in zip(ks, ds):
        for c in range(deg_g, k_i - 1, -1):
            cand = best[c - k_i] + d_i
            if cand > best[c]:
                best[c] = cand
    return sum(ds) - best[deg_g]


@dataclass
class XnlReport:
    """Classical [n, k, d] parameter bounds for the concatenated code."""

    dim_bound: int
    designed_distance: int
    dim_vacuous: bool
    riemann_roch_exact: bool


def xnl_parameters(deg_g, genus, ks, ds):
    """Dimension bound deg(G)+1-g alongside the designed distance."""
    if genus is None:
        raise ValueError("genus unavailable (semigroup is not numerical)")
    dbar = gag_designed_distance(deg_g, ks, ds)
    dim_bound = deg_g + 1 - genus
    return XnlReport(
        dim_bound=dim_bound,
        designed_distance=dbar,
        dim_vacuous=dim_bound <= 0,
        riemann_roch_exact=deg_g >= 2 * genus - 1,
    )

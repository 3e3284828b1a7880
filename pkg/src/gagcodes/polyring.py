"""Multivariate polynomials under generalized weighted-degree orderings.

Monomials are plain exponent tuples.  A WeightedOrder assigns each
variable a weight (a nonnegative integer for scalar weights, or a
vector of them); monomials compare by weight vector lexicographically,
with ties broken by total degree and then lexicographically on the
exponents under the declared variable precedence.  The weighted orders
in the literature leave the tie-break unspecified; this fixed choice is
a convention of this package (any multiplicative tie-break is valid)
and the default precedence is the variable declaration order.

Polynomials are sparse maps from monomial to nonzero coefficient over
one Field.  All values are immutable in practice; operations are pure.
"""

from __future__ import annotations

# -- monomial helpers (exponent tuples) ---------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class WeightedOrder:
    """Total multiplicative order on monomials from per-variable weights.

    weights: one entry per variable, either an int (scalar weights,
    r = 1) or an equal-length sequence of ints (vector weights, r > 1).
    precedence: variable names from highest to lowest for the lex
    tie-break; defaults to declaration order.
    """

    def __init__(self, names, weights, precedence=None):
        self.names = tuple(names)
        self.num_vars = len(self.names)
        if len(weights) != self.num_vars:
            raise ValueError("one weight per variable required")
        vecs = []
        scalar = True
        for w in weights:
            if isinstance(w, int):
                vecs.append((w,))
            else:
                vecs.append(tuple(int(c) for c in w))
                scalar = False
        r = len(vecs[0])
        if any(len(v) != r for v in vecs):
            raise ValueError("all weight vectors must have the same length")
        if any(c < 0 for v in vecs for c in v):
            raise ValueError("weights must be nonnegative")
        self.weight_vectors = tuple(vecs)
        self.r = r
        self.scalar = scalar and r == 1
        if precedence is None:
            precedence = self.names
        prec = tuple(precedence)
        if sorted(prec) != sorted(self.names):
            raise ValueError("precedence must be a permutation of the variable names")
        self.precedence = prec
        self._prec_idx = tuple(self.names.index(n) for n in prec)

    def weight_vec(self, mono):
        return tuple(
            sum(e * self.weight_vectors[i][j] for i, e in enumerate(mono))
            for j in range(self.r)
        )

    def weight(self, mono):
        """Scalar weight for r = 1, weight vector otherwise."""
        vec = self.weight_vec(mono)
        return vec[0] if self.r == 1 else vec

    def var_weight(self, i):
        vec = self.weight_vectors[i]
        return vec[0] if self.r == 1 else vec

    def key(self, mono):
        """Sort key: weight lex, then total degree, then precedence lex."""
        return (
            self.weight_vec(mono),
            mono_deg(mono),
            tuple(mono[i] for i in self._prec_idx),
        )

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def one(self):
        return (0,) * self.num_vars

    def var(self, i):
        return tuple(1 if j == i else 0 for j in range(self.num_vars))

    def format_mono(self, mono):
        if all(e == 0 for e in mono):
            return "1"
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, WeightedOrder)
            and self.names == other.names
            and self.weight_vectors == other.weight_vectors
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.names, self.weight_vectors, self.precedence))

    def __repr__(self):
        ws = [v[0] if self.r == 1 else v for v in self.weight_vectors]
        return f"WeightedOrder({list(self.names)}, weights={ws})"


class Poly:
    """Sparse polynomial over a Field under a WeightedOrder."""

    __slots__ = ("field", "order", "terms")

    def __init__(self, field, order, terms=None):
        self.field = field
        self.order = order
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff.enc != 0:
                    self.terms[mono] = coeff

    @classmethod
    def zero(cls, field, order):
        return cls(field, order)

    @classmethod
    def constant(cls, field, order, coeff):
        return cls(field, order, {order.one(): coeff})

    @classmethod
    def monomial(cls, field, order, mono, coeff=None):
        if coeff is None:
            coeff = field.one
        return cls(field, order, {tuple(mono): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def _like(self, terms):
        return Poly(self.field, self.order, terms)

    def __add__(self, other):
        res = dict(self.terms)
        for m, c in other.terms.items():
            if m in res:
                s = res[m] + c
                if s.enc == 0:
                    del res[m]
                else:
                    res[m] = s
            else:
                res[m] = c
        return self._like(res)

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                if m in res:
                    s = res[m] + c
                    if s.enc == 0:
                        del res[m]
                    else:
                        res[m] = s
                elif c.enc != 0:
                    res[m] = c
        return self._like(res)

    def scale(self, coeff):
        if coeff.enc == 0:
            return Poly.zero(self.field, self.order)
        return self._like({m: c * coeff for m, c in self.terms.items()})

    def mul_term(self, mono, coeff):
        if coeff.enc == 0:
            return Poly.zero(self.field, self.order)
        return self._like(
            {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        )

    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.order.key)

    def lc(self):
        return self.terms[self.lm()]

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.lc().inverse())

    def support(self):
        return sorted(self.terms, key=self.order.key)

    def sorted_terms(self):
        """Terms as (monomial, coefficient), decreasing under the order."""
        return [
            (m, self.terms[m])
            for m in sorted(self.terms, key=self.order.key, reverse=True)
        ]

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.field.zero)

    def map_coeffs(self, fn, field):
        """New polynomial over `field` with every coefficient passed through fn."""
        return Poly(field, self.order, {m: fn(c) for m, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field.q, frozenset((m, c.enc) for m, c in self.terms.items())))

    def __repr__(self):
        return format_poly(self)


def evaluate(f, point, emb=None):
    """Evaluate f at a point, optionally embedding coefficients first.

    point: tuple of FieldElement in f's field, or in emb's target field
    when an embedding from f's field is supplied.
    """
    if len(point) != f.order.num_vars:
        raise ValueError(
            f"point has {len(point)} coordinates, ring has {f.order.num_vars} variables"
        )
    if emb is not None:
        if emb.src != f.field:
            raise ValueError("embedding source does not match coefficient field")
        target = emb.dst
        lift = emb
    else:
        target = f.field
        lift = None
    for x in point:
        if x.field != target:
            raise ValueError("point coordinate lies outside the evaluation field")
    acc = target.zero
    for mono, coeff in f.terms.items():
        c = lift(coeff) if lift else coeff
        term = c
        for x, e in zip(point, mono):
            if e:
                term = term * (x ** e)
        acc = acc + term
    return acc


def format_poly(f):
    """Canonical text form: terms decreasing, coefficients as encodings."""
    if f.is_zero:
        return "0"
    parts = []
    for mono, coeff in f.sorted_terms():
        ms = f.order.format_mono(mono)
        if ms == "1":
            parts.append(str(coeff.enc))
        elif coeff.enc == 1:
            parts.append(ms)
        else:
            parts.append(f"{coeff.enc}*{ms}")
    return "+".join(parts)


class PolyParseError(ValueError):
    """Syntax or semantic error in polynomial text, with offset."""

    def __init__(self, message, text, pos):
        super().__init__(f"{message} (at offset {pos} in {text!r})")
        self.pos = pos


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", text, i)
    toks.append(("end", "", n))
    return toks


def parse_poly(text, field, order):
    """Parse polynomial text like `X^6+Y^5+Y` or `2*X*Y+3`.

    Coefficients are integer element encodings; `*` between factors is
    optional; `^` raises to a nonnegative integer power.
    """
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def advance():
        tok = toks[pos[0]]
        pos[0] += 1
        return tok

    def parse_power():
        if peek()[0] == "^":
            advance()
            kind, val, at = advance()
            if kind != "int":
                raise PolyParseError("expected integer exponent after '^'", text, at)
            return int(val)
        return 1

    def parse_factor():
        kind, val, at = advance()
        if kind == "int":
            enc = int(val)
            if enc >= field.q:
                raise PolyParseError(
                    f"coefficient encoding {enc} out of range for GF({field.q})", text, at
                )
            e = parse_power()
            base = field.element(enc)
            return Poly.constant(field, order, base ** e)
        if kind == "name":
            if val not in order.names:
                raise PolyParseError(f"unknown variable {val!r}", text, at)
            idx = order.names.index(val)
            e = parse_power()
            mono = tuple(e if j == idx else 0 for j in range(order.num_vars))
            return Poly.monomial(field, order, mono)
        if kind == "(":
            inner = parse_expr()
            kind2, _, at2 = advance()
            if kind2 != ")":
                raise PolyParseError("expected ')'", text, at2)
            e = parse_power()
            out = Poly.constant(field, order, field.one)
            for _ in range(e):
                out = out * inner
            return out
        raise PolyParseError(f"unexpected token {val!r}", text, at)

    def parse_term():
        prod = parse_factor()
        while True:
            kind = peek()[0]
            if kind == "*":
                advance()
                prod = prod * parse_factor()
            elif kind in ("int", "name", "("):
                prod = prod * parse_factor()
            else:
                return prod

    def parse_expr():
        if peek()[0] == "-":
            advance()
            acc = -parse_term()
        else:
            acc = parse_term()
        while peek()[0] in ("+", "-"):
            op = advance()[0]
            t = parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    result = parse_expr()
    kind, val, at = peek()
    if kind != "end":
        raise PolyParseError(f"trailing input {val!r}", text, at)
    return result

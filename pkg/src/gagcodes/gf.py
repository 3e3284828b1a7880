"""Exact arithmetic in GF(p^k) towers with embeddings and Frobenius.

Elements are residues in GF(p)[Z]/(modulus) stored by their canonical
integer encoding enc(e) = sum coords[i] * p^i, where coords are the
coefficients of e in the polynomial basis (1, gamma, ..., gamma^(k-1))
and gamma is the class of Z.  The encoding is the wire format used by
every file output of the package.

Extension fields GF(q^r) are always realized over the prime field (as
GF(p^(k*r))) and GF(q) is embedded, rather than representing towers
natively.  Embeddings are deterministic: the image of the source
generator is the root of the source modulus with minimal encoding.

Fields are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from functools import lru_cache

MAX_FIELD_SIZE = 1 << 16


class FieldError(ValueError):
    """Invalid field specification or field-element operation."""


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
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


# ----------------------------------------------------------------------
# Dense polynomial helpers over GF(p), coefficient tuples low -> high.
# Used only for modulus validation and raw element multiplication.
# ----------------------------------------------------------------------

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        a[i] = 0
        for j in range(df):
            a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(tuple(c % p for c in a))


def _pgcd(a, b, p):
    a, b = _ptrim(tuple(a)), _ptrim(tuple(b))
    while b:
        lead = b[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            b = tuple((c * inv) % p for c in b)
        a, b = b, _pmod(a, b, p)
    return a


def _ppow_p(a, f, p):
    """a^p mod f by square-and-multiply."""
    result = (1,)
    base = a
    e = p
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(modulus, p):
    """Rabin test for a monic polynomial over GF(p)."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        return False
    if k == 1:
        return True
    z = (0, 1)
    # t_j = Z^(p^j) mod f, built by iterated p-th powers
    t = z
    powers = {}
    for j in range(1, k + 1):
        t = _ppow_p(t, modulus, p)
        powers[j] = t
    if _ptrim(powers[k]) != z:
        return False
    diff_gcd_ok = True
    for ell in _prime_factors(k):
        t_sub = powers[k // ell]
        diff = list(t_sub) + [0] * (2 - len(t_sub))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(tuple(diff), modulus, p)
        if len(g) - 1 != 0:
            diff_gcd_ok = False
            break
    return diff_gcd_ok


@lru_cache(maxsize=None)
def default_modulus(p, k):
    """Minimal-encoding monic irreducible of degree k over GF(p).

    For GF(4) this picks Z^2+Z+1 and for degree 3 over GF(2) it picks
    Z^3+Z+1, so the standard small-field presentations come out of the
    box.
    """
    if k == 1:
        return (0, 1)
    for low_enc in range(p ** k):
        coeffs = []
        e = low_enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        cand = tuple(coeffs) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible of degree {k} over GF({p})")  # pragma: no cover


class FieldElement:
    """Element of a Field, identified by its integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field, enc):
        self.field = field
        self.enc = enc

    @property
    def coords(self):
        return self.field.coords(self.enc)

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add_enc(self.enc, other.enc))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub_enc(self.enc, other.enc))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_enc(self.enc, other.enc))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_enc(self.enc, self.field.inv_enc(other.enc)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_enc(self.enc))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow_enc(self.enc, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_enc(self.enc))

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldError("operands belong to different fields")

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.enc == other.enc
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.enc))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return f"GF{self.field.q}({self.enc})"


class Field:
    """GF(p^k) presented as GF(p)[Z]/(modulus), q = p^k <= 2^16.

    Provides add/sub/mul/inv/pow on encodings, a fixed primitive element
    found by search in encoding order, and deterministic element
    iteration in encoding order.
    """

    def __init__(self, p, k, modulus=None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        q = p ** k
        if q > MAX_FIELD_SIZE:
            raise FieldError(f"field size {q} exceeds cap 2^16")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1:
            raise FieldError(f"modulus must have degree {k}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if any(c < 0 or c >= p for c in modulus):
            raise FieldError("modulus coefficients must be reduced mod p")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._coords = self._coords_table()
        self._exp, self._log = self._build_log_tables()

    # -- construction helpers -------------------------------------------------

    def _coords_table(self):
        table = []
        for enc in range(self.q):
            c = []
            e = enc
            for _ in range(self.k):
                c.append(e % self.p)
                e //= self.p
            table.append(tuple(c))
        return table

    def _mul_raw(self, a_enc, b_enc):
        prod = _pmod(
            _pmul(self._coords[a_enc], self._coords[b_enc], self.p),
            self.modulus,
            self.p,
        )
        return self._encode(prod)

    def _encode(self, coeffs):
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    def _pow_raw(self, a_enc, e):
        result = 1
        base = a_enc
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def _build_log_tables(self):
        order = self.q - 1
        gen = None
        if order == 1:
            gen = 1
        else:
            factors = _prime_factors(order)
            for cand in range(2, self.q):
                if all(self._pow_raw(cand, order // ell) != 1 for ell in factors):
                    gen = cand
                    break
        if gen is None:  # pragma: no cover - a primitive element always exists
            raise FieldError("no primitive element found")
        exp = [0] * (2 * order)
        log = [0] * self.q
        val = 1
        for i in range(order):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._gen_enc = gen
        return exp, log

    # -- encoding-level arithmetic --------------------------------------------

    def coords(self, enc):
        return self._coords[enc]

    def encode(self, coeffs):
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.k:
            raise FieldError("too many coordinates")
        return self._encode(coeffs)

    def add_enc(self, a, b):
        if self.p == 2:
            return a ^ b
        ca, cb = self._coords[a], self._coords[b]
        return self._encode(tuple((x + y) % self.p for x, y in zip(ca, cb)))

    def neg_enc(self, a):
        if self.p == 2:
            return a
        return self._encode(tuple((-x) % self.p for x in self._coords[a]))

    def sub_enc(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add_enc(a, self.neg_enc(b))

    def mul_enc(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv_enc(self, a):
        if a == 0:
            raise FieldError("zero has no inverse")
        return self._exp[(self.q - 1) - self._log[a]]

    def pow_enc(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("zero to a negative power")
            return 0
        order = self.q - 1
        if order == 0:
            return 1
        return self._exp[(self._log[a] * e) % order]

    # -- element-level API ----------------------------------------------------

    def element(self, enc):
        enc = int(enc)
        if enc < 0 or enc >= self.q:
            raise FieldError(f"encoding {enc} out of range for GF({self.q})")
        return FieldElement(self, enc)

    def from_coords(self, coeffs):
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """Class of Z, the polynomial-basis generator (a root of the modulus)."""
        if self.k > 1:
            return FieldElement(self, self.p)
        return FieldElement(self, (-self.modulus[0]) % self.p)

    @property
    def primitive_element(self):
        return FieldElement(self, self._gen_enc)

    def elements(self):
        for enc in range(self.q):
            yield FieldElement(self, enc)

    def nonzero_elements(self):
        for enc in range(1, self.q):
            yield FieldElement(self, enc)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field(GF({self.q}) = GF({self.p})^{self.k})"


def make_field(p, k, modulus=None):
    """Construct GF(p^k); modulus defaults to the built-in table."""
    return Field(p, k, modulus)


def frobenius(e, base_q):
    """e -> e^base_q, the Frobenius over GF(base_q).

    base_q must be a power p^j of the element's characteristic with
    j dividing the degree of the element's field.
    """
    field = e.field
    j = 0
    n = base_q
    while n % field.p == 0 and n > 1:
        n //= field.p
        j += 1
    if n != 1 or j == 0:
        raise FieldError(f"{base_q} is not a power of the characteristic {field.p}")
    if field.k % j != 0:
        raise FieldError(
            f"GF({field.q}) is not an extension of GF({base_q})"
        )
    return e ** base_q


class FieldEmbedding:
    """Injective homomorphism GF(p^k) -> GF(p^(k*r)).

    The source generator maps to the root of the source modulus in the
    target with minimal encoding; the whole map is tabulated.
    """

    def __init__(self, src, dst):
        if src.p != dst.p:
            raise FieldError("embedding requires equal characteristics")
        if dst.k % src.k != 0:
            raise FieldError(
                f"degree {dst.k} is not a multiple of {src.k}; no embedding"
            )
        self.src = src
        self.dst = dst
        root = self._find_root()
        self.gen_image = root
        table = []
        for enc in range(src.q):
            acc = dst.zero
            power = dst.one
            for c in src.coords(enc):
                if c:
                    acc = acc + dst.element(c) * power
                power = power * root
            table.append(acc.enc)
        self._table = table
        self._preimage = {d_enc: s_enc for s_enc, d_enc in enumerate(table)}

    def _find_root(self):
        coeffs = self.src.modulus
        for cand in self.dst.elements():
            acc = self.dst.zero
            power = self.dst.one
            for c in coeffs:
                if c:
                    acc = acc + self.dst.element(c) * power
                power = power * cand
            if acc.enc == 0:
                return cand
        raise FieldError("no root of source modulus in target field")  # pragma: no cover

    def __call__(self, e):
        if e.field != self.src:
            raise FieldError("element not in the source field")
        return FieldElement(self.dst, self._table[e.enc])

    def preimage(self, e):
        """Inverse on the image; raises if e is outside the embedded subfield."""
        if e.field != self.dst:
            raise FieldError("element not in the target field")
        try:
            return FieldElement(self.src, self._preimage[e.enc])
        except KeyError:
            raise FieldError(f"{e!r} is not in the embedded subfield") from None

    def __repr__(self):
        return f"FieldEmbedding(GF({self.src.q}) -> GF({self.dst.q}))"


def build_embedding(src, dst):
    """Deterministic embedding; identity when src == dst."""
    return FieldEmbedding(src, dst)

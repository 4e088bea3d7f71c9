"""Exact scalar arithmetic: prime fields, small Galois extensions, and Q.

Galois field elements are encoded as integers in ``range(q)`` whose base-p
digits are the coefficients of the residue polynomial in the canonical
generator (little-endian).  Rational scalars are ``fractions.Fraction``.
Supported extensions: p in {2, 3, 5, 7}, degree <= 4.
"""

from fractions import Fraction

SUPPORTED_PRIMES = (2, 3, 5, 7)
MAX_DEGREE = 4

# Primitive monic modulus for F_{p^e}, as little-endian coefficient tuples
# (constant term first, leading coefficient omitted).  First monic polynomial
# in lexicographic coefficient order that is primitive; fixed here so element
# encodings never change between runs.
_MODULUS_TABLE = {
    (2, 2): (1, 1),
    (2, 3): (1, 0, 1),
    (2, 4): (1, 0, 0, 1),
    (3, 2): (2, 1),
    (3, 3): (1, 0, 2),
    (3, 4): (2, 0, 0, 1),
    (5, 2): (2, 1),
    (5, 3): (2, 0, 1),
    (5, 4): (2, 0, 2, 1),
    (7, 2): (3, 1),
    (7, 3): (2, 1, 1),
    (7, 4): (3, 0, 1, 1),
}

_TABLE_LIMIT = 1024  # cache full add tables only for small fields


def _poly_mul_mod(a, b, modulus, p, e):
    """Multiply two coefficient lists mod (modulus, p)."""
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(2 * e - 2, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j, mj in enumerate(modulus):
                prod[k - e + j] = (prod[k - e + j] - c * mj) % p
    return prod[:e]


class FieldError(ValueError):
    pass


class Field:
    """A coefficient field: F_p, F_{p^e}, or Q.

    Instances are interned: ``Field.galois(p, e)`` returns the same object
    for the same parameters, so identity comparison is safe.
    """

    _cache = {}

    def __init__(self, char, degree, _token=None):
        if _token is not Field._cache:
            raise FieldError("use Field.prime / Field.galois / Field.rationals")
        self.char = char
        self.degree = degree
        if char == 0:
            self.kind = "rational"
            self.order = None
            self.zero = Fraction(0)
            self.one = Fraction(1)
            return
        p, e = char, degree
        self.order = p ** e
        if e == 1:
            self.kind = "prime"
            self.zero = 0
            self.one = 1
            return
        self.kind = "galois"
        self.zero = 0
        self.one = 1
        self.modulus = _MODULUS_TABLE[(p, e)]
        q = self.order
        # digit decomposition tables
        self._digits = [self._int_digits(a) for a in range(q)]
        # exp/log via the primitive element x (encoded as integer p)
        exp = [0] * (q - 1)
        log = [0] * q
        acc = [1] + [0] * (e - 1)
        for k in range(q - 1):
            v = self._digits_int(acc)
            exp[k] = v
            log[v] = k
            acc = _poly_mul_mod(acc, [0, 1] + [0] * (e - 2), self.modulus, p, e)
        self._exp = exp
        self._log = log
        if q <= _TABLE_LIMIT:
            self._add_table = [
                [self._add_digits(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add_table = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def prime(p):
        return Field.galois(p, 1)

    @staticmethod
    def galois(p, e):
        key = (p, e)
        f = Field._cache.get(key)
        if f is None:
            if p not in SUPPORTED_PRIMES:
                raise FieldError(f"unsupported characteristic {p}")
            if not 1 <= e <= MAX_DEGREE:
                raise FieldError(f"unsupported extension degree {e}")
            f = Field(p, e, _token=Field._cache)
            Field._cache[key] = f
        return f

    @staticmethod
    def rationals():
        f = Field._cache.get((0, 1))
        if f is None:
            f = Field(0, 1, _token=Field._cache)
            Field._cache[(0, 1)] = f
        return f

    @staticmethod
    def of_order(q):
        """The field with q elements (q a supported prime power)."""
        for p in SUPPORTED_PRIMES:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n == 1 and e >= 1:
                return Field.galois(p, e)
        raise FieldError(f"no supported field of order {q}")

    # -- helpers ---------------------------------------------------------

    def _int_digits(self, a):
        p = self.char
        return tuple((a // p ** i) % p for i in range(self.degree))

    def _digits_int(self, digits):
        p = self.char
        v = 0
        for i in range(self.degree - 1, -1, -1):
            v = v * p + digits[i]
        return v

    def _add_digits(self, a, b):
        p = self.char
        da, db = self._digits[a], self._digits[b]
        return self._digits_int([(x + y) % p for x, y in zip(da, db)])

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        k = self.kind
        if k == "prime":
            return (a + b) % self.char
        if k == "rational":
            return a + b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        k = self.kind
        if k == "prime":
            return (-a) % self.char
        if k == "rational":
            return -a
        p = self.char
        return self._digits_int([(-x) % p for x in self._digits[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        k = self.kind
        if k == "prime":
            return (a * b) % self.char
        if k == "rational":
            return a * b
        if a == 0 or b == 0:
            return 0
        q1 = self.order - 1
        return self._exp[(self._log[a] + self._log[b]) % q1]

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("field inverse of zero")
        k = self.kind
        if k == "prime":
            return pow(a, self.char - 2, self.char)
        if k == "rational":
            return 1 / a
        q1 = self.order - 1
        return self._exp[(q1 - self._log[a]) % q1]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one
        b = a
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def frobenius(self, a, i=1):
        """x -> x^(p^i)."""
        if self.kind == "rational":
            return a
        return self.pow(a, self.char ** (i % self.degree))

    def elements(self):
        if self.kind == "rational":
            raise FieldError("Q is infinite")
        return range(self.order)

    def units(self):
        return [a for a in self.elements() if a != 0]

    def gen(self):
        """A multiplicative generator (the residue of x for extensions)."""
        if self.kind == "rational":
            return Fraction(2)
        if self.kind == "prime":
            for g in range(2, self.char):
                if all(pow(g, (self.char - 1) // r, self.char) != 1
                       for r in _prime_divisors(self.char - 1)):
                    return g
            return 1
        return self.char  # the class of x, primitive by table construction

    def coerce(self, x):
        """Accept ints (and fractions for Q) as field scalars."""
        if self.kind == "rational":
            return Fraction(x)
        return int(x) % self.char if self.degree == 1 else self._coerce_int(x)

    def _coerce_int(self, x):
        x = int(x)
        if 0 <= x < self.order:
            return x
        # treat as an integer scalar: image of x under Z -> F_{p^e}
        return x % self.char

    def to_coeffs(self, a):
        """Element as a coefficient vector over the prime field."""
        if self.kind == "rational":
            raise FieldError("rationals have no coefficient vector")
        if self.kind == "prime":
            return (a,)
        return self._digits[a]

    def from_coeffs(self, coeffs):
        if self.kind == "rational":
            raise FieldError("rationals have no coefficient vector")
        coeffs = [c % self.char for c in coeffs]
        if self.kind == "prime":
            return coeffs[0]
        return self._digits_int(coeffs)

    # -- subfields and embeddings ---------------------------------------

    def contains_subfield(self, other):
        return (other.kind != "rational" and self.kind != "rational"
                and other.char == self.char
                and self.degree % other.degree == 0)

    def embedding_from(self, sub):
        """The canonical embedding sub -> self.

        Sends the canonical generator of ``sub`` to the first root (in
        element order) of its modulus whose induced map is a homomorphism;
        deterministic across runs.
        """
        if sub is self:
            return lambda a: a
        if not self.contains_subfield(sub):
            raise FieldError("not a subfield")
        if sub.degree == 1:
            return lambda a, K=self: a % K.char
        mod = list(sub.modulus) + [1]
        root = None
        for x in self.elements():
            acc = self.zero
            for c in reversed(mod):
                acc = self.add(self.mul(acc, x), c % self.char)
            if acc == self.zero:
                root = x
                break
        assert root is not None
        powers = [self.pow(root, i) for i in range(sub.degree)]

        def emb(a, sub=sub, K=self, powers=powers):
            v = K.zero
            for c, w in zip(sub.to_coeffs(a), powers):
                v = K.add(v, K.mul(c % K.char, w))
            return v
        return emb

    # -- misc ------------------------------------------------------------

    def label(self):
        if self.kind == "rational":
            return "Q"
        return f"F_{self.order}"

    def __repr__(self):
        return f"Field({self.label()})"


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


QQ = Field.rationals()

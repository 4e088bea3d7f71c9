"""Dense exact matrices over a Field, stored as lists of row lists.

Everything here is exact: no floats anywhere.  Row reduction has a fast
path for prime fields (plain int arithmetic mod p) and a fraction-free
path for integer matrices over Q; other fields go through Field methods.
"""

from fractions import Fraction
from math import gcd

from .fields import Field, QQ


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_ints(field, rows):
        return Matrix(field, [[field.coerce(x) for x in r] for r in rows])

    @staticmethod
    def zero(field, nrows, ncols):
        z = field.zero
        return Matrix(field, [[z] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Matrix(field, [[o if i == j else z for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def from_rows(field, rows):
        return Matrix(field, rows)

    def copy(self):
        return Matrix(self.field, self.rows)

    # -- basics ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        return f"Matrix({self.field.label()}, {self.nrows}x{self.ncols})"

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def entries_flat(self):
        return [x for r in self.rows for x in r]

    def transpose(self):
        return Matrix(self.field, [list(c) for c in zip(*self.rows)]
                      if self.rows else [])

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        F = self.field
        add = F.add
        return Matrix(F, [[add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        F = self.field
        sub = F.sub
        return Matrix(F, [[sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        F = self.field
        return Matrix(F, [[F.neg(a) for a in r] for r in self.rows])

    def scale(self, c):
        F = self.field
        mul = F.mul
        return Matrix(F, [[mul(c, a) for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        F = self.field
        if F.kind == "prime":
            p = F.char
            bt = list(zip(*other.rows))
            return Matrix(F, [[sum(a * b for a, b in zip(row, col)) % p
                               for col in bt] for row in self.rows])
        if F.kind == "rational":
            bt = list(zip(*other.rows))
            return Matrix(F, [[sum(a * b for a, b in zip(row, col))
                               for col in bt] for row in self.rows])
        add, mul, z = F.add, F.mul, F.zero
        bt = list(zip(*other.rows))
        out = []
        for row in self.rows:
            orow = []
            for col in bt:
                acc = z
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(F, out)

    def __pow__(self, n):
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        r = Matrix.identity(self.field, self.nrows)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def apply_to_vector(self, v):
        """Matrix times column vector (v a plain list)."""
        F = self.field
        if F.kind == "prime":
            p = F.char
            return [sum(a * b for a, b in zip(row, v)) % p
                    for row in self.rows]
        if F.kind == "rational":
            return [sum(a * b for a, b in zip(row, v)) for row in self.rows]
        add, mul, z = F.add, F.mul, F.zero
        out = []
        for row in self.rows:
            acc = z
            for a, b in zip(row, v):
                if a and b:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return out

    def kron(self, other):
        """Kronecker product; basis of the product space is ordered
        lexicographically: index (i, k) -> i * other.n + k."""
        F = self.field
        mul = F.mul
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([mul(a, b) for a in ra for b in rb])
        return Matrix(F, out)

    def trace(self):
        F = self.field
        t = F.zero
        for i in range(min(self.nrows, self.ncols)):
            t = F.add(t, self.rows[i][i])
        return t

    # -- row reduction ---------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot_columns)."""
        F = self.field
        if F.kind == "prime":
            rows, piv = _rref_prime([r[:] for r in self.rows],
                                    self.ncols, F.char)
        elif F.kind == "rational":
            rows, piv = _rref_rational([r[:] for r in self.rows], self.ncols)
        else:
            rows, piv = _rref_generic([r[:] for r in self.rows],
                                      self.ncols, F)
        return Matrix(F, rows) if rows else Matrix.zero(F, 0, self.ncols), piv

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Rows spanning {v : A v = 0}, in RREF of the kernel."""
        R, piv = self.rref()
        n = self.ncols
        F = self.field
        pivset = set(piv)
        free = [j for j in range(n) if j not in pivset]
        basis = []
        for j in free:
            v = [F.zero] * n
            v[j] = F.one
            for i, pc in enumerate(piv):
                v[pc] = F.neg(R.rows[i][j])
            basis.append(v)
        if not basis:
            return Matrix.zero(F, 0, n)
        return Matrix(F, basis).rref()[0]

    def row_space_basis(self):
        R, piv = self.rref()
        return Matrix(self.field, R.rows[:len(piv)]) if piv \
            else Matrix.zero(self.field, 0, self.ncols)

    def column_space_basis(self):
        """Basis of the column space, returned as rows of length nrows."""
        return self.transpose().row_space_basis()

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        F = self.field
        aug = Matrix(F, [self.rows[i] + Matrix.identity(F, n).rows[i]
                         for i in range(n)])
        R, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise ValueError("singular matrix")
        return Matrix(F, [r[n:] for r in R.rows[:n]])

    def solve_right(self, b):
        """One solution x of A x = b (b a list), or None."""
        F = self.field
        aug = Matrix(F, [row + [bv] for row, bv in zip(self.rows, b)])
        R, piv = aug.rref()
        if self.ncols in piv:
            return None
        x = [F.zero] * self.ncols
        for i, pc in enumerate(piv):
            x[pc] = R.rows[i][self.ncols]
        return x

    # -- serialization ---------------------------------------------------

    def to_json(self):
        """JSON payload; extension-field entries become coefficient vectors
        over the prime field, rational entries become "num/den" strings."""
        F = self.field
        if F.kind == "rational":
            fld = {"p": 0, "e": 1}
            ent = [[f"{x.numerator}/{x.denominator}" for x in map(Fraction, r)]
                   for r in self.rows]
        else:
            fld = {"p": F.char, "e": F.degree}
            ent = [[list(F.to_coeffs(x)) for x in r] for r in self.rows]
        return {"field": fld, "rows": self.nrows, "cols": self.ncols,
                "entries": ent}

    @staticmethod
    def from_json(obj):
        p, e = obj["field"]["p"], obj["field"]["e"]
        F = QQ if p == 0 else Field.galois(p, e)
        ent = obj["entries"]
        if F.kind == "rational":
            rows = [[Fraction(x) for x in r] for r in ent]
        else:
            rows = [[F.from_coeffs(x) if isinstance(x, (list, tuple))
                     else F.coerce(x) for x in r] for r in ent]
        m = Matrix(F, rows) if rows else Matrix.zero(F, 0, obj["cols"])
        if m.nrows != obj["rows"] or (m.rows and m.ncols != obj["cols"]):
            raise ValueError("inconsistent matrix payload")
        return m


# -- elimination kernels -------------------------------------------------

def _rref_prime(rows, ncols, p):
    piv = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        if inv != 1:
            rows[r] = [(x * inv) % p for x in rows[r]]
        else:
            rows[r] = [x % p for x in rows[r]]
        lead = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c] % p
                if f:
                    ri = rows[i]
                    rows[i] = [(a - f * b) % p for a, b in zip(ri, lead)]
        piv.append(c)
        r += 1
        if r == nrows:
            break
    return rows, piv


def _rref_rational(rows, ncols):
    # fraction-free forward elimination over Z when all entries are integral
    if all(isinstance(x, int) or (isinstance(x, Fraction)
                                  and x.denominator == 1)
           for r in rows for x in r):
        irows = [[int(x) for x in r] for r in rows]
        return _rref_int(irows, ncols)
    return _rref_generic(rows, ncols, QQ)


def _rref_int(rows, ncols):
    piv = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r]
        lc = lead[c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                ri = rows[i]
                new = [lc * a - f * b for a, b in zip(ri, lead)]
                g = 0
                for x in new:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    new = [x // g for x in new]
                rows[i] = new
        piv.append(c)
        r += 1
        if r == nrows:
            break
    # normalize & back-substitute with fractions (few pivot rows typically)
    out = [[Fraction(x) for x in rows[i]] for i in range(r)]
    for i in range(r - 1, -1, -1):
        c = piv[i]
        lc = out[i][c]
        if lc != 1:
            out[i] = [x / lc for x in out[i]]
        for k in range(i):
            f = out[k][c]
            if f:
                out[k] = [a - f * b for a, b in zip(out[k], out[i])]
    for i in range(r, nrows):
        out.append([Fraction(0)] * ncols)
    return out, piv


def _rref_generic(rows, ncols, F):
    z = F.zero
    piv = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        if inv != F.one:
            mul = F.mul
            rows[r] = [mul(inv, x) for x in rows[r]]
        lead = rows[r]
        sub, mul = F.sub, F.mul
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != z:
                    ri = rows[i]
                    rows[i] = [sub(a, mul(f, b)) for a, b in zip(ri, lead)]
        piv.append(c)
        r += 1
        if r == nrows:
            break
    return rows, piv


# -- subspaces -----------------------------------------------------------

class Subspace:
    """A subspace of F^n held as an RREF row basis."""

    def __init__(self, field, ambient_dim, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        vs = [v for v in vectors]
        if vs:
            R, piv = Matrix(field, vs).rref()
            self.basis = [R.rows[i] for i in range(len(piv))]
            self.pivots = piv
        else:
            self.basis = []
            self.pivots = []

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        F = self.field
        v = list(v)
        z = F.zero
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != z:
                sub, mul = F.sub, F.mul
                v = [sub(a, mul(f, b)) for a, b in zip(v, row)]
        return all(x == z for x in v)

    def coords(self, v):
        """Coordinates of v in the stored basis, or None."""
        F = self.field
        v = list(v)
        z = F.zero
        out = []
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            out.append(f)
            if f != z:
                sub, mul = F.sub, F.mul
                v = [sub(a, mul(f, b)) for a, b in zip(v, row)]
        if any(x != z for x in v):
            return None
        return out

    def add_vector(self, v):
        """Insert v into the span; returns True if the dimension grew."""
        F = self.field
        v = list(v)
        z = F.zero
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != z:
                sub, mul = F.sub, F.mul
                v = [sub(a, mul(f, b)) for a, b in zip(v, row)]
        for c, x in enumerate(v):
            if x != z:
                inv = F.inv(x)
                mul = F.mul
                v = [mul(inv, y) for y in v]
                # keep basis reduced
                for i, row in enumerate(self.basis):
                    f = row[c]
                    if f != z:
                        sub = F.sub
                        self.basis[i] = [sub(a, mul(f, b))
                                         for a, b in zip(row, v)]
                k = 0
                while k < len(self.pivots) and self.pivots[k] < c:
                    k += 1
                self.basis.insert(k, v)
                self.pivots.insert(k, c)
                return True
        return False

    def intersect(self, other):
        """Intersection with another subspace of the same ambient space."""
        if not self.basis or not other.basis:
            return Subspace(self.field, self.ambient_dim)
        A = Matrix(self.field, self.basis + other.basis).transpose()
        K = A.kernel_basis()
        vecs = []
        B = Matrix(self.field, self.basis)
        for krow in K.rows:
            coeffs = krow[:len(self.basis)]
            v = Matrix(self.field, [coeffs]) * B
            vecs.append(v.rows[0])
        return Subspace(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field is other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return (f"Subspace(dim {self.dim} of "
                f"{self.field.label()}^{self.ambient_dim})")


def rref(m):
    return m.rref()


def kernel_basis(m):
    """Null space of m as a Subspace of F^cols."""
    K = m.kernel_basis()
    return Subspace(m.field, m.ncols, K.rows)


def image_basis(m):
    """Column space of m as a Subspace of F^rows."""
    B = m.column_space_basis()
    return Subspace(m.field, m.nrows, B.rows)


def kronecker(a, b):
    if a.field is not b.field:
        raise ValueError("field mismatch in kronecker product")
    return a.kron(b)


def span_from_spins(field, ambient_dim, seeds, operators):
    """Smallest subspace containing ``seeds`` stable under ``operators``
    (matrices acting on column vectors)."""
    sp = Subspace(field, ambient_dim)
    queue = [list(v) for v in seeds]
    while queue:
        v = queue.pop()
        if sp.add_vector(v):
            for op in operators:
                queue.append(op.apply_to_vector(v))
    return sp

"""Functors on finitely generated free modules over a finite ring,
truncated at a rank bound.

A functor is stored rule-backed: a dimension rule per rank and an
action rule producing the matrix of F(h) for an explicit A-linear map
h: A^m -> A^m' (h given as an m' x m tuple-of-tuples over the ring).
Full action tables over all of Hom(A^m, A^m') are never materialized;
every computation below only evaluates the handful of maps it needs.
"""

from itertools import product
from math import comb

from .emlpoly import NotPolynomialUpTo
from .fields import Field, QQ
from .matrices import Matrix, Subspace
from .modtools import (AlgebraModule, are_isomorphic, is_simple,
                       restrict_to_submodule)
from .rings import (FiniteRing, RingIdeal, all_ideals, cotrivial_ideals,
                    mat_mul, matrix_monoid_generators, monoid_closure)


class NotIntermediateExtension(RuntimeError):
    pass


def ring_matrix(ring, rows):
    """An A-linear map as a tuple of row tuples of ring elements; plain
    ints are coerced through the unit."""
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, tuple):
                row.append(x)
            else:
                row.append(ring.from_int(x))
        out.append(tuple(row))
    return tuple(out)


def ring_identity(ring, m):
    return tuple(tuple(ring.one if i == j else ring.zero
                       for j in range(m)) for i in range(m))


def _compose(ring, g, f, rows, inner, cols):
    """g o f as a rows x cols ring matrix, tolerating empty shapes."""
    if rows == 0:
        return ()
    if cols == 0:
        return tuple(() for _ in range(rows))
    if inner == 0:
        return tuple(tuple(ring.zero for _ in range(cols))
                     for _ in range(rows))
    return mat_mul(ring, g, f)


def all_ring_homs_matrices(ring, m, m2):
    """Every A-linear map A^m -> A^m2, i.e. every m2 x m matrix."""
    els = ring.elements()
    cols = m * m2
    out = []
    for combo in product(els, repeat=cols):
        out.append(tuple(tuple(combo[i * m + j] for j in range(m))
                         for i in range(m2)))
    return out


class FunctorRep:
    """A truncated functor: dimension and action rules with caching."""

    def __init__(self, ring, field, N, dim_rule, action_rule, name=""):
        self.ring = ring
        self.field = field
        self.N = N
        self._dim_rule = dim_rule
        self._action_rule = action_rule
        self.name = name
        self._dim_cache = {}
        self._act_cache = {}

    def dim(self, m):
        if m not in self._dim_cache:
            if m > self.N:
                raise ValueError(f"rank {m} exceeds truncation {self.N}")
            self._dim_cache[m] = self._dim_rule(m)
        return self._dim_cache[m]

    def act(self, h):
        """Matrix of F(h) for h: A^m -> A^m2 (h an m2 x m ring matrix;
        a 0 x m or m2 x 0 shape needs explicit ranks via act_ranks)."""
        m2, m = len(h), len(h[0]) if h else 0
        return self.act_ranks(h, m, m2)

    def act_ranks(self, h, m, m2):
        key = (h, m, m2)
        if key not in self._act_cache:
            if max(m, m2) > self.N:
                raise ValueError(f"rank exceeds truncation {self.N}")
            A = self._action_rule(h, m, m2)
            if A.nrows != self.dim(m2) or \
                    (A.nrows and A.ncols != self.dim(m)):
                raise ValueError("action rule produced a wrong shape")
            self._act_cache[key] = A
        return self._act_cache[key]

    def dims(self):
        return [self.dim(m) for m in range(self.N + 1)]

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return (f"FunctorRep({tag} on {self.ring.label()} over "
                f"{self.field.label()}, N={self.N})")


# -- builtin functors ----------------------------------------------------

def constant_functor(ring, field, N):
    one = Matrix.identity(field, 1)
    return FunctorRep(ring, field, N, lambda m: 1,
                      lambda h, m, m2: one, name="K")


def additive_functor(ring, field, N, hom):
    """K tensor_A (-) along a ring homomorphism A -> K: the value at
    A^m is K^m and matrices map entrywise through the homomorphism."""
    def act(h, m, m2):
        if m2 == 0 or m == 0:
            return Matrix.zero(field, m2, m)
        return Matrix(field, [[hom(x) for x in row] for row in h])
    return FunctorRep(ring, field, N, lambda m: m, act, name="Lambda1")


def representable_functor(ring, field, N, cap=100000):
    """P = K[Hom(A, -)]: the free K-module on A^m at rank m."""
    def basis(m):
        return all_ring_homs_matrices(ring, 1, m)

    cache = {}

    def idx(m):
        if m not in cache:
            b = basis(m)
            cache[m] = (b, {v: i for i, v in enumerate(b)})
        return cache[m]

    def dim_rule(m):
        d = ring.size ** m
        if d > cap:
            raise ValueError("representable value exceeds cap")
        return d

    def act(h, m, m2):
        bs, _ = idx(m)
        b2, index2 = idx(m2)
        z, o = field.zero, field.one
        mat = [[z] * len(bs) for _ in range(len(b2))]
        for j, v in enumerate(bs):
            w = _compose(ring, h, v, m2, m, 1)
            mat[index2[w]][j] = o
        return Matrix(field, mat)
    return FunctorRep(ring, field, N, dim_rule, act, name="P")


def _field_of_ring(ring):
    if len(ring.components) != 1 or not hasattr(ring.components[0], "field"):
        raise ValueError("need a ring that is a single finite field")
    return ring.components[0].field


def grassmannian_functor(ring, field, N, r=1):
    """K[Gr_r]: free K-module on the r-dimensional subspaces of A^m,
    for A a finite field; a map sends a subspace class to the class of
    its image when the dimension survives and to zero otherwise."""
    kA = _field_of_ring(ring)

    def subspaces(m):
        out = []
        seen = set()
        if r > m:
            return out
        vecs = [v for v in product(kA.elements(), repeat=m)]
        for combo in product(vecs, repeat=r):
            sp = Subspace(kA, m, [list(v) for v in combo])
            if sp.dim != r:
                continue
            key = tuple(tuple(row) for row in sp.basis)
            if key not in seen:
                seen.add(key)
                out.append(sp)
        out.sort(key=lambda sp: tuple(tuple(r_) for r_ in sp.basis))
        return out

    cache = {}

    def idx(m):
        if m not in cache:
            sps = subspaces(m)
            cache[m] = (sps, {tuple(tuple(row) for row in sp.basis): i
                              for i, sp in enumerate(sps)})
        return cache[m]

    def act(h, m, m2):
        sps, _ = idx(m)
        sps2, index2 = idx(m2)
        if m == 0 or m2 == 0:
            return Matrix.zero(field, len(sps2), len(sps))
        hm = Matrix(kA, [[x[0] for x in row] for row in h])
        z, o = field.zero, field.one
        mat = [[z] * len(sps) for _ in range(len(sps2))]
        for j, sp in enumerate(sps):
            img = [hm.apply_to_vector(list(row)) for row in sp.basis]
            sp2 = Subspace(kA, m2, img)
            if sp2.dim == r:
                key = tuple(tuple(row) for row in sp2.basis)
                mat[index2[key]][j] = o
        return Matrix(field, mat)
    return FunctorRep(ring, field, N, lambda m: len(idx(m)[0]), act,
                      name=f"K[Gr_{r}]")


# -- cross effects and degrees -------------------------------------------

def _deletion_matrix(ring, d, i):
    """The map A^d -> A^(d-1) forgetting coordinate i."""
    rows = []
    for k in range(d):
        if k == i:
            continue
        rows.append(tuple(ring.one if j == k else ring.zero
                          for j in range(d)))
    return tuple(rows)


def cross_effect(F, d):
    """Dimension and basis of cr_d F(A,...,A) inside F(A^d): the joint
    kernel of the coordinate-deletion maps."""
    if d > F.N:
        raise ValueError(f"cross effect {d} exceeds truncation {F.N}")
    if d == 0:
        dim0 = F.dim(0)
        return dim0, Matrix.identity(F.field, dim0)
    stacked_rows = []
    for i in range(d):
        h = _deletion_matrix(F.ring, d, i)
        M = F.act_ranks(h, d, d - 1)
        stacked_rows.extend(M.rows)
    if not stacked_rows:
        dimd = F.dim(d)
        return dimd, Matrix.identity(F.field, dimd)
    big = Matrix(F.field, stacked_rows)
    ker = big.kernel_basis()
    return ker.nrows, ker


def cross_effect_check(F, d):
    """The binomial bookkeeping dim F(A^d) = sum_s C(d,s) dim cr_s."""
    total = 0
    for s in range(d + 1):
        cs, _ = cross_effect(F, s)
        total += comb(d, s) * cs
    return total == F.dim(d)


def polynomial_degree(F, cap):
    """Largest k with nonzero k-th cross effect, certified by a
    vanishing higher cross effect within the truncation; otherwise the
    NotPolynomialUpTo sentinel (vanishing of a cross effect forces all
    higher ones to vanish, so one zero certifies the degree)."""
    cap = min(cap, F.N)
    dims = [cross_effect(F, 0)[0]]
    for k in range(1, cap + 1):
        ck, _ = cross_effect(F, k)
        dims.append(ck)
        if ck == 0:
            # a vanishing cross effect (beyond the constant part) forces
            # all higher ones to vanish, so the degree is certified
            return max((j for j in range(k) if dims[j] != 0), default=0)
    return NotPolynomialUpTo(cap)


# -- dimension profiles --------------------------------------------------

def dimension_profile(F, fit=True):
    """Values d_F(0..N), with an optional polynomial fit in p^m."""
    values = F.dims()
    report = {"values": values, "fit": None, "fit_ok": None}
    if not fit:
        return report
    # fitting asks for a p-ring base
    size = F.ring.size
    p = None
    for q in (2, 3, 5, 7):
        e = 0
        n = size
        while n % q == 0:
            n //= q
            e += 1
        if n == 1:
            p = q
            break
    if p is None:
        report["fit_ok"] = False
        report["reason"] = "base ring is not a p-ring"
        return report
    N = F.N
    pts = [(QQ.coerce(p ** m), QQ.coerce(values[m])) for m in range(N)]
    coeffs = _lagrange_coeffs(pts)
    # verify on every rank including the held-out last one
    ok = all(_poly_val(coeffs, QQ.coerce(p ** m)) == values[m]
             for m in range(N + 1))
    report["fit"] = [str(c) for c in coeffs]
    report["fit_ok"] = ok
    return report


def _lagrange_coeffs(pts):
    n = len(pts)
    V = Matrix(QQ, [[x ** k for k in range(n)] for x, _ in pts])
    ys = [y for _, y in pts]
    sol = V.solve_right(ys)
    coeffs = list(sol)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_val(coeffs, x):
    v = QQ.zero
    for c in reversed(coeffs):
        v = v * x + c
    return v


# -- intermediate extensions ---------------------------------------------

class MonoidModule:
    """A K[M_n(A)]-module: an AlgebraModule whose generators follow the
    canonical generator list of the matrix monoid, together with a word
    table assigning an action matrix to every monoid element."""

    def __init__(self, ring, n, field, action_of, name=""):
        """action_of: element of M_n(A) (tuple form) -> Matrix."""
        self.ring = ring
        self.n = n
        self.field = field
        self.action_of = action_of
        gens = matrix_monoid_generators(ring, n)
        self.gen_elements = {f"g{i}": e for i, e in enumerate(gens)}
        self.module = AlgebraModule(
            field, {nm: action_of(e) for nm, e in self.gen_elements.items()},
            name=name)
        self.name = name

    @property
    def dimension(self):
        return self.module.dimension

    @staticmethod
    def from_character(ring, field, chi, name="chi"):
        """A one-dimensional module of M_1(A) from a multiplicative
        character chi: A -> K."""
        def action(e):
            return Matrix(field, [[chi(e[0][0])]])
        return MonoidModule(ring, 1, field, action, name=name)


def _full_action_table(mm):
    """Action matrix for every element of M_n(A), by monoid closure."""
    if hasattr(mm, "_table"):
        return mm._table
    ring, n = mm.ring, mm.n
    table = {}
    ident = ring_identity(ring, n)
    table[ident] = Matrix.identity(mm.field, mm.dimension)
    frontier = [ident]
    gen_pairs = [(mm.gen_elements[nm], mm.module.generators[nm])
                 for nm in sorted(mm.gen_elements)]
    while frontier:
        e = frontier.pop()
        act = table[e]
        for ge, ga in gen_pairs:
            e2 = mat_mul(ring, ge, e)
            if e2 not in table:
                table[e2] = ga * act
                frontier.append(e2)
    mm._table = table
    return table


def intermediate_extension_value(mm, m, hom_cap=200000):
    """T(M)(A^m) for a K[M_n(A)]-module M: the image of the canonical
    map K[Hom(A^n, A^m)] (x) M -> Maps(Hom(A^m, A^n), M), theta(f (x) v)
    sending g to rho(g o f) v.

    Returns (dimension, basis rows, dual_homs, ambient dim); the basis
    lives in the space of M-valued functions on Hom(A^m, A^n)."""
    ring, n, K = mm.ring, mm.n, mm.field
    table = _full_action_table(mm)
    homs_in = all_ring_homs_matrices(ring, n, m)    # f: A^n -> A^m
    homs_out = all_ring_homs_matrices(ring, m, n)   # g: A^m -> A^n
    if len(homs_out) * mm.dimension > hom_cap:
        raise ValueError("intermediate extension value exceeds cap")
    dm = mm.dimension
    ambient = len(homs_out) * dm
    sp = Subspace(K, ambient)
    for f in homs_in:
        cols = {}
        for gi, g in enumerate(homs_out):
            cols[gi] = table[_compose(ring, g, f, n, m, n)]
        for j in range(dm):
            vec = [K.zero] * ambient
            for gi in range(len(homs_out)):
                Mat = cols[gi]
                for i in range(dm):
                    vec[gi * dm + i] = Mat.rows[i][j]
            sp.add_vector(vec)
    return sp.dim, [list(r) for r in sp.basis], homs_out, ambient


def intermediate_extension_module(mm, m, hom_cap=200000):
    """T(M)(A^m) with its End(A^m)-action, as a MonoidModule."""
    ring, K = mm.ring, mm.field
    dim, basis, homs_out, ambient = \
        intermediate_extension_value(mm, m, hom_cap=hom_cap)
    dm = mm.dimension
    index = {g: i for i, g in enumerate(homs_out)}

    def big_action(e):
        # (e . phi)(g) = phi(g o e), so basis delta_(g0, j) goes to the
        # sum of delta_(g, j) over g with g o e = g0
        z, o = K.zero, K.one
        mat = [[z] * ambient for _ in range(ambient)]
        for gi, g in enumerate(homs_out):
            tgt = index[_compose(ring, g, e, mm.n, m, m)]
            for j in range(dm):
                mat[gi * dm + j][tgt * dm + j] = o
        return Matrix(K, mat)

    gens = matrix_monoid_generators(ring, m)
    big = AlgebraModule(K, {f"g{i}": big_action(e)
                            for i, e in enumerate(gens)})
    sub = restrict_to_submodule(big, basis) if dim else None

    def action_of(e):
        if dim == 0:
            return Matrix.zero(K, 0, 0)
        bigm = big_action(e)
        B = Matrix(K, basis).transpose()
        cols = []
        for row in basis:
            x = B.solve_right(bigm.apply_to_vector(list(row)))
            if x is None:
                raise ValueError("image not stable")
            cols.append(x)
        return Matrix(K, [list(r) for r in zip(*cols)])

    out = MonoidModule(ring, m, K, action_of,
                       name=f"T({mm.name})(A^{m})" if mm.name else "")
    if sub is not None:
        out.module = AlgebraModule(K, sub.generators, name=out.name)
    return out


def intermediate_extension_functor(mm, N, hom_cap=200000):
    """T(M) as a truncated FunctorRep."""
    ring, K = mm.ring, mm.field
    dm = mm.dimension
    table = _full_action_table(mm)
    cache = {}

    def value(m):
        if m not in cache:
            cache[m] = intermediate_extension_value(mm, m,
                                                    hom_cap=hom_cap)
        return cache[m]

    def dim_rule(m):
        return value(m)[0]

    def act(h, m, m2):
        d1, basis1, homs1, amb1 = value(m)
        d2, basis2, homs2, amb2 = value(m2)
        if d1 == 0 or d2 == 0:
            return Matrix.zero(K, d2, d1)
        index1 = {g: i for i, g in enumerate(homs1)}
        # phi in Maps(Hom(A^m, A^n), M) goes to g' -> phi(g' o h)
        cols = []
        B2 = Matrix(K, basis2).transpose()
        for row in basis1:
            out = [K.zero] * amb2
            for gi, g2 in enumerate(homs2):
                src = index1[_compose(ring, g2, h, mm.n, m2, m)]
                for j in range(dm):
                    out[gi * dm + j] = row[src * dm + j]
            x = B2.solve_right(out)
            if x is None:
                raise ValueError("functor action leaves the image")
            cols.append(x)
        return Matrix(K, [list(r) for r in zip(*cols)])

    return FunctorRep(ring, K, N, dim_rule, act,
                      name=f"T({mm.name})" if mm.name else "T(M)")


# -- tensor and unipotence -----------------------------------------------

def tensor_functors(F, G):
    if F.ring != G.ring or F.field is not G.field or F.N != G.N:
        raise ValueError("functor mismatch")

    def act(h, m, m2):
        return F.act_ranks(h, m, m2).kron(G.act_ranks(h, m, m2))
    return FunctorRep(F.ring, F.field, F.N,
                      lambda m: F.dim(m) * G.dim(m), act,
                      name=f"{F.name}(x){G.name}")


def _is_unipotent(M):
    F = M.field
    n = M.nrows
    N = M - Matrix.identity(F, n)
    return (N ** n).is_zero() if n else True


def unipotence_ideal(F, n):
    """I = {a in A : F(u[a] + id_{A^n}) is unipotent}, where u[a] is the
    2 x 2 elementary matrix with a below the diagonal; closure under
    addition and multiplication is verified, and the result is returned
    as a materialized ideal."""
    ring = F.ring
    m = 2 + n
    if m > F.N:
        raise ValueError("truncation too small for the unipotence test")
    members = []
    for a in ring.elements():
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                if i == j:
                    row.append(ring.one)
                elif (i, j) == (1, 0):
                    row.append(a)
                else:
                    row.append(ring.zero)
            rows.append(tuple(row))
        M = F.act_ranks(tuple(rows), m, m)
        if _is_unipotent(M):
            members.append(a)
    mem = set(members)
    for a in members:
        for b in members:
            if ring.add(a, b) not in mem:
                raise RuntimeError("unipotence locus not closed under +")
    for a in members:
        for r in ring.elements():
            if ring.mul(r, a) not in mem:
                raise RuntimeError("unipotence locus is not an ideal")
    for I in all_ideals(ring):
        if I.elements == frozenset(mem):
            return I
    raise RuntimeError("unipotence locus matches no ideal")


def ideal_is_cotrivial(F, ideal):
    return ideal in cotrivial_ideals(F.ring, F.field)


# -- simplicity ----------------------------------------------------------

def functor_value_module(F, m):
    """F(A^m) as a module over the monoid M_m(A)."""
    def action_of(e):
        return F.act_ranks(e, m, m)
    return MonoidModule(F.ring, m, F.field, action_of,
                        name=f"{F.name}(A^{m})" if F.name else "")


def simplicity_test(F, n, seed=0, hom_cap=200000):
    """True iff F(A^n) is simple over K[M_n(A)] and F agrees with the
    intermediate extension of that value at every rank up to the
    truncation; a failed agreement is inconclusive and raises."""
    mm = functor_value_module(F, n)
    if mm.dimension == 0:
        raise ValueError("zero value at the support rank")
    if not is_simple(mm.module, seed=seed):
        return False
    T = intermediate_extension_functor(mm, F.N, hom_cap=hom_cap)
    for m in range(F.N + 1):
        if F.dim(m) != T.dim(m):
            raise NotIntermediateExtension(
                f"value dimension differs from the canonical extension "
                f"at rank {m}: {F.dim(m)} vs {T.dim(m)}")
        if F.dim(m) == 0 or m == 0:
            # the rank-0 monoid is trivial, so equal dimensions settle it
            continue
        FM = functor_value_module(F, m)
        TM = functor_value_module(T, m)
        if not are_isomorphic(FM.module, TM.module, seed=seed):
            raise NotIntermediateExtension(
                f"value modules disagree at rank {m}")
    return True

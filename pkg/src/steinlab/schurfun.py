"""Schur and elementary functors evaluated on K^n.

Representations of the multiplicative monoid M_n(K) are stored on a
fixed generating set: the torus generator diag(z,1,...,1) for a
multiplicative generator z, a transvection, permutations, and the
corank-one idempotent diag(1,...,1,0).  Over Q the same matrices (with
z = 2) are kept even though they only generate a submonoid; every
construction here acts through explicit matrices, so nothing requires
full enumeration.
"""

from itertools import combinations, combinations_with_replacement, \
    permutations, product

from .fields import Field
from .matrices import Matrix, Subspace
from .modtools import (AlgebraModule, are_isomorphic, restrict_to_submodule,
                       socle as _socle_rows, is_simple)
from .symgrp import (conjugate, normalize_partition, is_p_restricted,
                     specht_module, simple_module)


class FieldTooSmall(ValueError):
    pass


DEFAULT_DIM_CAP = 4096


class GLRep(AlgebraModule):
    """An M_n(K)-representation on named monoid generators."""

    def __init__(self, rank, field, generators, labels=None, name="",
                 degree=None):
        super().__init__(field, generators, labels=labels, name=name)
        self.rank = rank
        self.degree = degree

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return (f"GLRep(rank {self.rank},{tag} dim {self.dimension} "
                f"over {self.field.label()})")


def monoid_generator_elements(n, K):
    """The fixed generating elements of M_n(K) as matrices, by name."""
    z = K.gen()
    gens = {}
    gens["d"] = Matrix(K, [[z if i == j == 0 else
                            (K.one if i == j else K.zero)
                            for j in range(n)] for i in range(n)])
    gens["e"] = Matrix(K, [[K.one if i == j and i < n - 1 else K.zero
                            for j in range(n)] for i in range(n)])
    if n >= 2:
        gens["t"] = Matrix(K, [[K.one if i == j else
                                (K.one if (i, j) == (0, 1) else K.zero)
                                for j in range(n)] for i in range(n)])
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        gens["s"] = Matrix(K, [[K.one if swap[i] == j else K.zero
                                for j in range(n)] for i in range(n)])
    if n >= 3:
        cyc = [(i + 1) % n for i in range(n)]
        gens["c"] = Matrix(K, [[K.one if cyc[j] == i else K.zero
                                for j in range(n)] for i in range(n)])
    return gens


def _tensor_power(g, d):
    out = Matrix.identity(g.field, 1)
    for _ in range(d):
        out = out.kron(g)
    return out


def _perm_on_tensor(K, n, d, perm):
    """Matrix of sigma on (K^n)^{tensor d}: slot k of the output receives
    factor sigma^{-1}(k); perm in one-line notation on 1..d."""
    N = n ** d
    inv = [0] * d
    for i in range(d):
        inv[perm[i] - 1] = i  # inv[k] = sigma^{-1}(k+1) - 1
    rows = []
    z, o = K.zero, K.one
    # basis tuple index: lexicographic, i = sum t_k n^(d-1-k)
    mat = [[z] * N for _ in range(N)]
    for idx in range(N):
        t = []
        x = idx
        for _ in range(d):
            t.append(x % n)
            x //= n
        t.reverse()
        u = [t[inv[k]] for k in range(d)]
        j = 0
        for x in u:
            j = j * n + x
        mat[j][idx] = o
    return Matrix(K, mat)


def elementary_value(M, n, K, cap=DEFAULT_DIM_CAP):
    """Image of the norm (the sum of all of S_d) acting on
    (K^n)^{tensor d} tensor M, with the monoid acting by g^{tensor d}."""
    d = M.degree
    if M.field is not K:
        raise ValueError("module field mismatch")
    dim_big = n ** d * M.dimension
    if dim_big > cap:
        raise ValueError(f"dimension {dim_big} exceeds cap {cap}")
    # accumulate the norm columnwise: the (t, m) column picks up, for
    # each sigma, the m-th column of sigma on M placed in block sigma(t)
    dm = M.dimension
    add = K.add
    norm_rows = [[K.zero] * dim_big for _ in range(dim_big)]
    tuples = list(product(range(n), repeat=d))
    tindex = {t: i for i, t in enumerate(tuples)}
    for perm in permutations(range(1, d + 1)):
        inv = [0] * d
        for i in range(d):
            inv[perm[i] - 1] = i
        Msig = M.perm_matrix(perm)
        for ti, t in enumerate(tuples):
            u = tindex[tuple(t[inv[k]] for k in range(d))]
            for a in range(dm):
                row = norm_rows[u * dm + a]
                mrow = Msig.rows[a]
                for m in range(dm):
                    c = mrow[m]
                    if c != K.zero:
                        col = ti * dm + m
                        row[col] = add(row[col], c)
    norm = Matrix(K, norm_rows)
    basis = norm.column_space_basis()
    elements = monoid_generator_elements(n, K)
    big = AlgebraModule(K, {nm: _tensor_power(g, d).kron(
        Matrix.identity(K, M.dimension)) for nm, g in elements.items()})
    if basis.nrows == 0:
        zero = Matrix.zero(K, 0, 0)
        return GLRep(n, K, {nm: zero for nm in elements},
                     labels=elements, name=f"E_{M.name}", degree=d)
    sub = restrict_to_submodule(big, [list(r) for r in basis.rows])
    return GLRep(n, K, sub.generators, labels=elements,
                 name=f"E_{M.name}(K^{n})", degree=d)


# -- Schur functors ------------------------------------------------------

def _sym_basis(n, lam):
    """Basis of Sym^{lam_1} x ... : tuples of weakly increasing tuples."""
    per_row = [list(combinations_with_replacement(range(n), li))
               for li in lam]
    return [tuple(c) for c in product(*per_row)]


def _schur_image_vectors(lam, n, K):
    """Images in the symmetric-power product of the antisymmetrizer
    basis of the exterior-power product, routed through the tableau:
    column j of the diagram carries a strictly increasing choice of
    rows of K^n, alternating over column permutations, and each row of
    the diagram is then symmetrized by sorting."""
    lam = normalize_partition(lam)
    conj = conjugate(lam)
    sym = _sym_basis(n, lam)
    index = {b: i for i, b in enumerate(sym)}
    vectors = []
    col_choices = [list(combinations(range(n), c)) for c in conj]
    for choice in product(*col_choices):
        v = [K.zero] * len(sym)
        per_col = []
        for subset in choice:
            per_col.append([(pi, _sign(subset, pi))
                            for pi in permutations(subset)])
        for combo in product(*per_col):
            # cell (i, j) gets combo[j][0][i]
            sign = 1
            for _, s in combo:
                sign *= s
            key = []
            ok = True
            for i, li in enumerate(lam):
                row = tuple(sorted(combo[j][0][i] for j in range(li)))
                key.append(row)
            idx = index[tuple(key)]
            c = K.one if sign > 0 else K.neg(K.one)
            v[idx] = K.add(v[idx], c)
        vectors.append(v)
    return sym, vectors


def _sign(src, dst):
    inv = 0
    pos = {x: i for i, x in enumerate(src)}
    arr = [pos[x] for x in dst]
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            if arr[i] > arr[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _sym_action(n, lam, K, g, sym, index):
    """Matrix of g on the symmetric-power product space."""
    cols = []
    z = K.zero
    for basis in sym:
        col = [z] * len(sym)
        # expand g acting on a lift of the multiset basis vector
        flat = [x for row in basis for x in row]
        terms = [(K.one, [])]
        for x in flat:
            new = []
            for coeff, prefix in terms:
                for i in range(n):
                    c = g.rows[i][x]
                    if c != z:
                        new.append((K.mul(coeff, c), prefix + [i]))
            terms = new
        for coeff, flat2 in terms:
            key = []
            k = 0
            for li in lam:
                key.append(tuple(sorted(flat2[k:k + li])))
                k += li
            idx = index[tuple(key)]
            col[idx] = K.add(col[idx], coeff)
        cols.append(col)
    return Matrix(K, [list(r) for r in zip(*cols)])


def schur_value(lam, n, K, cap=DEFAULT_DIM_CAP):
    """The Schur module S_lam(K^n) with its M_n(K)-action; zero when the
    diagram has more rows than n."""
    lam = normalize_partition(lam)
    d = sum(lam)
    if n ** max(d, 1) > cap * 16:
        raise ValueError("cap exceeded")
    elements = monoid_generator_elements(n, K)
    if lam and len(lam) > n:
        zero = Matrix.zero(K, 0, 0)
        return GLRep(n, K, {nm: zero for nm in elements},
                     labels=elements, name=f"S_{lam}", degree=d)
    sym, vectors = _schur_image_vectors(lam, n, K)
    index = {b: i for i, b in enumerate(sym)}
    sp = Subspace(K, len(sym), vectors)
    if sp.dim == 0:
        zero = Matrix.zero(K, 0, 0)
        return GLRep(n, K, {nm: zero for nm in elements},
                     labels=elements, name=f"S_{lam}", degree=d)
    big = AlgebraModule(K, {nm: _sym_action(n, lam, K, g, sym, index)
                            for nm, g in elements.items()})
    sub = restrict_to_submodule(big, [list(r) for r in sp.basis])
    return GLRep(n, K, sub.generators, labels=elements,
                 name=f"S_{lam}(K^{n})", degree=d)


def socle_simple(lam, n, K, cap=DEFAULT_DIM_CAP, seed=0):
    """L_lam(K^n): the socle of the Schur module, simple for p-restricted
    lam in characteristic p (and all of S_lam in characteristic 0)."""
    lam = normalize_partition(lam)
    p = K.char
    if p == 0:
        return schur_value(lam, n, K, cap=cap)
    if not is_p_restricted(lam, p):
        raise ValueError(f"{lam} is not {p}-restricted")
    S = schur_value(lam, n, K, cap=cap)
    if S.dimension == 0:
        return S
    rows = _socle_rows(S, seed=seed)
    sub = restrict_to_submodule(S, rows)
    return GLRep(n, K, sub.generators, labels=S.labels,
                 name=f"L_{lam}(K^{n})", degree=S.degree)


# -- weights -------------------------------------------------------------

def _torus_matrices(rep):
    """Representation matrices of diag(1,...,z,...,1) for each slot."""
    n = rep.rank
    gens = rep.generators
    D1 = gens["d"]
    out = [D1]
    if n == 1:
        return out
    # transposition (1 i) as a word in s and the cycle c
    s = gens["s"]
    c = gens.get("c")
    K = rep.field
    ident = Matrix.identity(K, rep.dimension)
    cinv = None
    if c is not None:
        cinv = c
        for _ in range(n - 2):
            cinv = cinv * c
    adj = []  # adjacent transpositions sigma_k = (k, k+1), 1-based k
    for k in range(1, n):
        if k == 1:
            adj.append(s)
        else:
            # sigma_{k+1} = c sigma_k c^{-1} for the cycle x -> x+1
            w = c * adj[-1] * cinv if c is not None else s
            adj.append(w)
    for i in range(2, n + 1):
        w = ident
        for k in range(i - 1, 0, -1):
            w = w * adj[k - 1]
        for k in range(2, i):
            w = w * adj[k - 1]
        # w is now (1 i); conjugate D1
        out.append(w * D1 * w)
    return out


def highest_weight(rep, degree=None):
    """Lexicographically maximal simultaneous torus weight.

    For a finite field of size q, weights are read off as discrete
    logarithms of eigenvalues of the torus generators, so q - 1 must
    exceed the polynomial degree for the answer to be unambiguous.
    """
    K = rep.field
    d = degree if degree is not None else rep.degree
    if d is None:
        raise ValueError("polynomial degree required for weight bounds")
    if K.order is not None and K.order - 1 <= d:
        raise FieldTooSmall(
            f"need field size q with q-1 > {d}, got q={K.order}")
    z = K.gen()
    torus = _torus_matrices(rep)
    powers = [K.one]
    for _ in range(d):
        powers.append(K.mul(powers[-1], z))
    spaces = [[list(r) for r in
               Matrix.identity(K, rep.dimension).rows]]
    weights = [()]
    for D in torus:
        new_spaces, new_weights = [], []
        for rows, w in zip(spaces, weights):
            sub = restrict_to_submodule(
                AlgebraModule(K, {"D": D}), rows)
            R = sub.generators["D"]
            for k, val in enumerate(powers):
                shifted = R - Matrix.identity(K, R.nrows).scale(val)
                ker = shifted.kernel_basis()
                if ker.nrows == 0:
                    continue
                B = Matrix(K, rows)
                vecs = [Matrix(K, [list(kr)]) * B for kr in ker.rows]
                new_spaces.append([v.rows[0] for v in vecs])
                new_weights.append(w + (k,))
        spaces, weights = new_spaces, new_weights
    total = sum(len(rows) for rows in spaces)
    if total != rep.dimension:
        raise FieldTooSmall("weight spaces do not fill the module; "
                            "eigenvalues escape the expected powers")
    if not weights:
        raise ValueError("zero representation has no weights")
    return max(weights)


def weight_multiplicities(rep, degree=None):
    """All torus weights with multiplicities, as a sorted list."""
    K = rep.field
    d = degree if degree is not None else rep.degree
    torus = _torus_matrices(rep)
    z = K.gen()
    powers = [K.one]
    for _ in range(d):
        powers.append(K.mul(powers[-1], z))
    spaces = [([list(r) for r in Matrix.identity(K, rep.dimension).rows],
               ())]
    for D in torus:
        nxt = []
        for rows, w in spaces:
            sub = restrict_to_submodule(AlgebraModule(K, {"D": D}), rows)
            R = sub.generators["D"]
            for k, val in enumerate(powers):
                ker = (R - Matrix.identity(K, R.nrows).scale(val)) \
                    .kernel_basis()
                if ker.nrows == 0:
                    continue
                B = Matrix(K, rows)
                vecs = [(Matrix(K, [list(kr)]) * B).rows[0]
                        for kr in ker.rows]
                nxt.append((vecs, w + (k,)))
        spaces = nxt
    out = {}
    for rows, w in spaces:
        out[w] = out.get(w, 0) + len(rows)
    return sorted(out.items(), reverse=True)


# -- twists and special modules ------------------------------------------

def det_rep(n, K):
    """Top exterior power: the determinant character of M_n(K)."""
    return schur_value((1,) * n, n, K)


def delta_rep(n, K):
    """The unit-indicator character: 1 on invertible elements, 0 on the
    corank-one idempotent (and hence all singular elements)."""
    elements = monoid_generator_elements(n, K)
    one = Matrix.identity(K, 1)
    zero_m = Matrix(K, [[K.zero]])
    gens = {nm: zero_m if nm == "e" else one for nm in elements}
    return GLRep(n, K, gens, labels=elements, name="delta", degree=0)


def tensor_glrep(a, b):
    if a.rank != b.rank or a.field is not b.field:
        raise ValueError("rank/field mismatch")
    gens = {nm: a.generators[nm].kron(b.generators[nm])
            for nm in a.gen_names()}
    deg = None
    if a.degree is not None and b.degree is not None:
        deg = a.degree + b.degree
    return GLRep(a.rank, a.field, gens, labels=a.labels,
                 name=f"{a.name}(x){b.name}", degree=deg)


def det_twist_check(lam, n, K, seed=0):
    """Verify L_lam = L_{lam - (1,...,1)} (x) det and L_lam = L_lam (x)
    delta as M_n(K)-modules; lam must have n positive parts."""
    lam = normalize_partition(lam)
    if len(lam) != n or lam[-1] < 1:
        raise ValueError("need a partition with n positive parts")
    mu = tuple(x - 1 for x in lam)
    L_lam = socle_simple(lam, n, K, seed=seed)
    L_mu = socle_simple(mu, n, K, seed=seed) if any(mu) else None
    det = det_rep(n, K)
    if L_mu is None:
        rhs = det
    else:
        rhs = tensor_glrep(L_mu, det)
    ok1 = are_isomorphic(L_lam, rhs, seed=seed)
    ok2 = are_isomorphic(L_lam, tensor_glrep(L_lam, delta_rep(n, K)),
                         seed=seed)
    return ok1 and ok2


# -- independent oracles -------------------------------------------------

def semistandard_count(lam, n):
    """Number of semistandard tableaux of shape lam with entries in
    1..n, by direct enumeration (the char-0 dimension of S_lam)."""
    lam = normalize_partition(lam)
    if not lam:
        return 1
    if len(lam) > n:
        return 0
    rows = len(lam)

    def rec(cells):
        # cells: filled rows so far as lists
        i = len(cells)
        if i == rows:
            yield 1
            return
        for row in product(range(1, n + 1), repeat=lam[i]):
            if any(a > b for a, b in zip(row, row[1:])):
                continue
            if i > 0 and any(cells[i - 1][j] >= row[j]
                             for j in range(lam[i])):
                continue
            yield from rec(cells + [list(row)])
    return sum(rec([]))

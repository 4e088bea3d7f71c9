"""Simple modules of GL_n(F_q) by digit decomposition: each q-restricted
partition is split into p-adic digit partitions, the corresponding
socle-simple modules are Frobenius-twisted and tensored, and the result
is restricted to a generating set of GL_n(F_q).  Classification is
cross-checked against a conjugacy-class count obtained by direct group
enumeration, independent of all representation code.
"""

from math import gcd

from .fields import Field, MAX_DEGREE
from .matrices import Matrix
from .modtools import (AlgebraModule, are_isomorphic, composition_factors,
                       end_dim, frobenius_twist, is_simple, tensor)
from .schurfun import socle_simple
from .symgrp import (digit_decomposition, is_q_restricted,
                     normalize_partition)

CLASSIFY_CAPS = {(2, 2), (2, 4), (3, 2)}  # plus (1, q) for q <= 9


def _factor_pe(q):
    for p in (2, 3, 5, 7):
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"unsupported prime-power {q}")


def _check_caps(n, q):
    if (n, q) in CLASSIFY_CAPS:
        return
    if n == 1 and q <= 9:
        return
    raise ValueError(f"classification cap exceeded for (n, q) = ({n}, {q})")


class SteinbergDatum:
    """A q-restricted partition, its p-adic digit partitions, and the
    module of GL_n(F_q) they assemble to."""

    def __init__(self, n, q, lam, digits, module, field):
        self.n = n
        self.q = q
        self.p, self.r = _factor_pe(q)
        self.lam = lam
        self.digits = digits
        self.module = module
        self.field = field

    @property
    def dimension(self):
        return self.module.dimension

    def __repr__(self):
        return (f"SteinbergDatum(lambda={self.lam}, n={self.n}, "
                f"q={self.q}, dim={self.dimension})")


def group_generator_names(n):
    if n == 1:
        return ["d"]
    if n == 2:
        return ["d", "t", "s"]
    return ["d", "t", "s", "c"]


def group_generator_matrices(n, q, K):
    """Generators of GL_n(F_q) inside GL_n(K): the diagonal with a
    chosen generator of F_q^x, a transvection, and permutations."""
    p, e = _factor_pe(q)
    if K.char != p or K.degree % e != 0:
        raise ValueError(f"{K.label()} does not contain F_{q}")
    j = (K.order - 1) // (q - 1) if q > 2 else 0
    zq = K.pow(K.gen(), j) if q > 2 else K.one
    out = {}
    out["d"] = Matrix(K, [[zq if i == jj == 0 else
                           (K.one if i == jj else K.zero)
                           for jj in range(n)] for i in range(n)])
    if n >= 2:
        out["t"] = Matrix(K, [[K.one if i == jj or (i, jj) == (0, 1)
                               else K.zero
                               for jj in range(n)] for i in range(n)])
        perm = list(range(n))
        perm[0], perm[1] = perm[1], perm[0]
        out["s"] = Matrix(K, [[K.one if perm[i] == jj else K.zero
                               for jj in range(n)] for i in range(n)])
    if n >= 3:
        cyc = [(i + 1) % n for i in range(n)]
        out["c"] = Matrix(K, [[K.one if cyc[i] == jj else K.zero
                               for jj in range(n)] for i in range(n)])
    return out


def build(lam, n, q, K=None, seed=0):
    """The simple GL_n(F_q)-module attached to a q-restricted partition:
    the tensor product over i of the i-fold Frobenius twist of the
    socle-simple module of the i-th digit partition, restricted to the
    group generators."""
    p, e = _factor_pe(q)
    if K is None:
        K = splitting_field(n, q)
    if K.char != p or K.degree % e != 0:
        raise ValueError(f"{K.label()} does not contain F_{q}")
    lam = normalize_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if not is_q_restricted(lam, q):
        raise ValueError(f"{lam} is not {q}-restricted")
    padded = tuple(lam) + (0,) * (n - len(lam))
    digits = [tuple(dg) + (0,) * (n - len(dg))
              for dg in digit_decomposition(padded, p, e)]
    names = group_generator_names(n)
    j = (K.order - 1) // (q - 1)
    restricted = []
    for i, dg in enumerate(digits):
        Li = socle_simple(dg, n, K, seed=seed)
        twisted = frobenius_twist(Li, i) if i else Li
        gens = {}
        for nm in names:
            g = twisted.generators[nm] if nm in twisted.generators \
                else twisted.generators["d"]
            if nm == "d":
                g = g ** j if j else Matrix.identity(K, twisted.dimension)
            gens[nm] = g
        restricted.append(AlgebraModule(K, gens))
    module = restricted[0]
    for piece in restricted[1:]:
        module = tensor(module, piece)
    labels = group_generator_matrices(n, q, K)
    module = AlgebraModule(K, module.generators,
                           labels={nm: labels[nm] for nm in names},
                           name=f"L_{lam}(F_{q}^{n})")
    expected = 1
    for i, dg in enumerate(digits):
        expected *= socle_simple(dg, n, K, seed=seed).dimension
    if module.dimension != expected:
        raise RuntimeError("dimension is not multiplicative over digits")
    return SteinbergDatum(n, q, lam, digits, module, K)


# -- the independent group-theoretic oracle ------------------------------

def group_elements(n, q):
    """All of GL_n(F_q), as matrices over F_q, by exhaustion."""
    from itertools import product as iproduct
    Fq = Field.of_order(q)
    els = Fq.elements()
    out = []
    for combo in iproduct(els, repeat=n * n):
        M = Matrix(Fq, [[combo[i * n + jj] for jj in range(n)]
                        for i in range(n)])
        if M.is_invertible():
            out.append(M)
    return out


def element_order(g):
    ident = Matrix.identity(g.field, g.nrows)
    k = 1
    h = g
    while h != ident:
        h = h * g
        k += 1
    return k


def group_exponent(n, q):
    exp = 1
    for g in group_elements(n, q):
        o = element_order(g)
        exp = exp * o // gcd(exp, o)
    return exp


def p_regular_class_count(n, q):
    """Number of conjugacy classes of elements of order prime to p,
    counted by direct orbit enumeration."""
    p, _ = _factor_pe(q)
    G = group_elements(n, q)
    regular = [g for g in G if element_order(g) % p != 0]
    inverses = {}
    for g in G:
        inverses[g] = g.inverse()
    seen = set()
    count = 0
    for g in regular:
        key = tuple(tuple(r) for r in g.rows)
        if key in seen:
            continue
        count += 1
        for h in G:
            c = h * g * inverses[h]
            seen.add(tuple(tuple(r) for r in c.rows))
    return count


def splitting_field(n, q):
    """F_{q^s} with s minimal such that the p'-part of the group
    exponent divides q^s - 1; falls back to F_q itself when the needed
    degree exceeds the supported range (the representatives happen to be
    absolutely simple over F_q in the capped cases where that occurs)."""
    p, e = _factor_pe(q)
    exp = group_exponent(n, q)
    while exp % p == 0:
        exp //= p
    s = 1
    while e * s <= MAX_DEGREE:
        if (q ** s - 1) % exp == 0:
            return Field.of_order(q ** s)
        s += 1
    return Field.of_order(q)


# -- classification ------------------------------------------------------

def q_restricted_representatives(n, q):
    """One representative per identification class lambda ~ lambda +
    (q-1, ..., q-1): the q-restricted partitions with at most n parts
    whose last part stays below q - 1 (a last part of q - 1 is the
    shifted copy of a last part of zero)."""
    from itertools import product as iproduct
    out = []
    for last in range(q - 1):
        for diffs in iproduct(range(q), repeat=n - 1):
            lam = [0] * n
            lam[n - 1] = last
            for i in range(n - 2, -1, -1):
                lam[i] = lam[i + 1] + diffs[i]
            out.append(tuple(lam))
    return sorted(set(out))


def classify(n, q, K=None, seed=0):
    """All iso-classes of simple GL_n(F_q)-modules, as SteinbergDatum
    objects in lexicographic partition order; simplicity, pairwise
    non-isomorphism, scalar endomorphisms, and agreement with the
    p-regular class count are all asserted."""
    _check_caps(n, q)
    if K is None:
        K = splitting_field(n, q)
    reps = q_restricted_representatives(n, q)
    data = [build(lam, n, q, K, seed=seed) for lam in reps]
    for d in data:
        if not is_simple(d.module, seed=seed):
            raise RuntimeError(f"module for {d.lam} is not simple")
        if end_dim(d.module) != 1:
            raise RuntimeError(f"module for {d.lam} is not absolutely "
                               f"simple over {K.label()}")
    for i in range(len(data)):
        for jj in range(i + 1, len(data)):
            if are_isomorphic(data[i].module, data[jj].module, seed=seed):
                raise RuntimeError(
                    f"modules for {data[i].lam} and {data[jj].lam} "
                    f"coincide")
    oracle = p_regular_class_count(n, q)
    if len(data) != oracle:
        raise RuntimeError(
            f"found {len(data)} classes but the group has {oracle} "
            f"p-regular conjugacy classes")
    return data


def classify_table(n, q, K=None, seed=0):
    """TSV-ready rows (lambda, digits, dim, simple?, class-id)."""
    data = classify(n, q, K=K, seed=seed)
    rows = []
    for i, d in enumerate(data):
        rows.append((",".join(str(x) for x in d.lam),
                     ";".join(",".join(str(x) for x in dg)
                              for dg in d.digits),
                     str(d.dimension), "yes", str(i)))
    return rows


def group_algebra_simples(n, q, K, seed=0):
    """Distinct simple modules of K[GL_n(F_q)] obtained by brute-force
    decomposition of the regular representation; an oracle independent
    of the digit machinery."""
    G = group_elements(n, q)
    index = {g: i for i, g in enumerate(G)}
    Fq = G[0].field
    emb = K.embedding_from(Fq) if K is not Fq else (lambda x: x)
    names = group_generator_names(n)
    gen_mats = group_generator_matrices(n, q, K)

    def perm_matrix(gname):
        gq = Matrix(Fq, [[_unembed(Fq, K, gen_mats[gname].rows[i][jj], emb)
                          for jj in range(n)] for i in range(n)])
        z, o = K.zero, K.one
        rows = [[z] * len(G) for _ in range(len(G))]
        for g in G:
            rows[index[gq * g]][index[g]] = o
        return Matrix(K, rows)

    reg = AlgebraModule(K, {nm: perm_matrix(nm) for nm in names})
    factors = composition_factors(reg, seed=seed)
    distinct = []
    for f in factors:
        if not any(are_isomorphic(f, d, seed=seed) for d in distinct):
            distinct.append(f)
    return distinct


def _unembed(Fq, K, value, emb):
    for x in Fq.elements():
        if emb(x) == value:
            return x
    raise ValueError("value is not in the subfield")


# -- uniqueness ----------------------------------------------------------

def uniqueness_check(lam, lam2, n, q, K=None, seed=0):
    """Builds both modules; when they are isomorphic, verifies that the
    digit sequences agree or differ coherently by the determinant-power
    twist (every digit shifted by (p-1, ..., p-1) the same way)."""
    a = build(lam, n, q, K, seed=seed)
    b = build(lam2, n, q, a.field, seed=seed)
    iso = are_isomorphic(a.module, b.module, seed=seed)
    p = a.p
    shift = tuple(p - 1 for _ in range(n))
    relation = None
    if a.digits == b.digits:
        relation = "equal"
    else:
        deltas = set()
        ok = True
        for da, db in zip(a.digits, b.digits):
            dd = tuple(y - x for x, y in zip(da, db))
            if dd == (0,) * n:
                ok = False
                break
            deltas.add(dd)
        if ok and (deltas == {shift} or
                   deltas == {tuple(-x for x in shift)}):
            relation = "det^(p-1) twist"
    consistent = (not iso) or relation is not None
    return {"isomorphic": iso, "relation": relation if iso else None,
            "consistent": consistent}


# -- product rings -------------------------------------------------------

def product_decompose(M, names1, names2, seed=0):
    """Split a simple module of a product group G1 x G2 into simple
    factor modules: restrict to each factor, check the restriction is
    isotypic, and verify the outer tensor of the isotypic pieces
    recovers the module."""
    if not is_simple(M, seed=seed):
        raise ValueError("module is not simple")
    pieces = []
    for names in (names1, names2):
        res = AlgebraModule(M.field, {nm: M.generators[nm]
                                      for nm in names})
        factors = composition_factors(res, seed=seed)
        first = factors[0]
        for f in factors[1:]:
            if not are_isomorphic(first, f, seed=seed):
                raise RuntimeError("restriction is not isotypic")
        pieces.append(first)
    m1, m2 = pieces
    gens = {}
    i2 = Matrix.identity(M.field, m2.dimension)
    i1 = Matrix.identity(M.field, m1.dimension)
    for nm in names1:
        gens[nm] = m1.generators[nm].kron(i2)
    for nm in names2:
        gens[nm] = i1.kron(m2.generators[nm])
    outer = AlgebraModule(M.field, gens)
    if not are_isomorphic(M, outer, seed=seed):
        raise RuntimeError("outer tensor of the factors misses the "
                           "module")
    return m1, m2

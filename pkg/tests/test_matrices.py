from fractions import Fraction

from steinlab.fields import Field, QQ
from steinlab.matrices import Matrix, Subspace, kernel_basis, rref


def test_rank_nullity():
    F = Field.prime(5)
    M = Matrix.from_ints(F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert M.rank() + M.kernel_basis().nrows == 3


def test_rref_idempotent():
    F = Field.galois(2, 2)
    M = Matrix.from_ints(F, [[1, 2, 3], [2, 3, 1], [1, 1, 1]])
    R, piv = M.rref()
    R2, piv2 = R.rref()
    assert R == R2 and piv == piv2


def test_inverse_roundtrip():
    F = Field.prime(3)
    M = Matrix.from_ints(F, [[1, 2, 0], [0, 1, 1], [0, 0, 1]])
    ident = Matrix.identity(F, 3)
    assert M * M.inverse() == ident
    assert M.inverse() * M == ident


def test_rational_fraction_free_agrees_with_generic():
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(5), Fraction(7)],
            [Fraction(1), Fraction(1), Fraction(1)]]
    M = Matrix(QQ, rows)
    assert M.rank() == 3
    assert M * M.inverse() == Matrix.identity(QQ, 3)


def test_kernel_vectors_annihilate():
    F = Field.prime(7)
    M = Matrix.from_ints(F, [[1, 2, 3, 4], [2, 4, 6, 1]])
    K = M.kernel_basis()
    for row in K.rows:
        assert all(x == F.zero for x in M.apply_to_vector(list(row)))


def test_kron_mixed_product():
    F = Field.prime(3)
    A = Matrix.from_ints(F, [[1, 2], [0, 1]])
    B = Matrix.from_ints(F, [[2, 1], [1, 1]])
    C = Matrix.from_ints(F, [[1, 1], [2, 0]])
    D = Matrix.from_ints(F, [[0, 1], [1, 2]])
    assert (A * C).kron(B * D) == A.kron(B) * C.kron(D)


def test_solve_right():
    F = Field.prime(5)
    M = Matrix.from_ints(F, [[1, 1], [0, 2]])
    x = M.solve_right([3, 4])
    assert M.apply_to_vector(x) == [3, 4]
    singular = Matrix.from_ints(F, [[1, 1], [2, 2]])
    assert singular.solve_right([1, 0]) is None


def test_json_roundtrip():
    F = Field.galois(3, 2)
    M = Matrix(F, [[F.gen(), F.one], [F.zero, F.gen()]])
    assert Matrix.from_json(M.to_json()) == M
    Q = Matrix(QQ, [[Fraction(1, 2), Fraction(-3)]])
    assert Matrix.from_json(Q.to_json()) == Q


def test_subspace_membership_and_intersection():
    F = Field.prime(2)
    sp = Subspace(F, 3, [[1, 1, 0], [0, 1, 1]])
    assert sp.dim == 2
    assert sp.contains([1, 0, 1])
    other = Subspace(F, 3, [[1, 0, 1]])
    meet = sp.intersect(other)
    assert meet.dim == 1


def test_module_level_helpers():
    F = Field.prime(3)
    M = Matrix.from_ints(F, [[1, 2], [2, 4]])
    R, piv = rref(M)
    assert len(piv) == 1
    assert kernel_basis(M).dim == 1

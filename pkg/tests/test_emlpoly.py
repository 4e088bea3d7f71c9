from fractions import Fraction

import pytest

from steinlab import emlpoly as ep
from steinlab.fields import Field, QQ
from steinlab.rings import FiniteRing


def window_map(window, func):
    Z = ep.AbGroup(window=window)
    return ep.AbMap(Z, QQ, func=func)


def test_second_deviation_of_square_is_bilinear():
    f = window_map(40, lambda u: Fraction(u * u))
    dev = ep.deviation(f, 2)
    assert dev(3, 4) == 24  # 2uv
    assert dev(1, 1) == 2
    assert ep.deviation_vanishes(f, 3)
    assert not ep.deviation_vanishes(f, 2)


def test_third_deviation_of_cube():
    f = window_map(60, lambda u: Fraction(u ** 3))
    dev = ep.deviation(f, 3)
    # 6uvw on the cube
    assert dev(1, 2, 3) == 36
    assert ep.deviation_vanishes(f, 4)


def test_deviation_symmetric():
    f = window_map(60, lambda u: Fraction(u ** 3 + 2 * u))
    dev = ep.deviation(f, 2)
    for a, b in [(1, 2), (3, 5), (0, 4)]:
        assert dev(a, b) == dev(b, a)


def test_eml_degrees():
    const = window_map(20, lambda u: Fraction(7))
    assert ep.eml_degree(const, 4) == 0
    linear = window_map(20, lambda u: Fraction(3 * u))
    assert ep.eml_degree(linear, 4) == 1
    quad = window_map(40, lambda u: Fraction(u * u + u))
    assert ep.eml_degree(quad, 4) == 2


def test_not_polynomial_sentinel():
    f = window_map(400, lambda u: Fraction(2 ** abs(u)))
    d = ep.eml_degree(f, 5)
    assert d == ep.NotPolynomialUpTo(5)
    assert d != ep.NotPolynomialUpTo(4)


def test_finite_group_indicator_is_polynomial():
    A = ep.AbGroup((4,))
    F2 = Field.prime(2)
    f = ep.AbMap(A, F2, func=lambda u: F2.one if u == (1,) else F2.zero)
    d = ep.eml_degree(f, 6)
    assert isinstance(d, int)


def test_homogeneous_decomposition_roundtrip():
    f = window_map(60, lambda u: Fraction(u * u + u))
    parts = ep.homogeneous_decomposition(f)
    assert len(parts) == 3
    for u in range(-5, 6):
        total = sum(fk(u) for fk in parts)
        assert total == f(u)
    # homogeneity: f_k(n u) = n^k f_k(u)
    assert parts[2](6) == 9 * parts[2](2)
    assert parts[1](4) == 2 * parts[1](2)


def test_factor_frobenius_power_on_f9():
    R = FiniteRing("F_9")
    K = Field.galois(3, 2)
    phi = ep.RingMap(R, K, func=lambda a: K.pow(a[0], 4))
    factors, L = ep.factor_multiplicative(phi)
    assert len(factors) == 2
    assert L is K
    for a in R.elements():
        prod = L.one
        for h in factors:
            prod = L.mul(prod, h(a))
        assert prod == phi(a)


def test_factor_square_on_z4():
    R = FiniteRing("Z/4")
    F2 = Field.prime(2)
    # x -> x^2 lands in {0, 1} and coincides with reduction mod 2, so a
    # single homomorphism factor suffices
    phi = ep.RingMap(R, F2, func=lambda a: F2.coerce(a[0] ** 2))
    factors, L = ep.factor_multiplicative(phi)
    assert len(factors) == 1
    assert L is F2


def test_factor_integer_cube():
    f = window_map(60, lambda u: Fraction(u ** 3))
    factors, L = ep.factor_multiplicative(f)
    assert len(factors) == 3
    assert L is QQ


def test_factor_rejects_non_multiplicative():
    R = FiniteRing("F_4")
    K = Field.galois(2, 2)
    phi = ep.RingMap(R, K, func=lambda a: K.add(a[0], K.one))
    with pytest.raises(ep.NotMultiplicative):
        ep.factor_multiplicative(phi)


def test_linearization_z2_in_z4():
    A, B, C = ep.AbGroup((2,)), ep.AbGroup((4,)), ep.AbGroup((2,))
    incl = ep.AbMap(A, B, func=lambda u: (2 * u[0] % 4,))
    proj = ep.AbMap(B, C, func=lambda u: (u[0] % 2,))
    for K in (Field.prime(3), Field.prime(5)):
        rep = ep.linearization_exactness(A, B, C, incl, proj, K)
        assert rep["first_sequence_exact"]
        assert rep["second_sequence_exact"]


def test_check_short_exact_rejects_bad_pair():
    A, B, C = ep.AbGroup((2,)), ep.AbGroup((4,)), ep.AbGroup((2,))
    incl = ep.AbMap(A, B, func=lambda u: (0,))
    proj = ep.AbMap(B, C, func=lambda u: (u[0] % 2,))
    assert not ep.check_short_exact(A, B, C, incl, proj)

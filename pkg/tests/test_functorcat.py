import pytest

from steinlab import functorcat as fc
from steinlab.emlpoly import NotPolynomialUpTo
from steinlab.fields import Field
from steinlab.rings import FiniteRing, ring_homs

F2RING = FiniteRing("F_2")
F3 = Field.prime(3)


def lines_functor(N=4):
    return fc.grassmannian_functor(F2RING, F3, N, r=1)


def test_representable_dims_and_cr2():
    P = fc.representable_functor(F2RING, F3, 4)
    assert P.dims() == [1, 2, 4, 8, 16]
    assert fc.cross_effect(P, 2)[0] == 1


def test_constant_degree_zero():
    C = fc.constant_functor(F2RING, F3, 4)
    assert fc.polynomial_degree(C, 4) == 0


def test_additive_degree_one():
    R = FiniteRing("F_2")
    K = Field.prime(2)
    hom = ring_homs(R, K)[0]
    L = fc.additive_functor(R, K, 4, lambda a: hom(a))
    assert L.dims() == [0, 1, 2, 3, 4]
    assert fc.polynomial_degree(L, 4) == 1


def test_representable_not_polynomial():
    P = fc.representable_functor(F2RING, F3, 4)
    assert fc.polynomial_degree(P, 4) == NotPolynomialUpTo(4)


def test_lines_dims_fit_and_nonpolynomiality():
    G = lines_functor()
    assert G.dims() == [0, 1, 3, 7, 15]
    prof = fc.dimension_profile(G)
    assert prof["fit_ok"]
    assert prof["fit"] == ["-1", "1"]   # f(X) = X - 1
    assert fc.polynomial_degree(G, 4) == NotPolynomialUpTo(4)


def test_cross_effect_bookkeeping():
    for F in (fc.constant_functor(F2RING, F3, 3),
              fc.representable_functor(F2RING, F3, 3),
              lines_functor(3)):
        for d in range(F.N + 1):
            assert fc.cross_effect_check(F, d)


def test_functoriality_on_random_pairs():
    import random
    rng = random.Random(0)
    G = lines_functor(3)
    els = F2RING.elements()
    for _ in range(25):
        m = rng.randint(1, 2)
        k = rng.randint(1, 2)
        m2 = rng.randint(1, 3)
        f = tuple(tuple(rng.choice(els) for _ in range(m))
                  for _ in range(k))
        g = tuple(tuple(rng.choice(els) for _ in range(k))
                  for _ in range(m2))
        from steinlab.rings import mat_mul
        gf = mat_mul(F2RING, g, f)
        assert G.act_ranks(gf, m, m2) == \
            G.act_ranks(g, k, m2) * G.act_ranks(f, m, k)


def test_intermediate_extension_of_delta_is_lines():
    delta = fc.MonoidModule.from_character(
        F2RING, F3,
        lambda a: F3.one if a != F2RING.zero else F3.zero)
    T = fc.intermediate_extension_functor(delta, 3)
    assert T.dims() == [0, 1, 3, 7]


def test_intermediate_extension_recovers_value():
    delta = fc.MonoidModule.from_character(
        F2RING, F3,
        lambda a: F3.one if a != F2RING.zero else F3.zero)
    mm = fc.intermediate_extension_module(delta, 1)
    assert mm.dimension == delta.dimension


def test_constant_module_collapses():
    one = fc.MonoidModule(F2RING, 1, F3,
                          lambda e: __import__("steinlab.matrices",
                                               fromlist=["Matrix"])
                          .Matrix.identity(F3, 1))
    dim, _, _, _ = fc.intermediate_extension_value(one, 2)
    assert dim == 1


def test_tensor_with_constant():
    G = lines_functor(3)
    C = fc.constant_functor(F2RING, F3, 3)
    T = fc.tensor_functors(G, C)
    assert T.dims() == G.dims()


def test_degree_additivity():
    R = FiniteRing("F_2")
    K = Field.prime(2)
    hom = ring_homs(R, K)[0]
    L = fc.additive_functor(R, K, 4, lambda a: hom(a))
    LL = fc.tensor_functors(L, L)
    d = fc.polynomial_degree(LL, 4)
    assert isinstance(d, int) and d <= 2


def test_unipotence_ideal_polynomial_functor():
    Z6 = FiniteRing("Z/6")
    F4 = Field.galois(2, 2)
    hom = ring_homs(Z6, F4)[0]
    L = fc.additive_functor(Z6, F4, 3, lambda a: hom(a))
    I = fc.unipotence_ideal(L, 1)
    assert len(I.elements) == 6   # the whole ring
    assert fc.ideal_is_cotrivial(L, I)


def test_unipotence_ideal_order2_character():
    Z3 = FiniteRing("Z/3")
    F7 = Field.prime(7)
    chi = fc.MonoidModule.from_character(
        Z3, F7,
        lambda a: {0: F7.zero, 1: F7.one, 2: F7.coerce(-1)}[a[0]])
    T = fc.intermediate_extension_functor(chi, 3)
    I = fc.unipotence_ideal(T, 1)
    assert len(I.elements) == 1   # the zero ideal


def test_simplicity_lines_true():
    assert fc.simplicity_test(lines_functor(3), 1)


def test_simplicity_constant_true():
    assert fc.simplicity_test(fc.constant_functor(F2RING, F3, 2), 1)


def test_simplicity_representable_false():
    P = fc.representable_functor(F2RING, F3, 3)
    assert not fc.simplicity_test(P, 1)


def test_truncation_guard():
    C = fc.constant_functor(F2RING, F3, 2)
    with pytest.raises(ValueError):
        C.dim(3)

import pytest

from steinlab.fields import Field, FieldError, QQ


def test_prime_field_arithmetic():
    F = Field.prime(7)
    assert F.add(3, 5) == 1
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.sub(0, 1) == 6
    assert F.pow(3, 6) == 1


def test_field_interning():
    assert Field.prime(5) is Field.prime(5)
    assert Field.galois(2, 2) is Field.of_order(4)
    assert Field.of_order(3) is Field.prime(3)
    assert QQ is Field.rationals()


def test_axioms_small_fields():
    for q in (2, 3, 4, 5, 8, 9):
        F = Field.of_order(q)
        els = F.elements()
        assert len(els) == q
        for a in els:
            assert F.add(a, F.zero) == a
            assert F.mul(a, F.one) == a
            assert F.add(a, F.neg(a)) == F.zero
            if a != F.zero:
                assert F.mul(a, F.inv(a)) == F.one
        # a couple of distributivity probes
        a, b, c = els[0], els[-1], els[q // 2]
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_multiplicative_generator():
    for q in (4, 8, 9, 25, 49):
        F = Field.of_order(q)
        z = F.gen()
        seen = set()
        x = F.one
        for _ in range(q - 1):
            seen.add(x)
            x = F.mul(x, z)
        assert len(seen) == q - 1


def test_frobenius():
    F = Field.galois(3, 2)
    for a in F.elements():
        assert F.frobenius(a, 1) == F.pow(a, 3)
        assert F.frobenius(F.frobenius(a, 1), 1) == a


def test_embedding_f4_into_f16():
    F4, F16 = Field.galois(2, 2), Field.galois(2, 4)
    emb = F16.embedding_from(F4)
    for a in F4.elements():
        for b in F4.elements():
            assert emb(F4.add(a, b)) == F16.add(emb(a), emb(b))
            assert emb(F4.mul(a, b)) == F16.mul(emb(a), emb(b))
    assert emb(F4.one) == F16.one


def test_no_embedding_between_incomparable():
    F4, F8 = Field.galois(2, 2), Field.galois(2, 3)
    assert not F8.contains_subfield(F4)
    with pytest.raises(FieldError):
        F8.embedding_from(F4)


def test_rationals():
    from fractions import Fraction
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.char == 0
    assert QQ.inv(Fraction(2)) == Fraction(1, 2)


def test_unsupported_characteristic():
    with pytest.raises(FieldError):
        Field.prime(11)
    with pytest.raises(FieldError):
        Field.galois(2, 5)

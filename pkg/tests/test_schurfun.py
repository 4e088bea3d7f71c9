import pytest

from steinlab import schurfun as sf
from steinlab import symgrp as sg
from steinlab.fields import Field, QQ
from steinlab.modtools import end_dim, is_simple


def test_char0_sym_and_alt():
    assert sf.schur_value((2,), 2, QQ).dimension == 3     # Sym^2
    assert sf.schur_value((1, 1), 2, QQ).dimension == 1   # Lambda^2
    assert sf.schur_value((2, 1), 3, QQ).dimension == 8


def test_too_many_rows_gives_zero():
    assert sf.schur_value((1, 1, 1), 2, QQ).dimension == 0


def test_char0_dimensions_match_semistandard_counts():
    for n in (2, 3):
        for d in range(1, 4):
            for lam in sg.all_partitions(d):
                rep = sf.schur_value(lam, n, QQ)
                assert rep.dimension == sf.semistandard_count(lam, n)


def test_elementary_norm_image_char2():
    K = Field.prime(2)
    M = sg.specht_module((2,), K)   # trivial S_2-module
    E = sf.elementary_value(M, 2, K)
    assert E.dimension == 1         # the norm image inside Sym is a line


def test_socle_rejects_non_restricted():
    K = Field.prime(2)
    with pytest.raises(ValueError):
        sf.socle_simple((2,), 2, K)


def test_socle_simple_l11_char2():
    K = Field.prime(2)
    L = sf.socle_simple((1, 1), 2, K)
    assert L.dimension == 1
    assert is_simple(L)


def test_highest_weights_f7():
    K = Field.prime(7)
    cases = {(2,): (2, 0), (1, 1): (1, 1), (2, 1): (2, 1)}
    for lam, expect in cases.items():
        L = sf.socle_simple(lam, 2, K)
        assert sf.highest_weight(L, degree=sum(lam)) == expect
    L3 = sf.socle_simple((1,), 3, K)
    assert sf.highest_weight(L3, degree=1) == (1, 0, 0)


def test_field_too_small_for_weights():
    K = Field.prime(2)
    L = sf.socle_simple((1,), 2, K)
    with pytest.raises(sf.FieldTooSmall):
        sf.highest_weight(L, degree=1)


def test_det_twist():
    assert sf.det_twist_check((1, 1), 2, Field.prime(3))
    assert sf.det_twist_check((2, 1), 2, Field.prime(2))
    assert sf.det_twist_check((2, 2), 2, Field.prime(3))


def test_char0_elementary_matches_schur():
    from steinlab.modtools import are_isomorphic
    K = QQ
    for lam in ((2,), (1, 1), (2, 1)):
        S = sg.specht_module(lam, K)
        E = sf.elementary_value(S, 2, K)
        L = sf.schur_value(lam, 2, K)
        assert E.dimension == L.dimension
        if E.dimension:
            assert are_isomorphic(E, L)


def test_elementary_simple_with_scalar_end_char_p():
    K = Field.prime(3)
    D = sg.simple_module((2, 1), K)
    E = sf.elementary_value(D, 2, K)
    if E.dimension:
        assert is_simple(E)
        assert end_dim(E) == 1


def test_delta_rep_and_det():
    K = Field.prime(3)
    delta = sf.delta_rep(2, K)
    assert delta.dimension == 1
    assert delta.generators["e"].rows[0][0] == K.zero
    det = sf.det_rep(2, K)
    assert det.dimension == 1

import pytest

from steinlab import steinberg as st
from steinlab.fields import Field
from steinlab.modtools import are_isomorphic, end_dim, is_simple


def test_build_natural_rep():
    datum = st.build((1, 0), 2, 2)
    assert datum.module.dimension == 2
    assert is_simple(datum.module)


def test_build_trivial():
    datum = st.build((0,), 2, 2)
    assert datum.module.dimension == 1


def test_build_dimension_multiplicative():
    # digits of (3,1) base 2 are (1,1) and (1,0): det times twisted natural
    datum = st.build((3, 1), 2, 4)
    assert len(datum.digits) == 2
    assert datum.module.dimension == 2


def test_single_digit_reduces_to_socle():
    datum = st.build((1, 1), 2, 3)
    assert datum.module.dimension == 1  # the determinant representation


def test_classify_gl2_f2():
    out = st.classify(2, 2)
    dims = sorted(d.module.dimension for d in out)
    assert dims == [1, 2]


def test_classify_gl1_f4():
    out = st.classify(1, 4)
    assert len(out) == 3
    assert all(d.module.dimension == 1 for d in out)


def test_classify_gl3_f2():
    out = st.classify(3, 2)
    dims = sorted(d.module.dimension for d in out)
    assert dims == [1, 3, 3, 8]


def test_classify_members_distinct():
    out = st.classify(2, 2)
    assert not are_isomorphic(out[0].module, out[1].module)
    for d in out:
        assert end_dim(d.module) == 1


def test_classify_refuses_large_groups():
    with pytest.raises(ValueError):
        st.classify(4, 2)


def test_p_regular_class_count_matches():
    # order-coprime-to-p classes of GL_2(F_2) ~ S_3: identity and 3-cycles
    assert st.p_regular_class_count(2, 2) == 2
    assert st.p_regular_class_count(3, 2) == 4


def test_group_exponent():
    # GL_2(F_2) has elements of orders 1, 2, 3
    assert st.group_exponent(2, 2) == 6


def test_splitting_fields():
    assert st.splitting_field(2, 2).order == 4
    assert st.splitting_field(1, 4).order == 4
    assert st.splitting_field(2, 4).order == 16


def test_restricted_representatives():
    reps = st.q_restricted_representatives(1, 4)
    assert len(reps) == 3
    reps = st.q_restricted_representatives(2, 2)
    assert len(reps) == 2


def test_group_algebra_agreement():
    K = st.splitting_field(2, 2)
    simples = st.group_algebra_simples(2, 2, K)
    assert sorted(m.dimension for m in simples) == [1, 2]
    built = st.classify(2, 2)
    for d in built:
        assert any(are_isomorphic(d.module, m) for m in simples)


def test_uniqueness_det_twist():
    out = st.uniqueness_check((1, 1), (0, 0), 2, 2)
    assert out["isomorphic"]
    assert out["relation"] == "det^(p-1) twist"
    assert out["consistent"]


def test_uniqueness_equal():
    out = st.uniqueness_check((1, 0), (1, 0), 2, 2)
    assert out["isomorphic"]
    assert out["relation"] == "equal"


def test_uniqueness_distinct():
    out = st.uniqueness_check((1, 0), (0, 0), 2, 2)
    assert not out["isomorphic"]
    assert out["relation"] is None


def test_product_decompose():
    from steinlab.matrices import Matrix
    from steinlab.modtools import AlgebraModule
    K = st.splitting_field(2, 2)
    nat = st.build((1, 0), 2, 2, K=K).module
    triv = st.build((0,), 2, 2, K=K).module
    names = st.group_generator_names(2)
    gens = {}
    for nm in names:
        gens[nm + "1"] = nat.generators[nm].kron(
            Matrix.identity(K, triv.dimension))
        gens[nm + "2"] = Matrix.identity(K, nat.dimension).kron(
            triv.generators[nm])
    prod = AlgebraModule(K, gens)
    m1, m2 = st.product_decompose(prod,
                                  [nm + "1" for nm in names],
                                  [nm + "2" for nm in names])
    assert m1.dimension == 2 and m2.dimension == 1


def test_classify_table_shape():
    rows = st.classify_table(2, 2)
    assert len(rows) == 2
    assert all(len(r) >= 3 for r in rows)

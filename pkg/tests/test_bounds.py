import pytest
from hypothesis import given, settings, strategies as st

from liembed.bounds import (
    EMBEDS,
    NONEMBED,
    UNKNOWN,
    EmbedQuery,
    GroupExpr,
    Verdict,
    make_expr,
    parabolic_diagnostic,
    rule_lowdim,
    rule_nonembed,
    rule_product_affine,
    rule_semisimple,
    rule_simple,
    rule_sl2_products,
    verdict,
)
from liembed.roots import SimpleType, all_types, dimension

TYPES_8 = all_types(8)


def q(pairs, k, d):
    return EmbedQuery(make_expr([(SimpleType.parse(label), m) for label, m in pairs], k), d)


def test_rule_simple():
    assert rule_simple(q([("G2", 1)], 0, 6))  # 14 > 13
    assert not rule_simple(q([("A3", 1)], 0, 7))  # 15 > 15 fails
    assert rule_simple(q([("A1", 1)], 0, 0))  # 3 > 1
    assert not rule_simple(q([("A1", 2)], 0, 0))  # two factors


def test_rule_semisimple():
    assert rule_semisimple(q([("B4", 1), ("C3", 1)], 0, 26))  # 57 > 54
    assert not rule_semisimple(q([("A1", 3)], 0, 4))  # 9 > 11 fails
    assert not rule_semisimple(q([("A1", 1)], 0, 1))  # 3 > 3 fails
    assert not rule_semisimple(q([], 5, 1))


def test_rule_product_affine():
    assert rule_product_affine(q([("A2", 1)], 4, 4))  # 9 <= 12 and 4 <= 4
    assert not rule_product_affine(q([("A2", 1)], 1, 4))  # d <= k fails
    assert rule_product_affine(q([], 7, 3))  # pure affine, k = 2d+1


def test_rule_sl2_products():
    assert rule_sl2_products(q([("A1", 2)], 1, 3))  # 7 <= 7, odd, s-1 <= m
    assert not rule_sl2_products(q([("A1", 3)], 0, 4))  # all slack conditions fail
    assert rule_sl2_products(q([("A1", 1)], 0, 1))  # 3 <= 3 and 1 <= 1
    assert not rule_sl2_products(q([("A2", 1)], 4, 1))  # non-SL2 factor


def test_rule_lowdim():
    assert rule_lowdim(q([("B2", 1)], 0, 4))  # 10 <= 10, 9 <= 10
    assert not rule_lowdim(q([("A1", 3)], 0, 4))  # excluded expression
    assert not rule_lowdim(q([("A2", 1)], 1, 4))  # excluded expression
    assert not rule_lowdim(q([("B4", 1)], 0, 2))  # dim 36 > 10


def test_rule_nonembed():
    assert rule_nonembed(q([("G2", 1)], 0, 7))  # 14 >= 14
    assert rule_nonembed(q([("B2", 1)], 0, 5))  # 10 >= 10
    assert not rule_nonembed(q([("A1", 1)], 0, 1))  # 2 >= 3 fails


def test_verdict_fixtures():
    assert verdict(q([("G2", 1)], 0, 6)).kind == EMBEDS
    assert verdict(q([("G2", 1)], 0, 6)).rule == "simple"
    assert verdict(q([("G2", 1)], 0, 7)).kind == NONEMBED
    assert verdict(q([("A3", 1)], 0, 7)).kind == UNKNOWN
    assert verdict(q([("A1", 3)], 0, 4)).kind == UNKNOWN
    assert verdict(q([("A2", 1)], 1, 4)).kind == UNKNOWN
    assert verdict(q([("B2", 1)], 0, 4)).kind == EMBEDS
    assert verdict(q([("B2", 1)], 0, 5)).kind == NONEMBED


def test_witness_rule_order():
    # lowdim precedes simple in the fixed order, so it wins the witness
    assert verdict(q([("B2", 1)], 0, 4)).rule == "lowdim"
    assert verdict(q([("B4", 1)], 0, 10)).rule == "simple"
    assert verdict(q([("B4", 1), ("C3", 1)], 0, 26)).rule == "semisimple"


def test_verdict_witness_invariant():
    v = verdict(q([("A3", 1)], 0, 7))
    assert v.rule is None and v.inequality == ""
    with pytest.raises(ValueError):
        Verdict(kind=EMBEDS, rule=None, inequality="x")
    with pytest.raises(ValueError):
        Verdict(kind=UNKNOWN, rule="simple", inequality="x")


def test_group_expr_normalization():
    e = make_expr([(SimpleType("A", 1), 2), (SimpleType("A", 1), 1), (SimpleType("B", 4), 1)], 2)
    assert e.factors == ((SimpleType("A", 1), 3), (SimpleType("B", 4), 1))
    assert e.total_dim == 9 + 36 + 2
    assert e.factor_count == 4
    assert str(e) == "A1^3 x B4 x Aff2"
    with pytest.raises(ValueError):
        GroupExpr(factors=(), affine_dim=0)
    with pytest.raises(ValueError):
        GroupExpr(factors=((SimpleType("A", 1), 0),), affine_dim=0)
    with pytest.raises(ValueError):
        EmbedQuery(make_expr([], 1), -1)


@st.composite
def queries(draw):
    pairs = draw(st.lists(st.tuples(st.sampled_from([str(t) for t in TYPES_8]), st.integers(1, 3)), max_size=3))
    k = draw(st.integers(0, 20))
    if not pairs and k == 0:
        k = 1
    d = draw(st.integers(0, 40))
    return q(pairs, k, d)


@given(queries())
def test_embed_and_nonembed_exclusive(query):
    # verdict() raises internally if both sides ever fire
    v = verdict(query)
    if v.kind == EMBEDS:
        assert not rule_nonembed(query)
        assert 2 * query.d + 1 <= query.target.total_dim


@given(queries())
def test_monotone_in_affine_dim(query):
    if verdict(query).kind == EMBEDS:
        grown = GroupExpr(query.target.factors, query.target.affine_dim + 1)
        assert verdict(EmbedQuery(grown, query.d)).kind == EMBEDS


@given(queries())
def test_antimonotone_in_d(query):
    if verdict(query).kind == NONEMBED:
        assert verdict(EmbedQuery(query.target, query.d + 1)).kind == NONEMBED


@settings(max_examples=40)
@given(st.sampled_from(TYPES_8))
def test_single_simple_factor_always_embeds_below_half(t):
    n = dimension(t).dim
    expr = make_expr([(t, 1)], 0)
    for d in range(0, (n - 1) // 2 + 1):
        if 2 * d + 1 < n:
            assert verdict(EmbedQuery(expr, d)).kind == EMBEDS


def test_diagnostic_reports_certifying_parabolic():
    assert parabolic_diagnostic(q([("A3", 1)], 0, 7)) is None  # must stay open
    cert = parabolic_diagnostic(q([("B4", 1)], 0, 15))
    assert cert is not None and cert["codim"] == 1 and cert["excess"] <= 1
    assert cert["factors"][0][0] == "B4"
    two = parabolic_diagnostic(q([("B4", 1), ("C3", 1)], 0, 26))
    assert two is not None and two["codim"] == 2
    assert parabolic_diagnostic(q([], 9, 4)) is None  # needs a simple factor


def test_diagnostic_never_contradicts_nonembed():
    for d in range(0, 30):
        query = q([("B4", 1)], 0, d)
        if parabolic_diagnostic(query) is not None:
            assert not rule_nonembed(query)

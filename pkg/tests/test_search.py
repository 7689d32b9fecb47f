import pytest
from hypothesis import given, strategies as st

from liembed.parabolic import NodeSet, levi_ss_dim
from liembed.roots import SimpleType, all_types
from liembed.search import (
    certificate,
    designated_node,
    good_nodes,
    levi_closed_form,
    margin_audit,
    search_report,
)

st_type = SimpleType.parse


def test_designated_node_classical():
    assert designated_node(st_type("B4")) == 2
    assert designated_node(st_type("A5")) == 3
    assert designated_node(st_type("A1")) == 1
    assert designated_node(st_type("C3")) == 2
    assert designated_node(st_type("D4")) == 2


def test_designated_node_exceptional():
    # node matched by the tabulated Levi dimension; smallest label on a tie
    assert designated_node(st_type("E6")) == 4
    assert designated_node(st_type("E7")) == 4
    assert designated_node(st_type("E8")) == 4
    assert designated_node(st_type("F4")) == 1
    assert designated_node(st_type("G2")) == 1


def test_f4_tie_between_nodes_1_and_4():
    # b3 = c3 makes both end deletions match 21; the tie-break picks 1
    f4 = st_type("F4")
    matches = [s for s in range(1, 5) if levi_ss_dim(f4, NodeSet.deleting(f4, [s])) == 21]
    assert matches == [1, 4]


def test_exceptional_levi_dimensions():
    expected = {"E6": 19, "E7": 26, "E8": 35, "F4": 21, "G2": 3}
    for label, levi in expected.items():
        t = st_type(label)
        assert certificate(t, designated_node(t)).profile.dim_levi_ss == levi


def test_good_nodes_g2():
    assert good_nodes(st_type("G2")) == frozenset({1, 2})


def test_good_nodes_contains_designated():
    for t in all_types(12):
        assert designated_node(t) in good_nodes(t)


def test_good_nodes_membership_is_pointwise():
    for t in all_types(8):
        good = good_nodes(t)
        for c in search_report(t):
            assert (c.deleted_node in good) == c.satisfies_3ru
            assert c.satisfies_3ru == (3 * c.profile.dim_unip_rad >= c.profile.dim_pu)
            assert c.margin == c.profile.dim_g - 2 * c.profile.dim_levi_ss - 1


def test_e8_certificate_numbers():
    c = certificate(st_type("E8"), 4)
    assert c.profile.dim_unip_rad == 106
    assert c.profile.dim_pu == 141
    assert 3 * c.profile.dim_unip_rad == 318
    assert c.satisfies_3ru


def test_levi_closed_form_fixtures():
    assert levi_closed_form(st_type("A5"), 3) == 16
    assert levi_closed_form(st_type("B4"), 2) == 13
    assert levi_closed_form(st_type("D4"), 2) == 9


def test_levi_closed_form_preconditions():
    with pytest.raises(ValueError):
        levi_closed_form(st_type("D5"), 4)  # fork nodes excluded
    with pytest.raises(ValueError):
        levi_closed_form(st_type("A3"), 4)
    with pytest.raises(ValueError):
        levi_closed_form(st_type("G2"), 1)  # not classical


@given(st.sampled_from([t for t in all_types(12, exceptionals=False)]))
def test_levi_closed_form_agrees_every_node(t):
    # the delta against levi_ss_dim is re-checked inside levi_closed_form
    top = t.rank - 2 if t.family == "D" else t.rank
    for s in range(1, top + 1):
        levi_closed_form(t, s)


def test_margin_fixtures():
    assert margin_audit(st_type("A7")) == 2
    assert margin_audit(st_type("A6")) == 1
    assert margin_audit(st_type("F4")) == 9
    assert margin_audit(st_type("B2")) == 3
    assert margin_audit(st_type("G2")) == 7


def test_margins_match_parity_up_to_rank_20():
    for t in all_types(20):
        margin = margin_audit(t)  # internal residue checks for B/C/D
        assert margin >= 0
        if t.family == "A":
            assert margin == (2 if t.rank % 2 else 1)

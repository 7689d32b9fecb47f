from collections import Counter

import pytest
from hypothesis import given, strategies as st

from liembed.homotopy import HomotopyType, coincidence_audit, pi3_audit, rational_homotopy_type, weyl_degrees
from liembed.roots import SimpleType, all_types, dimension, positive_roots

TYPES_12 = all_types(12)


def entries(label):
    return rational_homotopy_type(SimpleType.parse(label)).entries


def test_exceptional_rows():
    assert entries("G2") == (3, 11)
    assert entries("F4") == (3, 11, 15, 23)
    assert entries("E6") == (3, 9, 11, 15, 17, 23)
    assert entries("E7") == (3, 11, 15, 19, 23, 27, 35)
    assert entries("E8") == (3, 15, 23, 27, 35, 39, 47, 59)


def test_classical_rows_match_patterns():
    for m in range(1, 13):
        assert entries(f"A{m}") == tuple(range(3, 2 * m + 2, 2))
    for m in range(2, 13):
        assert entries(f"B{m}") == tuple(range(3, 4 * m, 4))
    for m in range(3, 13):
        assert entries(f"C{m}") == tuple(range(3, 4 * m, 4))
    for m in range(4, 13):
        assert entries(f"D{m}") == tuple(sorted(list(range(3, 4 * m - 4, 4)) + [2 * m - 1]))
    assert entries("D4") == (3, 7, 7, 11)
    assert entries("A1") == (3,)


@given(st.sampled_from(TYPES_12))
def test_entry_sum_is_group_dimension(t):
    assert sum(rational_homotopy_type(t).entries) == dimension(t).dim


@given(st.sampled_from(TYPES_12))
def test_degrees_are_sane(t):
    degrees = weyl_degrees(t)
    assert degrees[0] == 2 and len(degrees) == t.rank
    assert degrees == tuple(sorted(degrees))


@given(st.sampled_from(TYPES_12))
def test_pi3(t):
    assert pi3_audit(t)


@given(st.sampled_from(TYPES_12))
def test_entry_occurrence_patterns(t):
    e = rational_homotopy_type(t).entries
    assert (5 in e) == (t.family == "A" and t.rank >= 2)
    if 7 in e and 5 not in e:
        assert t.family in ("B", "C", "D")
    if t.family in ("B", "C", "D"):
        assert 7 in e


def test_coincidence_audit_12():
    pairs = coincidence_audit(12)
    assert {(str(a), str(b)) for a, b in pairs} == {(f"B{m}", f"C{m}") for m in range(3, 13)}
    for a, b in pairs:
        assert dimension(a).dim == dimension(b).dim
        assert (a, b) == tuple(sorted((a, b)))


def test_coincidence_audit_4():
    pairs = coincidence_audit(4)
    assert {(str(a), str(b)) for a, b in pairs} == {("B3", "C3"), ("B4", "C4")}
    with pytest.raises(ValueError):
        coincidence_audit(3)


@given(st.sampled_from(TYPES_12))
def test_height_histogram_conjugate_to_exponents(t):
    # the root counts by height form the partition conjugate to the exponents
    # d - 1; ties the degree tables to the root enumeration, which are
    # hardcoded independently of each other
    heights = Counter(sum(r) for r in positive_roots(t))
    exponents = sorted((d - 1 for d in weyl_degrees(t)), reverse=True)
    conjugate = [sum(1 for e in exponents if e >= k) for k in range(1, max(exponents) + 1)]
    assert [heights[k] for k in range(1, max(exponents) + 1)] == conjugate
    assert max(heights) == max(exponents)


def test_homotopy_type_validation():
    with pytest.raises(ValueError):
        HomotopyType(entries=(5, 7))  # no 3
    with pytest.raises(ValueError):
        HomotopyType(entries=(3, 3, 7))  # two 3s
    with pytest.raises(ValueError):
        HomotopyType(entries=(3, 4))  # even entry
    with pytest.raises(ValueError):
        HomotopyType(entries=(7, 3))  # unsorted
    assert str(HomotopyType(entries=(3, 11))) == "{3, 11}"

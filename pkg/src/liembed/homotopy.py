"""Rational homotopy types of the simply connected simple groups.

The group of type t is rationally a product of odd spheres S^(2d-1), one per
Weyl invariant degree d.  Degrees are hardcoded per family and validated
against the identity sum(2d - 1) = dim G, which ties this table back to the
root enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import SimpleType, all_types, dimension

_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


def weyl_degrees(t: SimpleType) -> tuple[int, ...]:
    """Weyl invariant degrees of t, sorted ascending (always starting at 2)."""
    n = t.rank
    if t.family == "A":
        degrees = tuple(range(2, n + 2))
    elif t.family in ("B", "C"):
        degrees = tuple(range(2, 2 * n + 1, 2))
    elif t.family == "D":
        degrees = tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,)))
    else:
        degrees = _EXCEPTIONAL_DEGREES[(t.family, n)]
    if degrees[0] != 2 or any(d < 2 for d in degrees) or len(degrees) != n:
        raise RuntimeError(f"bad degree table for {t}")
    return degrees


@dataclass(frozen=True)
class HomotopyType:
    """Multiset of odd sphere dimensions, sorted ascending."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.entries.count(3) != 1:
            raise ValueError("exactly one entry must be 3")
        if any(e < 3 or e % 2 == 0 for e in self.entries):
            raise ValueError("entries must be odd and >= 3")
        if tuple(sorted(self.entries)) != self.entries:
            raise ValueError("entries must be sorted")

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.entries) + "}"


def rational_homotopy_type(t: SimpleType) -> HomotopyType:
    """The multiset {2d - 1 : d a Weyl degree}; its sum must equal dim G."""
    entries = tuple(sorted(2 * d - 1 for d in weyl_degrees(t)))
    if sum(entries) != dimension(t).dim:
        raise RuntimeError(f"sphere dimensions of {t} do not sum to dim G")
    return HomotopyType(entries)


def pi3_audit(t: SimpleType) -> bool:
    """True iff the third rational homotopy group is exactly one copy of Q."""
    return rational_homotopy_type(t).entries.count(3) == 1


def coincidence_audit(max_rank: int) -> tuple[tuple[SimpleType, SimpleType], ...]:
    """All unordered pairs of distinct types with equal rational homotopy type
    (classical ranks <= max_rank, all exceptionals).

    The only coincidences are (B_m, C_m); since C starts at rank 3 here, no
    rank-2 pair is reported.
    """
    if max_rank < 4:
        raise ValueError("max_rank must be at least 4")
    types = sorted(all_types(max_rank))
    pairs = []
    for i, s in enumerate(types):
        hs = rational_homotopy_type(s)
        for g in types[i + 1 :]:
            if rational_homotopy_type(g) == hs:
                pairs.append((s, g))
    return tuple(pairs)

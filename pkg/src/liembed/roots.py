"""Simple Lie types, Cartan matrices, and positive-root enumeration.

Everything in this module is exact integer arithmetic.  Roots are stored as
coefficient vectors over the simple-root basis (plain tuples of ints), node
labels are 1-based Bourbaki labels, and every dimension is cross-checked
against the root count before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# rank range per family: (min, max); None = unbounded
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_DIM = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Lie type: family letter A..G plus rank.

    Low-rank degenerations (B1, C1, C2, D2, D3) are rejected outright; the
    coincidences b1 = a1, d2 = 2*a1, d3 = a3 are honored downstream by
    counting roots instead of classifying subdiagrams.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse a label like "B4" or "E8"."""
        text = text.strip()
        if len(text) < 2 or text[0] not in _RANK_RANGE or not text[1:].isdigit():
            raise ValueError(f"not a simple type label: {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_exceptional(self) -> bool:
        return self.family in ("E", "F", "G")


def all_types(max_rank: int, exceptionals: bool = True) -> list[SimpleType]:
    """All valid simple types of rank <= max_rank, plus (optionally) every
    exceptional type regardless of max_rank."""
    out: list[SimpleType] = []
    for family in ("A", "B", "C", "D"):
        lo, _ = _RANK_RANGE[family]
        out.extend(SimpleType(family, n) for n in range(lo, max_rank + 1))
    if exceptionals:
        out.extend(SimpleType(f, n) for (f, n) in _EXCEPTIONAL_DIM)
    return out


def closed_form_dim(t: SimpleType) -> int:
    """Group dimension from the classical closed forms / exceptional table."""
    n = t.rank
    if t.family == "A":
        return n * n + 2 * n
    if t.family in ("B", "C"):
        return 2 * n * n + n
    if t.family == "D":
        return 2 * n * n - n
    return _EXCEPTIONAL_DIM[(t.family, n)]


@lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> Matrix:
    """Cartan matrix under Bourbaki node numbering.

    Entry (i, j) is the pairing of simple root i against the coroot of simple
    root j, so the -2/-3 entries sit in the row of the long root.  For D the
    chain is nodes 1..n-2 with fork nodes n-1, n; for E the chain is
    1-3-4-...-n with node 2 hanging off node 4.
    """
    n = t.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, down: int = -1, up: int = -1) -> None:
        # 1-based nodes; `down` goes into row i, `up` into row j
        m[i - 1][j - 1] = down
        m[j - 1][i - 1] = up

    if t.family in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if t.family == "B":
            bond(n - 1, n, down=-2, up=-1)  # node n short
        elif t.family == "C":
            bond(n - 1, n, down=-1, up=-2)  # node n long
    elif t.family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif t.family == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(2, 4)
    elif t.family == "F":
        bond(1, 2)
        bond(2, 3, down=-2, up=-1)  # nodes 1, 2 long; 3, 4 short
        bond(3, 4)
    else:  # G
        bond(1, 2, down=-1, up=-3)  # node 1 short
    return tuple(tuple(row) for row in m)


def _enumerate(cartan: Matrix) -> list[tuple[Root, int]]:
    """Breadth-first closure of the simple roots under root strings.

    A simple root i extends a root b whenever the string length q of
    b, b - a_i, b - 2a_i, ... exceeds the pairing of b against the coroot of
    a_i.  Purely integer; works unchanged on disconnected Cartan matrices.

    Roots live as coefficient bytes.  Each frontier entry also carries the
    root's pairing vector (offset by 64 so it fits in bytes) which is updated
    sparsely on every extension, plus support/adjacency bitmasks so that
    simple roots far from the support, which always pair to 0, are never
    visited.  Returns (coefficient tuple, support mask) pairs in canonical
    order: height first, then lexicographic on the coefficient vector.
    """
    rank = len(cartan)
    rows = [tuple((j, cartan[i][j]) for j in range(rank) if cartan[i][j]) for i in range(rank)]
    # node itself plus its Dynkin neighbors, as a bitmask
    near = [
        (1 << i) | sum(1 << j for j in range(rank) if j != i and cartan[i][j])
        for i in range(rank)
    ]
    zero = bytes(rank)
    frontier = []
    for i in range(rank):
        coeffs = zero[:i] + b"\x01" + zero[i + 1 :]
        pvec = bytes(64 + cartan[i][j] for j in range(rank))
        frontier.append((coeffs, pvec, 1 << i, near[i]))
    # per root: bitmask of simple roots that can be subtracted (its descents);
    # the BFS visits every producing pair, so a level's masks are complete
    # before the next level is processed
    descents: dict[bytes, int] = {coeffs: 0 for coeffs, _, _, _ in frontier}
    supports: dict[bytes, int] = {coeffs: supp for coeffs, _, supp, _ in frontier}
    while frontier:
        grown = []
        for beta, pvec, supp, touch in frontier:
            down = descents[beta]
            remaining = touch
            while remaining:
                low = remaining & -remaining
                remaining ^= low
                pairing = pvec[low.bit_length() - 1] - 64
                if pairing >= 0:
                    if not down & low:
                        continue  # q = 0
                    if pairing:
                        i = low.bit_length() - 1
                        q = 1
                        lower = beta[:i] + bytes((beta[i] - 1,)) + beta[i + 1 :]
                        while q <= pairing and descents[lower] & low:
                            q += 1
                            lower = lower[:i] + bytes((lower[i] - 1,)) + lower[i + 1 :]
                        if q <= pairing:
                            continue
                i = low.bit_length() - 1
                new = beta[:i] + bytes((beta[i] + 1,)) + beta[i + 1 :]
                if new in descents:
                    descents[new] |= low
                else:
                    descents[new] = low
                    supports[new] = supp | low
                    npv = bytearray(pvec)
                    for j, c in rows[i]:
                        npv[j] += c
                    grown.append((new, bytes(npv), supp | low, touch | near[i]))
        frontier = grown
    decoded = [(tuple(coeffs), supp) for coeffs, supp in supports.items()]
    decoded.sort(key=lambda pair: (sum(pair[0]), pair[0]))
    return decoded


@lru_cache(maxsize=None)
def _root_data(t: SimpleType) -> tuple[tuple[Root, ...], tuple[int, ...]]:
    pairs = _enumerate(cartan_matrix(t))
    return tuple(r for r, _ in pairs), tuple(m for _, m in pairs)


def positive_roots(t: SimpleType) -> tuple[Root, ...]:
    """All positive roots of t, duplicate-free, in canonical order."""
    return _root_data(t)[0]


def support_masks(t: SimpleType) -> tuple[int, ...]:
    """Per positive root, a bitmask with bit (node-1) set iff the node's
    coefficient is nonzero.  Aligned with positive_roots(t)."""
    return _root_data(t)[1]


def root_support(root: Root) -> frozenset[int]:
    """1-based node labels carrying a nonzero coefficient."""
    return frozenset(j + 1 for j, c in enumerate(root) if c)


@dataclass(frozen=True)
class GroupDims:
    dim: int
    rank: int

    def __post_init__(self) -> None:
        if self.dim < self.rank or (self.dim - self.rank) % 2:
            raise ValueError(f"impossible group dimensions {self.dim}/{self.rank}")


def dimension(t: SimpleType) -> GroupDims:
    """Dimension of the simple group of type t.

    Computed twice, from the closed form and from rank + 2 * #positive roots;
    disagreement means the enumeration is broken and raises.
    """
    closed = closed_form_dim(t)
    counted = t.rank + 2 * len(positive_roots(t))
    if closed != counted:
        raise RuntimeError(f"dimension mismatch for {t}: closed form {closed}, root count {counted}")
    return GroupDims(dim=closed, rank=t.rank)


@dataclass(frozen=True)
class RootSystem:
    """A simple type with its Cartan matrix and enumerated positive roots."""

    type: SimpleType
    cartan: Matrix
    positive_roots: tuple[Root, ...]

    def __post_init__(self) -> None:
        n = self.type.rank
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(n):
                if i != j:
                    if self.cartan[i][j] not in (0, -1, -2, -3):
                        raise ValueError("off-diagonal Cartan entries must lie in {0,-1,-2,-3}")
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                        raise ValueError("Cartan zero pattern must be symmetric")
        if len(self.positive_roots) != (closed_form_dim(self.type) - n) // 2:
            raise ValueError("wrong number of positive roots")
        units = {r for r in self.positive_roots if sum(r) == 1}
        if units != {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}:
            raise ValueError("height-1 roots must be exactly the simple roots")

    @classmethod
    def of(cls, t: SimpleType) -> "RootSystem":
        return cls(type=t, cartan=cartan_matrix(t), positive_roots=positive_roots(t))

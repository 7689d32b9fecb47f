"""Dimension invariants of standard parabolic subgroups.

A standard parabolic is named by the set I of kept simple roots (the CLI
speaks of deleted nodes; conversion is explicit via NodeSet.deleting).  All
dimensions come from counting positive roots by support:

    levi semisimple part   |I| + 2 * #{roots supported inside I}
    unipotent radical      #{roots whose support leaves I}

Within every classical chain the kept/deleted node positions agree with
counting nodes from the left of the diagram; for D the fork nodes n-1, n sit
at the right end, so left-counting matches Bourbaki labels whenever the
deleted node is at position <= n-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .roots import SimpleType, closed_form_dim, cartan_matrix, dimension, support_masks


@dataclass(frozen=True)
class NodeSet:
    """A subset of the diagram nodes {1..rank}, stored as the KEPT set."""

    rank: int
    kept: frozenset[int]

    def __post_init__(self) -> None:
        if not self.kept <= frozenset(range(1, self.rank + 1)):
            raise ValueError(f"nodes {sorted(self.kept)} outside 1..{self.rank}")

    @classmethod
    def keeping(cls, t: SimpleType, nodes) -> "NodeSet":
        return cls(t.rank, frozenset(nodes))

    @classmethod
    def deleting(cls, t: SimpleType, nodes) -> "NodeSet":
        deleted = frozenset(nodes)
        bad = deleted - frozenset(range(1, t.rank + 1))
        if bad:
            raise ValueError(f"deleted nodes {sorted(bad)} outside 1..{t.rank}")
        return cls(t.rank, frozenset(range(1, t.rank + 1)) - deleted)

    @classmethod
    def full(cls, t: SimpleType) -> "NodeSet":
        return cls(t.rank, frozenset(range(1, t.rank + 1)))

    @classmethod
    def empty(cls, t: SimpleType) -> "NodeSet":
        return cls(t.rank, frozenset())

    @property
    def deleted(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1)) - self.kept

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.kept)


def _check(t: SimpleType, nodes: NodeSet) -> None:
    if nodes.rank != t.rank:
        raise ValueError(f"node set of rank {nodes.rank} used with {t}")


def _supported_count(t: SimpleType, mask: int) -> int:
    return sum(1 for m in support_masks(t) if m | mask == mask)


def levi_ss_dim(t: SimpleType, nodes: NodeSet) -> int:
    """Dimension of the semisimple part of the Levi factor of P_I."""
    _check(t, nodes)
    return len(nodes.kept) + 2 * _supported_count(t, nodes.mask)


def unipotent_radical_dim(t: SimpleType, nodes: NodeSet) -> int:
    """Dimension of the unipotent radical of P_I."""
    _check(t, nodes)
    return len(support_masks(t)) - _supported_count(t, nodes.mask)


@dataclass(frozen=True)
class ParabolicData:
    """All dimension invariants of one standard parabolic."""

    type: SimpleType
    nodes: NodeSet
    dim_g: int
    dim_levi_ss: int
    dim_unip_rad: int
    dim_p: int
    dim_pu: int
    codim_count: int


def parabolic_profile(t: SimpleType, nodes: NodeSet) -> ParabolicData:
    """Full dimension profile of P_I, with the structural identities checked.

    A violation can only come from a broken root enumeration, so it raises.
    """
    _check(t, nodes)
    dim_g = dimension(t).dim
    supported = _supported_count(t, nodes.mask)
    levi = len(nodes.kept) + 2 * supported
    unip = len(support_masks(t)) - supported
    data = ParabolicData(
        type=t,
        nodes=nodes,
        dim_g=dim_g,
        dim_levi_ss=levi,
        dim_unip_rad=unip,
        dim_p=dim_g - unip,
        dim_pu=levi + unip,
        codim_count=t.rank - len(nodes.kept),
    )
    ok = (
        data.dim_p == data.dim_g - data.dim_unip_rad
        and data.dim_pu == data.dim_levi_ss + data.dim_unip_rad
        and data.dim_p - data.dim_pu == data.codim_count
        and data.dim_g == t.rank + 2 * supported + 2 * data.dim_unip_rad
    )
    if not ok:
        raise RuntimeError(f"parabolic identities violated for {t}, kept {sorted(nodes.kept)}: {data}")
    return data


def maximal_profiles(t: SimpleType) -> list[ParabolicData]:
    """Profiles of all rank maximal parabolics (one deleted node each)."""
    return [parabolic_profile(t, NodeSet.deleting(t, [s])) for s in range(1, t.rank + 1)]


# --- optional cross-check: classify the kept subdiagram into simple factors ---

def _component_type(t: SimpleType, comp: list[int]) -> SimpleType:
    """Identify the simple type of one connected kept subdiagram.

    Degenerate shapes are folded into their isomorphic labels: any 2-node
    double bond is B2, a 3-node chain is A3 even when cut from a D fork.
    """
    size = len(comp)
    if size == 1:
        return SimpleType("A", 1)
    cartan = cartan_matrix(t)
    weight = {}
    degree = {node: 0 for node in comp}
    for a in comp:
        for b in comp:
            if a < b and cartan[a - 1][b - 1]:
                weight[(a, b)] = max(-cartan[a - 1][b - 1], -cartan[b - 1][a - 1])
                degree[a] += 1
                degree[b] += 1
    if any(w == 3 for w in weight.values()):
        if size != 2:
            raise RuntimeError(f"triple bond in a component of size {size}")
        return SimpleType("G", 2)
    doubles = [e for e, w in weight.items() if w == 2]
    if doubles:
        if len(doubles) != 1:
            raise RuntimeError("more than one double bond in a component")
        a, b = doubles[0]
        if size == 2:
            return SimpleType("B", 2)
        if degree[a] == 2 and degree[b] == 2:
            if size != 4:
                raise RuntimeError("interior double bond in a component that is not F4")
            return SimpleType("F", 4)
        # the -2 Cartan entry sits in the long root's row; B has the short
        # root at the leaf end of the double bond, C the long one
        long_node, short_node = (a, b) if cartan[a - 1][b - 1] == -2 else (b, a)
        leaf = short_node if degree[short_node] == 1 else long_node
        return SimpleType("B" if leaf == short_node else "C", size)
    if all(d <= 2 for d in degree.values()):
        return SimpleType("A", size)
    branch = [node for node, d in degree.items() if d == 3]
    if len(branch) != 1:
        raise RuntimeError("component with more than one branch node")
    arms = []
    for start in (n for n in comp if (min(branch[0], n), max(branch[0], n)) in weight):
        length = 0
        cur, prev = start, branch[0]
        while True:
            length += 1
            nxt = [n for n in comp if (min(cur, n), max(cur, n)) in weight and n != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return SimpleType("D", size)
    if arms[0] == 1 and arms[1] == 2:
        return SimpleType("E", size)
    raise RuntimeError(f"unrecognized component shape with arms {arms}")


def classify_levi(t: SimpleType, nodes: NodeSet) -> tuple[SimpleType, ...]:
    """Simple factors of the kept subdiagram, sorted canonically."""
    _check(t, nodes)
    cartan = cartan_matrix(t)
    todo = set(nodes.kept)
    factors = []
    while todo:
        comp = [todo.pop()]
        grow = list(comp)
        while grow:
            a = grow.pop()
            for b in list(todo):
                if cartan[a - 1][b - 1]:
                    todo.discard(b)
                    comp.append(b)
                    grow.append(b)
        factors.append(_component_type(t, sorted(comp)))
    return tuple(sorted(factors))


def levi_dim_by_classification(t: SimpleType, nodes: NodeSet) -> int:
    """Levi semisimple dimension via subdiagram classification; must agree
    with the root-count value (cross-check, not the primary path)."""
    return sum(closed_form_dim(f) for f in classify_levi(t, nodes))


@lru_cache(maxsize=None)
def _profile_cache(t: SimpleType, kept: frozenset[int]) -> ParabolicData:
    return parabolic_profile(t, NodeSet(t.rank, kept))


def cached_profile(t: SimpleType, kept: frozenset[int]) -> ParabolicData:
    """Memoized profile lookup used by the search and verdict layers."""
    return _profile_cache(t, kept)

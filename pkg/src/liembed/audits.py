"""Self-audits behind the `verify` subcommand.

Each audit re-derives one slab of the library's guarantees and raises on any
violation; run_all collects results.  Randomized audits use a fixed seed so
a verify run is reproducible.
"""

from __future__ import annotations

import random
from itertools import combinations

from .bounds import EMBEDS, NONEMBED, EmbedQuery, GroupExpr, make_expr, verdict
from .homotopy import coincidence_audit, pi3_audit, rational_homotopy_type
from .parabolic import (
    NodeSet,
    levi_dim_by_classification,
    levi_ss_dim,
    parabolic_profile,
    unipotent_radical_dim,
)
from .parsing import format_expr, parse_expr
from .roots import RootSystem, SimpleType, all_types, dimension, positive_roots
from .search import certificate, designated_node, good_nodes, levi_closed_form, margin_audit

FUZZ_SEED = 0x5EED


def audit_dimensions(max_rank: int = 12) -> str:
    """Closed-form dimensions match root counts; root vectors are sane."""
    types = all_types(max_rank)
    for t in types:
        dimension(t)
        RootSystem.of(t)
        roots = positive_roots(t)
        if len(set(roots)) != len(roots):
            raise RuntimeError(f"duplicate roots for {t}")
        simple = {r for r in roots if sum(r) == 1}
        if len(simple) != t.rank:
            raise RuntimeError(f"wrong simple roots for {t}")
        if any(c < 0 for r in roots for c in r):
            raise RuntimeError(f"negative coordinate in a positive root of {t}")
    return f"{len(types)} types"


def audit_parabolic_identities(max_rank: int = 8) -> str:
    """Profile identities for every node subset; codimension 1 for maximal
    parabolics; single-step monotonicity in the kept set."""
    count = 0
    for t in all_types(max_rank):
        nodes = range(1, t.rank + 1)
        for r in range(t.rank + 1):
            for kept in combinations(nodes, r):
                ns = NodeSet.keeping(t, kept)
                p = parabolic_profile(t, ns)  # raises if an identity fails
                if levi_dim_by_classification(t, ns) != p.dim_levi_ss:
                    raise RuntimeError(f"classification disagrees for {t}, kept {kept}")
                for extra in set(nodes) - set(kept):
                    bigger = NodeSet.keeping(t, set(kept) | {extra})
                    if unipotent_radical_dim(t, ns) < unipotent_radical_dim(t, bigger):
                        raise RuntimeError(f"unipotent radical not antitone for {t}")
                    if levi_ss_dim(t, ns) > levi_ss_dim(t, bigger):
                        raise RuntimeError(f"Levi dimension not monotone for {t}")
                count += 1
        for s in nodes:
            p = parabolic_profile(t, NodeSet.deleting(t, [s]))
            if p.dim_p - p.dim_pu != 1:
                raise RuntimeError(f"maximal parabolic codimension != 1 for {t}, s={s}")
    return f"{count} subsets"


def audit_search(max_rank: int = 12) -> str:
    """The designated node qualifies everywhere; exceptional Levi dimensions
    match the reference values; good_nodes is order-independent."""
    expected = {"E6": 19, "E7": 26, "E8": 35, "F4": 21, "G2": 3}
    for t in all_types(max_rank):
        good = good_nodes(t)
        if designated_node(t) not in good:
            raise RuntimeError(f"designated node of {t} not good")
        if good != frozenset(s for s in range(1, t.rank + 1) if certificate(t, s).satisfies_3ru):
            raise RuntimeError(f"good_nodes not reproducible for {t}")
    for label, levi in expected.items():
        t = SimpleType.parse(label)
        if certificate(t, designated_node(t)).profile.dim_levi_ss != levi:
            raise RuntimeError(f"exceptional Levi dimension wrong for {label}")
    return f"{len(all_types(max_rank))} types"


def audit_margins(max_rank: int = 50) -> str:
    """Margins for every classical rank up to max_rank (with the A-parity
    values and B/C/D residue formulas checked inside margin_audit) plus the
    exceptional types; closed-form Levi dimensions agree with root counts."""
    checked = 0
    for t in all_types(max_rank):
        margin_audit(t)
        if not t.is_exceptional:
            levi_closed_form(t, designated_node(t))
        checked += 1
    return f"{checked} types"


def audit_homotopy(max_rank: int = 12) -> str:
    """Sphere-dimension sums, third-homotopy normalization, the entry-5 and
    entry-7 occurrence patterns, and the B/C coincidence list."""
    for t in all_types(max_rank):
        h = rational_homotopy_type(t)  # raises if the sum breaks
        if not pi3_audit(t):
            raise RuntimeError(f"third homotopy not one-dimensional for {t}")
        if (5 in h.entries) != (t.family == "A" and t.rank >= 2):
            raise RuntimeError(f"entry-5 pattern wrong for {t}")
        if 7 in h.entries and 5 not in h.entries and t.family not in ("B", "C", "D"):
            raise RuntimeError(f"entry-7 pattern wrong for {t}")
    pairs = coincidence_audit(max_rank)
    expected = {(f"B{m}", f"C{m}") for m in range(3, max_rank + 1)}
    if {(str(a), str(b)) for a, b in pairs} != expected:
        raise RuntimeError(f"unexpected homotopy coincidences: {pairs}")
    if any(dimension(a).dim != dimension(b).dim for a, b in pairs):
        raise RuntimeError("coincident pair with different dimensions")
    return f"{len(all_types(max_rank))} types, {len(pairs)} coincident pairs"


def random_query(rng: random.Random, max_rank: int = 8) -> EmbedQuery:
    types = all_types(max_rank)
    pairs = [(rng.choice(types), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))]
    k = rng.randint(0, 20)
    if not pairs and k == 0:
        k = 1
    return EmbedQuery(make_expr(pairs, k), rng.randint(0, 40))


def audit_verdicts(samples: int = 10_000) -> str:
    """Exclusivity (verdict raises internally if violated), monotonicity in
    the affine dimension, anti-monotonicity in d, and the exhaustive
    single-factor criterion for rank <= 8."""
    rng = random.Random(FUZZ_SEED)
    for _ in range(samples):
        q = random_query(rng)
        v = verdict(q)  # raises if an embed rule and the bound both fire
        if v.kind == EMBEDS:
            grown = GroupExpr(q.target.factors, q.target.affine_dim + 1)
            if verdict(EmbedQuery(grown, q.d)).kind != EMBEDS:
                raise RuntimeError(f"not monotone in k: {q}")
        if v.kind == NONEMBED:
            if verdict(EmbedQuery(q.target, q.d + 1)).kind != NONEMBED:
                raise RuntimeError(f"not anti-monotone in d: {q}")
    for t in all_types(8):
        n = dimension(t).dim
        expr = make_expr([(t, 1)], 0)
        for d in range((n - 2) // 2 + 1):
            if 2 * d + 1 < n and verdict(EmbedQuery(expr, d)).kind != EMBEDS:
                raise RuntimeError(f"single-factor criterion missed ({t}, d={d})")
    return f"{samples} random queries"


def random_expr(rng: random.Random, max_rank: int = 8) -> GroupExpr:
    types = all_types(max_rank)
    pairs = [(rng.choice(types), rng.randint(1, 4)) for _ in range(rng.randint(0, 4))]
    k = rng.randint(0, 9)
    if not pairs and k == 0:
        k = 1
    return make_expr(pairs, k)


def audit_roundtrip(samples: int = 1_000) -> str:
    """parse(format(expr)) == expr for generated expressions."""
    rng = random.Random(FUZZ_SEED)
    for _ in range(samples):
        expr = random_expr(rng)
        if parse_expr(format_expr(expr)) != expr:
            raise RuntimeError(f"round-trip failed for {expr}")
    return f"{samples} expressions"


AUDITS = (
    ("dimensions", audit_dimensions),
    ("parabolic-identities", audit_parabolic_identities),
    ("parabolic-search", audit_search),
    ("margins", audit_margins),
    ("homotopy", audit_homotopy),
    ("verdict-fuzz", audit_verdicts),
    ("parse-roundtrip", audit_roundtrip),
)


def run_all() -> list[tuple[str, bool, str]]:
    """Run every audit; returns (name, passed, detail) triples."""
    results = []
    for name, fn in AUDITS:
        try:
            results.append((name, True, fn()))
        except Exception as exc:  # noqa: BLE001 - any failure must surface
            results.append((name, False, str(exc)))
    return results

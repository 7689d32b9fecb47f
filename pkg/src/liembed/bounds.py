"""Decision rules for "does every d-dimensional smooth affine variety embed
into this group?".

Targets are products of simple groups with an affine space.  Each rule is one
published sufficient criterion, instantiated as an exact integer inequality;
`verdict` aggregates them.  Embeds means every smooth affine variety of
dimension d embeds; ExistsNonEmbeddable means some smooth irreducible affine
variety of dimension d does not; the two are mutually exclusive because every
embed rule forces 2d + 1 <= total dimension while the non-embedding bound
needs 2d >= total dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parabolic import cached_profile
from .roots import SimpleType, dimension

EMBEDS = "Embeds"
NONEMBED = "ExistsNonEmbeddable"
UNKNOWN = "Unknown"

SEMANTICS = {
    EMBEDS: "every smooth affine variety of dimension d embeds into the target variety",
    NONEMBED: "there exists a smooth irreducible affine variety of dimension d with no embedding into the target variety",
    UNKNOWN: "the implemented criteria neither guarantee embeddings nor certify a non-embeddable variety",
}


@dataclass(frozen=True)
class GroupExpr:
    """Product of simple factors (with multiplicities) times an affine space.

    Factors are kept sorted by (family, rank) with multiplicities merged, so
    equal expressions compare equal.  Use make_expr to normalize raw input.
    """

    factors: tuple[tuple[SimpleType, int], ...]
    affine_dim: int

    def __post_init__(self) -> None:
        if self.affine_dim < 0:
            raise ValueError("affine dimension must be >= 0")
        if not self.factors and self.affine_dim == 0:
            raise ValueError("empty group expression")
        if any(mult < 1 for _, mult in self.factors):
            raise ValueError("factor multiplicities must be >= 1")
        types = [t for t, _ in self.factors]
        if sorted(types) != types or len(set(types)) != len(types):
            raise ValueError("factors must be sorted and merged; use make_expr")

    @property
    def semisimple_dim(self) -> int:
        return sum(mult * dimension(t).dim for t, mult in self.factors)

    @property
    def total_dim(self) -> int:
        return self.semisimple_dim + self.affine_dim

    @property
    def factor_count(self) -> int:
        """Number of simple factors, counted with multiplicity."""
        return sum(mult for _, mult in self.factors)

    @property
    def all_sl2(self) -> bool:
        return all(t == SimpleType("A", 1) for t, _ in self.factors)

    def __str__(self) -> str:
        parts = [f"{t}^{mult}" if mult > 1 else str(t) for t, mult in self.factors]
        if self.affine_dim:
            parts.append(f"Aff{self.affine_dim}")
        return " x ".join(parts)


def make_expr(pairs, affine_dim: int = 0) -> GroupExpr:
    """Build a normalized GroupExpr from (type, multiplicity) pairs."""
    merged: dict[SimpleType, int] = {}
    for t, mult in pairs:
        merged[t] = merged.get(t, 0) + mult
    factors = tuple(sorted(merged.items()))
    return GroupExpr(factors=factors, affine_dim=affine_dim)


@dataclass(frozen=True)
class EmbedQuery:
    target: GroupExpr
    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("variety dimension must be >= 0")


@dataclass(frozen=True)
class Verdict:
    kind: str
    rule: str | None
    inequality: str

    def __post_init__(self) -> None:
        if (self.rule is not None) != (self.kind == EMBEDS):
            raise ValueError("witness rule present iff the verdict is Embeds")

    @property
    def semantics(self) -> str:
        return SEMANTICS[self.kind]


def _eval_lowdim(q: EmbedQuery) -> str | None:
    """Characterless targets of dimension <= 10 embed everything below half
    dimension, except the two excluded expressions."""
    expr, d = q.target, q.d
    n = expr.total_dim
    if n > 10 or 2 * d + 1 > n:
        return None
    if expr.factors == ((SimpleType("A", 1), 3),) and expr.affine_dim == 0:
        return None
    if expr.factors == ((SimpleType("A", 2), 1),) and expr.affine_dim == 1:
        return None
    return f"2d+1 = {2 * d + 1} <= dim = {n} <= 10"


def _eval_simple(q: EmbedQuery) -> str | None:
    """Single simple factor: embeds when dim G + k > 2d + 1."""
    expr, d = q.target, q.d
    if expr.factor_count != 1:
        return None
    total = expr.total_dim
    if total > 2 * d + 1:
        return f"dim G + k = {total} > 2d+1 = {2 * d + 1}"
    return None


def _eval_semisimple(q: EmbedQuery) -> str | None:
    """r simple factors: embeds when dim G + k > 2d + r."""
    expr, d = q.target, q.d
    r = expr.factor_count
    if r < 1:
        return None
    total = expr.total_dim
    if total > 2 * d + r:
        return f"dim G + k = {total} > 2d+r = {2 * d + r}"
    return None


def _eval_product_affine(q: EmbedQuery) -> str | None:
    """Affine factor large enough to absorb the variety: 2d+1 <= k + dim H
    and d <= k."""
    expr, d = q.target, q.d
    k, h = expr.affine_dim, expr.semisimple_dim
    if 2 * d + 1 <= k + h and d <= k:
        return f"2d+1 = {2 * d + 1} <= k + dim H = {k + h} and d = {d} <= k = {k}"
    return None


def _eval_sl2_products(q: EmbedQuery) -> str | None:
    """Targets Aff^m x SL2^s: 2d+1 <= m + 3s together with d <= m+s or the
    parity slack on s."""
    expr, d = q.target, q.d
    if not expr.all_sl2:
        return None
    m, s = expr.affine_dim, expr.factor_count
    if 2 * d + 1 > m + 3 * s:
        return None
    head = f"2d+1 = {2 * d + 1} <= m+3s = {m + 3 * s}"
    if d <= m + s:
        return f"{head} and d = {d} <= m+s = {m + s}"
    if (m + 3 * s) % 2 == 1 and s - 1 <= m:
        return f"{head}, m+3s odd and s-1 = {s - 1} <= m = {m}"
    if (m + 3 * s) % 2 == 0 and s - 2 <= m:
        return f"{head}, m+3s even and s-2 = {s - 2} <= m = {m}"
    return None


def _eval_nonembed(q: EmbedQuery) -> str | None:
    """Above half the target dimension some variety never embeds."""
    expr, d = q.target, q.d
    n = expr.total_dim
    if 2 * d >= n >= 1:
        return f"2d = {2 * d} >= dim = {n}"
    return None


_EMBED_RULES = (
    ("lowdim", _eval_lowdim),
    ("simple", _eval_simple),
    ("semisimple", _eval_semisimple),
    ("product_affine", _eval_product_affine),
    ("sl2_products", _eval_sl2_products),
)


def rule_lowdim(q: EmbedQuery) -> bool:
    return _eval_lowdim(q) is not None


def rule_simple(q: EmbedQuery) -> bool:
    return _eval_simple(q) is not None


def rule_semisimple(q: EmbedQuery) -> bool:
    return _eval_semisimple(q) is not None


def rule_product_affine(q: EmbedQuery) -> bool:
    return _eval_product_affine(q) is not None


def rule_sl2_products(q: EmbedQuery) -> bool:
    return _eval_sl2_products(q) is not None


def rule_nonembed(q: EmbedQuery) -> bool:
    return _eval_nonembed(q) is not None


def verdict(q: EmbedQuery) -> Verdict:
    """Aggregate the rules; the witness is the first firing rule in the fixed
    order lowdim, simple, semisimple, product_affine, sl2_products."""
    fired = None
    for name, rule in _EMBED_RULES:
        inequality = rule(q)
        if inequality is not None:
            fired = (name, inequality)
            break
    bound = _eval_nonembed(q)
    if fired and bound is not None:
        raise RuntimeError(f"embed rule {fired[0]} and the non-embedding bound both fired on {q}")
    if fired:
        return Verdict(kind=EMBEDS, rule=fired[0], inequality=fired[1])
    if bound is not None:
        return Verdict(kind=NONEMBED, rule=None, inequality=bound)
    return Verdict(kind=UNKNOWN, rule=None, inequality="")


# --- diagnostic: general parabolic certificates (not part of the verdict) ---

def parabolic_diagnostic(q: EmbedQuery) -> dict | None:
    """Search for a product parabolic P with dim P^u - 1 <= 3 dim R_u(P) and
    2d + (dim P - dim P^u) < dim G + k.

    More general than the maximal-parabolic route (the codimension may exceed
    the factor count), but deliberately excluded from `verdict`: it reports
    which parabolic certifies a query, nothing else.  Returns None when no
    parabolic qualifies.
    """
    expr, d = q.target, q.d
    if expr.factor_count < 1:
        return None
    slack = expr.semisimple_dim + expr.affine_dim - 2 * d  # need codim < slack
    if slack <= 1:
        return None

    # per factor: for each codimension, the minimal excess dim P^u - 3 dim R_u
    # and a witness kept-set
    factor_options = []
    for t, mult in expr.factors:
        best: dict[int, tuple[int, frozenset[int]]] = {}
        nodes = list(range(1, t.rank + 1))
        for bits in range(1 << t.rank):
            kept = frozenset(nodes[i] for i in range(t.rank) if bits >> i & 1)
            p = cached_profile(t, kept)
            excess = p.dim_pu - 3 * p.dim_unip_rad
            c = p.codim_count
            if c not in best or excess < best[c][0]:
                best[c] = (excess, kept)
        for _ in range(mult):
            factor_options.append((t, best))

    # knapsack over factors: minimal total excess per total codimension
    state: dict[int, tuple[int, tuple]] = {0: (0, ())}
    for t, best in factor_options:
        nxt: dict[int, tuple[int, tuple]] = {}
        for c0, (e0, picks) in state.items():
            for c, (e, kept) in best.items():
                ct, et = c0 + c, e0 + e
                if ct >= slack:
                    continue
                if ct not in nxt or et < nxt[ct][0]:
                    nxt[ct] = (et, picks + ((t, kept),))
        state = nxt

    viable = [(c, e, picks) for c, (e, picks) in state.items() if e <= 1]
    if not viable:
        return None
    codim, excess, picks = min(viable)
    return {
        "factors": [(str(t), tuple(sorted(kept))) for t, kept in picks],
        "codim": codim,
        "excess": excess,
        "inequality": (
            f"2d + (dim P - dim P^u) = {2 * d + codim} < dim G + k = "
            f"{expr.semisimple_dim + expr.affine_dim}"
        ),
    }

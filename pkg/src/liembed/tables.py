"""Deterministic regeneration of the reference tables.

Every table is derived from the library's own computations (no timestamps,
no locale, LF newlines), so a byte comparison against the golden files in
tests/golden is a regression check on the whole stack.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .homotopy import rational_homotopy_type
from .parabolic import NodeSet, parabolic_profile
from .roots import SimpleType, all_types, dimension, positive_roots
from .search import certificate, designated_node, margin_audit

TABLE_IDS = ("dims", "parabolic-classical", "parabolic-exceptional", "homotopy", "margins")


@dataclass(frozen=True)
class Report:
    """One rendered table: identifier, column names, rows, format."""

    table_id: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    format: str

    def __post_init__(self) -> None:
        if self.format not in ("tsv", "json"):
            raise ValueError(f"unknown format {self.format!r}; choose tsv or json")

    def render(self) -> str:
        if self.format == "tsv":
            lines = ["\t".join(self.header)]
            lines.extend("\t".join(str(cell) for cell in row) for row in self.rows)
            return "\n".join(lines) + "\n"
        objs = [dict(zip(self.header, row)) for row in self.rows]
        return json.dumps(objs, indent=2) + "\n"

_EXCEPTIONAL_ORDER = ("E6", "E7", "E8", "F4", "G2")

# the nine family rows: symbolic sphere-dimension patterns for the classical
# series, explicit multisets for the exceptional types
_HOMOTOPY_FAMILY_ROWS = (
    ("A_m (m>=1)", "m^2+2m", "{3, 5, ..., 2m+1}"),
    ("B_m (m>=2)", "2m^2+m", "{3, 7, ..., 4m-1}"),
    ("C_m (m>=3)", "2m^2+m", "{3, 7, ..., 4m-1}"),
    ("D_m (m>=4)", "2m^2-m", "{3, 7, ..., 4m-5} u {2m-1}"),
)


def _dims() -> tuple[tuple[str, ...], list[tuple]]:
    header = ("type", "dim", "rank", "positive_roots")
    rows = []
    for t in all_types(12):
        g = dimension(t)
        rows.append((str(t), g.dim, g.rank, len(positive_roots(t))))
    return header, rows


def _parabolic_classical() -> tuple[tuple[str, ...], list[tuple]]:
    header = ("type", "s", "dim_levi_ss", "dim_unip_rad", "dim_p", "dim_pu", "margin")
    rows = []
    for t in all_types(12, exceptionals=False):
        c = certificate(t, designated_node(t))
        p = c.profile
        rows.append((str(t), c.deleted_node, p.dim_levi_ss, p.dim_unip_rad, p.dim_p, p.dim_pu, c.margin))
    return header, rows


def _parabolic_exceptional() -> tuple[tuple[str, ...], list[tuple]]:
    header = ("type", "node", "dim_g", "dim_levi_ss")
    rows = []
    for label in _EXCEPTIONAL_ORDER:
        t = SimpleType.parse(label)
        s = designated_node(t)
        p = parabolic_profile(t, NodeSet.deleting(t, [s]))
        rows.append((label, s, p.dim_g, p.dim_levi_ss))
    return header, rows


def _homotopy() -> tuple[tuple[str, ...], list[tuple]]:
    header = ("type", "dim", "homotopy_type")
    rows: list[tuple] = list(_HOMOTOPY_FAMILY_ROWS)
    for label in _EXCEPTIONAL_ORDER:
        t = SimpleType.parse(label)
        rows.append((label, dimension(t).dim, str(rational_homotopy_type(t))))
    return header, rows


def _margins() -> tuple[tuple[str, ...], list[tuple]]:
    header = ("type", "s", "dim_g", "dim_levi_ss", "margin")
    rows = []
    types = all_types(50, exceptionals=False) + [SimpleType.parse(x) for x in _EXCEPTIONAL_ORDER]
    for t in types:
        s = designated_node(t)
        c = certificate(t, s)
        margin_audit(t)
        rows.append((str(t), s, c.profile.dim_g, c.profile.dim_levi_ss, c.margin))
    return header, rows


_GENERATORS = {
    "dims": _dims,
    "parabolic-classical": _parabolic_classical,
    "parabolic-exceptional": _parabolic_exceptional,
    "homotopy": _homotopy,
    "margins": _margins,
}


def table_rows(which: str) -> tuple[tuple[str, ...], list[tuple]]:
    if which not in _GENERATORS:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLE_IDS)}")
    return _GENERATORS[which]()


def build_report(which: str, fmt: str = "tsv") -> Report:
    header, rows = table_rows(which)
    return Report(table_id=which, header=header, rows=tuple(rows), format=fmt)


def emit_tables(which: str, fmt: str = "tsv") -> str:
    """Render one table as TSV (default) or JSON, newline-terminated."""
    return build_report(which, fmt).render()

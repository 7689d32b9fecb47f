"""Command-line front end.

Exit codes: 0 = Embeds, 1 = ExistsNonEmbeddable, 2 = Unknown, 3 = any error
or failed verify.  Users should enter characterless targets in their
Levi-decomposed form (simple factors times Aff k); the verdict semantics
string spells out the quantifier behind each answer.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import audits
from .bounds import EMBEDS, NONEMBED, EmbedQuery, Verdict, verdict
from .homotopy import rational_homotopy_type
from .parabolic import NodeSet, parabolic_profile
from .parsing import format_expr, parse_expr
from .roots import SimpleType, dimension
from .search import designated_node, good_nodes
from .tables import TABLE_IDS, emit_tables

_EXIT = {EMBEDS: 0, NONEMBED: 1, "Unknown": 2}
ERROR_EXIT = 3


@dataclass(frozen=True)
class QuerySpec:
    """Raw query text plus its parse; parsing must round-trip."""

    raw: str
    parsed: EmbedQuery

    def __post_init__(self) -> None:
        if parse_expr(format_expr(self.parsed.target)) != self.parsed.target:
            raise RuntimeError(f"expression parse does not round-trip: {self.raw!r}")

    @classmethod
    def of(cls, text: str, d: int) -> "QuerySpec":
        return cls(raw=text, parsed=EmbedQuery(parse_expr(text), d))


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would masquerade as Unknown
    def error(self, message: str):
        raise _UsageError(message)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_verdict(query: EmbedQuery, result: Verdict, as_json: bool) -> str:
    payload = {
        "verdict": result.kind,
        "rule": result.rule,
        "inequality": result.inequality,
        "total_dim": query.target.total_dim,
        "d": query.d,
        "semantics": result.semantics,
    }
    if as_json:
        return json.dumps(payload, indent=2) + "\n"
    return "".join(f"{key}\t{'' if value is None else value}\n" for key, value in payload.items())


def run_query(spec: QuerySpec, as_json: bool = False) -> tuple[str, int]:
    """Decide a query; returns the rendered verdict and its exit code."""
    result = verdict(spec.parsed)
    return render_verdict(spec.parsed, result, as_json), _EXIT[result.kind]


def _cmd_verdict(args) -> int:
    text, code = run_query(QuerySpec.of(args.expr, args.dim), args.json)
    _emit(text, args.out)
    return code


def _cmd_tables(args) -> int:
    _emit(emit_tables(args.id, args.format), args.out)
    return 0


def _cmd_parabolic(args) -> int:
    t = SimpleType.parse(args.type)
    good = good_nodes(t)
    if args.all:
        wanted = range(1, t.rank + 1)
    elif args.node is not None:
        wanted = [args.node]
    else:
        wanted = [designated_node(t)]
    lines = ["type\tdeleted\tdim_g\tdim_levi_ss\tdim_unip_rad\tdim_p\tdim_pu\tgood"]
    for s in wanted:
        p = parabolic_profile(t, NodeSet.deleting(t, [s]))
        lines.append(
            f"{t}\t{s}\t{p.dim_g}\t{p.dim_levi_ss}\t{p.dim_unip_rad}"
            f"\t{p.dim_p}\t{p.dim_pu}\t{'yes' if s in good else 'no'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_homotopy(args) -> int:
    t = SimpleType.parse(args.type)
    h = rational_homotopy_type(t)
    _emit(f"type\tdim\thomotopy_type\n{t}\t{dimension(t).dim}\t{h}\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    failed = False
    for name, ok, detail in audits.run_all():
        line = f"{'ok' if ok else 'FAIL'} {name}: {detail}"
        print(line)
        failed = failed or not ok
    return ERROR_EXIT if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="liembed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verdict", help="decide an embedding query")
    p.add_argument("expr", help='target group, e.g. "B4 x C3" or "A1^3 x Aff2"')
    p.add_argument("--dim", type=int, required=True, help="variety dimension d")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(fn=_cmd_verdict)

    p = sub.add_parser("tables", help="regenerate a reference table")
    p.add_argument("id", choices=TABLE_IDS)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", help="write the table to a file")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("parabolic", help="maximal-parabolic dimension profiles")
    p.add_argument("type", help="simple type, e.g. B4")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--node", type=int, help="deleted node")
    g.add_argument("--all", action="store_true", help="profiles for every node")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(fn=_cmd_parabolic)

    p = sub.add_parser("homotopy", help="rational homotopy type of a simple group")
    p.add_argument("type", help="simple type, e.g. G2")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(fn=_cmd_homotopy)

    p = sub.add_parser("verify", help="run every internal audit")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR_EXIT
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR_EXIT


if __name__ == "__main__":
    sys.exit(main())

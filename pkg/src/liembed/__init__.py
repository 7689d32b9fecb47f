"""Exact-arithmetic Lie theory toolkit: root systems, parabolic dimension
profiles, embedding-dimension verdicts, and rational homotopy types of the
simple algebraic groups."""

from .bounds import EmbedQuery, GroupExpr, Verdict, make_expr, verdict
from .homotopy import HomotopyType, coincidence_audit, rational_homotopy_type
from .parabolic import NodeSet, ParabolicData, levi_ss_dim, parabolic_profile, unipotent_radical_dim
from .parsing import ExprSyntaxError, format_expr, parse_expr
from .roots import GroupDims, RootSystem, SimpleType, cartan_matrix, dimension, positive_roots
from .search import ParabolicCertificate, certificate, designated_node, good_nodes

__version__ = "0.1.0"

__all__ = [
    "EmbedQuery",
    "ExprSyntaxError",
    "GroupDims",
    "GroupExpr",
    "HomotopyType",
    "NodeSet",
    "ParabolicCertificate",
    "ParabolicData",
    "RootSystem",
    "SimpleType",
    "Verdict",
    "cartan_matrix",
    "certificate",
    "coincidence_audit",
    "designated_node",
    "dimension",
    "format_expr",
    "good_nodes",
    "levi_ss_dim",
    "make_expr",
    "parabolic_profile",
    "parse_expr",
    "positive_roots",
    "rational_homotopy_type",
    "unipotent_radical_dim",
    "verdict",
]

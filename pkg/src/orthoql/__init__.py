"""Exact subspace lattices and partial projections over Q and Q(i).

The package computes with finite-dimensional inner-product spaces whose
scalars are rationals or Gaussian rationals, so every subspace
operation, projection, and law check is a decision, not an
approximation.  The central objects are canonical subspaces, orthogonal
pairs of subspaces, and the partial projections they correspond to.
"""

from orthoql.errors import (
    AmbientMismatch,
    DimensionMismatch,
    NotCommuting,
    NotInDomain,
    OrthoQLError,
    ParseError,
    SingularGram,
)
from orthoql.kernel import BACKEND
from orthoql.laws import (
    CLQL_LAWS,
    COMPLQL_LAWS,
    FAILING_LAWS,
    PLS_LAWS,
    Counterexample,
    LawReport,
    LawResult,
    check_clql,
    check_complql,
    check_pls,
    find_counterexample,
)
from orthoql.linalg import Matrix, Vector, inner, norm_sq
from orthoql.ortho import (
    OrthoSubspace,
    o_eq,
    o_iff,
    o_implies,
    o_join,
    o_leq,
    o_meet,
    o_minus,
    o_neg,
    o_not,
    o_perp,
)
from orthoql.partial_op import (
    CommReport,
    OrderReport,
    PartialOperator,
    PartialProjection,
    check_order,
    commuting_calculus,
    compose,
    cor7_calculus,
    decompose,
    identity_on,
    norm_sq_is_one,
    o_neq,
    op_eq,
    op_neq,
    pls_add,
    pls_negate,
    pls_scale,
    pls_sub,
    pls_zero_of,
    proj_compl,
    proj_iff,
    proj_implies,
    proj_join,
    proj_leq,
    proj_meet,
    proj_minus,
    proj_not,
    proj_orthogonal,
    projection_of,
    subspaces_of,
    total_identity,
    total_zero,
    zero_on,
)
from orthoql.quotient import QuotientSpace
from orthoql.scalars import Field, GaussianRational, Scalar
from orthoql.subspace import Subspace, coperp_rel, perp_rel

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BACKEND",
    "CLQL_LAWS",
    "COMPLQL_LAWS",
    "CommReport",
    "Counterexample",
    "DimensionMismatch",
    "FAILING_LAWS",
    "Field",
    "GaussianRational",
    "LawReport",
    "LawResult",
    "Matrix",
    "NotCommuting",
    "NotInDomain",
    "OrderReport",
    "OrthoQLError",
    "OrthoSubspace",
    "PLS_LAWS",
    "ParseError",
    "PartialOperator",
    "PartialProjection",
    "QuotientSpace",
    "Scalar",
    "SingularGram",
    "Subspace",
    "Vector",
    "check_clql",
    "check_complql",
    "check_order",
    "check_pls",
    "commuting_calculus",
    "compose",
    "coperp_rel",
    "cor7_calculus",
    "decompose",
    "find_counterexample",
    "identity_on",
    "inner",
    "norm_sq",
    "norm_sq_is_one",
    "o_eq",
    "o_iff",
    "o_implies",
    "o_join",
    "o_leq",
    "o_meet",
    "o_minus",
    "o_neg",
    "o_neq",
    "o_not",
    "o_perp",
    "op_eq",
    "op_neq",
    "perp_rel",
    "pls_add",
    "pls_negate",
    "pls_scale",
    "pls_sub",
    "pls_zero_of",
    "proj_compl",
    "proj_iff",
    "proj_implies",
    "proj_join",
    "proj_leq",
    "proj_meet",
    "proj_minus",
    "proj_not",
    "proj_orthogonal",
    "projection_of",
    "subspaces_of",
    "total_identity",
    "total_zero",
    "zero_on",
]

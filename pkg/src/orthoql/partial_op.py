"""Partial linear operators and partial projections.

An operator acts only on the vectors of its domain subspace; values
elsewhere are deliberately meaningless.  The stored ambient matrix is
normalized to vanish on the orthocomplement of the domain, which makes
equality of operators literal equality of (domain, matrix) pairs.

Projections defined on a domain that splits as (fixed part) + (killed
part) correspond exactly to orthogonal pairs of subspaces; the maps
``projection_of`` and ``subspaces_of`` realize the two directions of
that correspondence, and the logical operations on projections are
routed through it.  The calculus of composites for ordered pairs and
for commuting projections is checked clause by clause, with each
clause reported as holds / fails / hypothesis-not-met.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from orthoql.errors import AmbientMismatch, NotCommuting, NotInDomain
from orthoql.linalg import Matrix, Vector, inner, norm_sq, null_space, principal_minors_nonneg, solve
from orthoql.ortho import OrthoSubspace, o_join, o_leq, o_meet, o_neg
from orthoql.scalars import Field, GaussianRational, Scalar
from orthoql.subspace import Subspace, perp_rel

__all__ = [
    "PartialOperator",
    "PartialProjection",
    "identity_on",
    "zero_on",
    "total_identity",
    "total_zero",
    "decompose",
    "projection_of",
    "subspaces_of",
    "op_eq",
    "op_eq_witness",
    "op_neq",
    "o_neq",
    "compose",
    "proj_compl",
    "proj_meet",
    "proj_join",
    "proj_minus",
    "proj_implies",
    "proj_iff",
    "proj_not",
    "proj_leq",
    "proj_orthogonal",
    "pls_add",
    "pls_scale",
    "pls_negate",
    "pls_zero_of",
    "pls_sub",
    "norm_sq_is_one",
    "ClauseOutcome",
    "ClauseReport",
    "OrderReport",
    "CommReport",
    "check_order",
    "commuting_calculus",
    "cor7_calculus",
]


class PartialOperator:
    """A linear map defined on a subspace of the ambient space."""

    __slots__ = ("dom", "matrix")

    def __init__(self, dom: Subspace, matrix: Matrix):
        if matrix.nrows != dom.ambient_dim or matrix.ncols != dom.ambient_dim:
            raise AmbientMismatch(
                f"{matrix.nrows}x{matrix.ncols} matrix on ambient dimension {dom.ambient_dim}"
            )
        if matrix.field is not dom.field:
            raise AmbientMismatch(f"{matrix.field.value} matrix over {dom.field.value} domain")
        self.dom = dom
        # Kill the orthocomplement of the domain so that equal operators
        # have bit-equal matrices.  Harmless on the domain itself.
        self.matrix = matrix @ dom.projector

    @property
    def field(self) -> Field:
        return self.dom.field

    @property
    def ambient_dim(self) -> int:
        return self.dom.ambient_dim

    @property
    def is_total(self) -> bool:
        return self.dom.is_full

    def __call__(self, x: Vector) -> Vector:
        if not self.dom.contains(x):
            raise NotInDomain(f"{x!r} is outside the domain")
        return self.matrix @ x

    apply = __call__

    def __eq__(self, other):
        if not isinstance(other, PartialOperator):
            return NotImplemented
        return op_eq(self, other)

    def __hash__(self):
        return hash((self.dom, self.matrix))

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}(dom={self.dom!r}, matrix={self.matrix!r})"


class PartialProjection(PartialOperator):
    """A partial operator that is idempotent and self-adjoint on its
    domain and maps the domain into itself."""

    def __init__(self, dom: Subspace, matrix: Matrix):
        super().__init__(dom, matrix)
        m = self.matrix
        images = [m @ b for b in dom.basis.rows()]
        for b, pb in zip(dom.basis.rows(), images):
            if not dom.contains(pb):
                raise ValueError("projection must map its domain into itself")
            if m @ pb != pb:
                raise ValueError("projection must be idempotent on its domain")
        for b, pb in zip(dom.basis.rows(), images):
            for c, pc in zip(dom.basis.rows(), images):
                if inner(pb, c) != inner(b, pc):
                    raise ValueError("projection must be self-adjoint on its domain")


def _check_ambient(t: PartialOperator, u: PartialOperator):
    if t.field is not u.field or t.ambient_dim != u.ambient_dim:
        raise AmbientMismatch(
            f"{t.field.value}^{t.ambient_dim} vs {u.field.value}^{u.ambient_dim}"
        )


# --- constructors ------------------------------------------------------

def identity_on(dom: Subspace) -> PartialProjection:
    """The identity as a partial map on ``dom``."""
    return PartialProjection(dom, Matrix.identity(dom.field, dom.ambient_dim))


def zero_on(dom: Subspace) -> PartialProjection:
    """The zero map on ``dom`` (distinct from zero maps on other domains)."""
    return PartialProjection(dom, Matrix.zero(dom.field, dom.ambient_dim, dom.ambient_dim))


def total_identity(field: Field, ambient_dim: int) -> PartialProjection:
    return identity_on(Subspace.full(field, ambient_dim))


def total_zero(field: Field, ambient_dim: int) -> PartialProjection:
    return zero_on(Subspace.full(field, ambient_dim))


# --- the correspondence with orthogonal pairs ---------------------------

def decompose(pair: OrthoSubspace, x: Vector) -> tuple[Vector, Vector]:
    """Split x in dom(pair) as l1 + l0 with l1 in the one-part and l0 in
    the zero-part.  The split is unique because the parts are orthogonal."""
    if not pair.dom.contains(x):
        raise NotInDomain(f"{x!r} is outside the decidable domain")
    l1 = pair.one.project(x)
    return l1, x - l1


def projection_of(pair: OrthoSubspace) -> PartialProjection:
    """The partial projection with domain dom(pair) fixing the one-part
    and killing the zero-part."""
    return PartialProjection(pair.dom, pair.one.projector)


def subspaces_of(p: PartialProjection) -> OrthoSubspace:
    """Recover the orthogonal pair of a partial projection: fixed
    vectors and the kernel inside the domain."""
    n = p.ambient_dim
    fix = null_space(p.matrix - Matrix.identity(p.field, n))
    one = Subspace(p.field, n, [list(fix.col(j)) for j in range(fix.ncols)])
    ker = null_space(p.matrix)
    ker_sub = Subspace(p.field, n, [list(ker.col(j)) for j in range(ker.ncols)])
    return OrthoSubspace(one, ker_sub.meet(p.dom))


# --- equality and apartness ---------------------------------------------

def op_eq(t: PartialOperator, u: PartialOperator) -> bool:
    """Same domain and same values on it (canonical forms make this a
    literal comparison)."""
    _check_ambient(t, u)
    return t.dom == u.dom and t.matrix == u.matrix


def op_eq_witness(t: PartialOperator, u: PartialOperator):
    """None when equal; otherwise ("domain", v) for a vector in one
    domain only, or ("value", v) for a common vector mapped differently."""
    _check_ambient(t, u)
    if t.dom != u.dom:
        for b in t.dom.basis.rows():
            if not u.dom.contains(b):
                return ("domain", b)
        for b in u.dom.basis.rows():
            if not t.dom.contains(b):
                return ("domain", b)
    if t.matrix != u.matrix:
        for b in t.dom.basis.rows():
            if t.matrix @ b != u.matrix @ b:
                return ("value", b)
    return None


def op_neq(t: PartialOperator, u: PartialOperator) -> tuple[bool, Optional[Vector]]:
    """Witnessed apartness of partial operators.

    True with a nonzero witness x when x is in one domain and orthogonal
    to the other, or in both domains with different images.  This is
    finer than the failure of op_eq: domains that overlap obliquely
    without an orthogonal witness make both op_eq and op_neq false.
    """
    _check_ambient(t, u)
    left = t.dom.meet(u.dom.perp())
    if left.is_strict:
        return True, left.basis.row(0)
    right = u.dom.meet(t.dom.perp())
    if right.is_strict:
        return True, right.basis.row(0)
    common = t.dom.meet(u.dom)
    for b in common.basis.rows():
        if t.matrix @ b != u.matrix @ b:
            return True, b
    return False, None


def o_neq(a: OrthoSubspace, b: OrthoSubspace) -> tuple[bool, Optional[Vector]]:
    """Apartness of orthogonal pairs, via their projections."""
    return op_neq(projection_of(a), projection_of(b))


# --- composition ---------------------------------------------------------

def compose(q: PartialOperator, p: PartialOperator) -> PartialOperator:
    """q after p, on the exact domain {x in dom(p) : p(x) in dom(q)}.

    Membership of p(x) in dom(q) is one linear condition on the
    coefficients of x over the domain basis, so the domain is the image
    of a kernel.
    """
    _check_ambient(q, p)
    n = p.ambient_dim
    b_t = p.dom.basis.transpose()
    outside = (Matrix.identity(p.field, n) - q.dom.projector) @ p.matrix
    ker = null_space(outside @ b_t)
    vectors = [list(b_t @ ker.col(j)) for j in range(ker.ncols)]
    dom = Subspace(p.field, n, vectors)
    return PartialOperator(dom, q.matrix @ p.matrix)


# --- logical operations on projections ------------------------------------

def proj_compl(p: PartialProjection) -> PartialProjection:
    """1 - p with 1 meaning the identity of dom(p): same domain,
    x mapped to x - p(x)."""
    return PartialProjection(p.dom, p.dom.projector - p.matrix)


def proj_meet(p: PartialProjection, q: PartialProjection) -> PartialProjection:
    return projection_of(o_meet(subspaces_of(p), subspaces_of(q)))


def proj_join(p: PartialProjection, q: PartialProjection) -> PartialProjection:
    return projection_of(o_join(subspaces_of(p), subspaces_of(q)))


def proj_minus(p: PartialProjection, q: PartialProjection) -> PartialProjection:
    return proj_meet(p, proj_compl(q))


def proj_implies(p: PartialProjection, q: PartialProjection) -> PartialProjection:
    return proj_join(proj_compl(p), q)


def proj_iff(p: PartialProjection, q: PartialProjection) -> PartialProjection:
    return proj_meet(proj_implies(p, q), proj_implies(q, p))


def proj_not(p: PartialProjection) -> PartialProjection:
    return proj_implies(p, total_zero(p.field, p.ambient_dim))


def proj_leq(p: PartialProjection, q: PartialProjection) -> bool:
    return o_leq(subspaces_of(p), subspaces_of(q))


def proj_orthogonal(p: PartialProjection, q: PartialProjection) -> bool:
    return proj_leq(p, proj_compl(q))


# --- partial linear structure ---------------------------------------------

def pls_add(t: PartialOperator, u: PartialOperator) -> PartialOperator:
    """Pointwise sum on the meet of the domains."""
    _check_ambient(t, u)
    return PartialOperator(t.dom.meet(u.dom), t.matrix + u.matrix)


def pls_scale(k: Scalar, t: PartialOperator) -> PartialOperator:
    """Pointwise scaling; the domain is kept even when k is zero."""
    return PartialOperator(t.dom, t.matrix.scaled(k))


def pls_negate(t: PartialOperator) -> PartialOperator:
    return PartialOperator(t.dom, -t.matrix)


def pls_zero_of(t: PartialOperator) -> PartialOperator:
    """The zero map carried by the domain of t."""
    return zero_on(t.dom)


def pls_sub(t: PartialOperator, u: PartialOperator) -> PartialOperator:
    return pls_add(t, pls_negate(u))


# --- norm certificate --------------------------------------------------

def norm_sq_is_one(p: PartialProjection) -> bool:
    """Whether the operator norm of p is exactly one.

    True precisely when the fixed space is nonzero; certified from both
    sides: a nonzero fixed vector attains the norm, and the quadratic
    form |x|^2 - |p(x)|^2 over domain coefficients is positive
    semidefinite (all principal minors of its Hermitian matrix are
    nonnegative), so no vector exceeds it.
    """
    one = subspaces_of(p).one
    if one.is_strict:
        l = one.basis.row(0)
        attained = (p.matrix @ l == l) and not l.is_zero
    else:
        attained = False
    basis = p.dom.basis.rows()
    images = [p.matrix @ b for b in basis]
    r = len(basis)
    diff = Matrix(
        p.field,
        r,
        r,
        (
            inner(basis[i], basis[j]) - inner(images[i], images[j])
            for i in range(r)
            for j in range(r)
        ),
    )
    bounded = diff == diff.conj_transpose() and principal_minors_nonneg(diff)
    return one.is_strict and attained and bounded


# --- clause reports ---------------------------------------------------

HOLDS = "holds"
FAILS = "fails"
SKIPPED = "hypothesis-not-met"


@dataclass
class ClauseOutcome:
    status: str
    detail: str = ""


@dataclass
class ClauseReport:
    clauses: dict = dc_field(default_factory=dict)

    def record(self, clause: str, ok: bool, detail: str = ""):
        self.clauses[clause] = ClauseOutcome(HOLDS if ok else FAILS, detail if not ok else "")

    def skip(self, clause: str, detail: str = ""):
        self.clauses[clause] = ClauseOutcome(SKIPPED, detail)

    @property
    def ok(self) -> bool:
        return all(c.status != FAILS for c in self.clauses.values())

    def summary(self) -> str:
        lines = []
        for name in sorted(self.clauses):
            c = self.clauses[name]
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"{name}: {c.status}{suffix}")
        return "\n".join(lines)


@dataclass
class OrderReport(ClauseReport):
    order_holds: bool = False


@dataclass
class CommReport(ClauseReport):
    pass


def _spanning_samples(sub: Subspace) -> list[Vector]:
    # Basis vectors plus pairwise sums: enough to exercise the
    # inequalities off the coordinate axes of the basis.
    basis = sub.basis.rows()
    samples = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            samples.append(basis[i] + basis[j])
    return samples


def _real_or_none(v: Scalar) -> Optional[Fraction]:
    if isinstance(v, GaussianRational):
        return v.re if v.im == 0 else None
    return v


def check_order(l: OrthoSubspace, m: OrthoSubspace) -> OrderReport:
    """Clause-by-clause check of the composite characterization of the
    order on orthogonal pairs.

    The unconditional clause is the biconditional: l <= m exactly when
    projecting into m after projecting into l changes nothing, and dually
    for the zero-parts.  The remaining clauses assume l <= m and are
    reported as hypothesis-not-met otherwise.
    """
    if l.field is not m.field or l.ambient_dim != m.ambient_dim:
        raise AmbientMismatch(
            f"{l.field.value}^{l.ambient_dim} vs {m.field.value}^{m.ambient_dim}"
        )
    report = OrderReport()
    p_l1 = projection_of(l)
    p_l0 = projection_of(o_neg(l))
    p_m1 = projection_of(m)
    p_m0 = projection_of(o_neg(m))
    ordered = o_leq(l, m)
    report.order_holds = ordered

    composites = op_eq(compose(p_m1, p_l1), p_l1) and op_eq(compose(p_l0, p_m0), p_m0)
    if ordered == composites:
        report.record("lescomp1_i", True)
    else:
        w1 = op_eq_witness(compose(p_m1, p_l1), p_l1)
        w0 = op_eq_witness(compose(p_l0, p_m0), p_m0)
        report.record(
            "lescomp1_i",
            False,
            f"order={ordered} composites={composites} witness_one={w1} witness_zero={w0}",
        )

    if not ordered:
        for clause in ("lescomp1_iia", "lescomp1_meet", "lescomp1_iiia", "lescomp1_iva"):
            report.skip(clause, "pairs are not ordered")
        return report

    meet = l.dom.meet(m.dom)

    c1 = compose(p_l1, p_m1)
    c0 = compose(p_m0, p_l0)
    doms_ok = c1.dom == meet and c0.dom == meet
    values_ok = all(
        c1.matrix @ b == p_l1.matrix @ b and c0.matrix @ b == p_m0.matrix @ b
        for b in meet.basis.rows()
    )
    report.record(
        "lescomp1_iia",
        doms_ok and values_ok,
        f"domains_match={doms_ok} values_match={values_ok}",
    )

    middle = l.zero.meet(m.one)
    parts = (l.one, middle, m.zero)
    split_ok = (l.one.join(middle).join(m.zero) == meet) and all(
        perp_rel(a, b) for a, b in ((parts[0], parts[1]), (parts[0], parts[2]), (parts[1], parts[2]))
    )
    report.record("lescomp1_meet", split_ok)

    samples = _spanning_samples(meet)
    norm_ok = True
    norm_detail = ""
    for x in samples:
        up = norm_sq(p_l1.matrix @ x) <= norm_sq(p_m1.matrix @ x)
        down = norm_sq(p_m0.matrix @ x) <= norm_sq(p_l0.matrix @ x)
        if not (up and down):
            norm_ok = False
            norm_detail = f"sample {x!r}"
            break
    report.record("lescomp1_iiia", norm_ok, norm_detail)

    inner_ok = True
    inner_detail = ""
    for x in samples:
        vals = [
            _real_or_none(inner(p_l1.matrix @ x, x)),
            _real_or_none(inner(p_m1.matrix @ x, x)),
            _real_or_none(inner(p_m0.matrix @ x, x)),
            _real_or_none(inner(p_l0.matrix @ x, x)),
        ]
        if any(v is None for v in vals) or not (vals[0] <= vals[1] and vals[2] <= vals[3]):
            inner_ok = False
            inner_detail = f"sample {x!r}"
            break
    report.record("lescomp1_iva", inner_ok, inner_detail)
    return report


def _raw_sum_covers(a: Subspace, b: Subspace) -> bool:
    """Whether {x + y : x in a, y in b} already fills the join of a and b."""
    joined = a.join(b)
    cols = [list(r) for r in a.basis.rows()] + [list(r) for r in b.basis.rows()]
    if not cols:
        return joined.is_zero
    stacked = Matrix.from_cols(a.field, cols)
    return all(solve(stacked, v) is not None for v in joined.basis.rows())


def commuting_calculus(p: PartialProjection, q: PartialProjection) -> CommReport:
    """The composite calculus available once p and q commute.

    Raises NotCommuting (with an apartness witness for the two
    composites) when they do not.
    """
    _check_ambient(p, q)
    qp = compose(q, p)
    pq = compose(p, q)
    if not op_eq(qp, pq):
        raise NotCommuting(
            "the composites differ", witness=op_eq_witness(pq, qp)
        )
    jp = subspaces_of(p)
    jq = subspaces_of(q)
    report = CommReport()

    meet_part = jp.one.meet(jq.one)
    join_part = jp.zero.join(jq.zero)
    dom_ok = pq.dom == meet_part.join(join_part) and perp_rel(meet_part, join_part)
    report.record("comm1_i", dom_ok)

    report.record("comm1_ii", _raw_sum_covers(jp.zero, jq.zero))

    report.record("comm1_iii", op_eq(proj_meet(p, q), qp))

    cp = proj_compl(p)
    cq = proj_compl(q)
    d_qp = compose(cq, cp).dom
    d_pq = compose(cp, cq).dom
    if d_qp != d_pq:
        report.skip("comm1_iv", "complement composites have different domains")
    else:
        join_proj = proj_join(p, q)
        rhs = pls_sub(pls_add(p, q), qp)
        common = join_proj.dom.meet(rhs.dom)
        pointwise = all(
            join_proj.matrix @ b == rhs.matrix @ b for b in common.basis.rows()
        )
        ones_raw = _raw_sum_covers(jp.one, jq.one)
        report.record(
            "comm1_iv",
            pointwise and ones_raw,
            f"pointwise={pointwise} one_parts_raw_sum={ones_raw}",
        )
    return report


def cor7_calculus(l: OrthoSubspace, m: OrthoSubspace) -> ClauseReport:
    """Consequences of joining total pairs with l below the complement
    of m: the one-parts sum without closure, the projections compose to
    the total zero map, and the projection of the join is the sum of
    the projections."""
    if l.field is not m.field or l.ambient_dim != m.ambient_dim:
        raise AmbientMismatch(
            f"{l.field.value}^{l.ambient_dim} vs {m.field.value}^{m.ambient_dim}"
        )
    report = ClauseReport()
    if not (l.is_total and m.is_total and o_leq(l, o_neg(m))):
        for clause in ("cor7_i", "cor7_ii", "cor7_iii"):
            report.skip(clause, "pairs are not total and orthogonal")
        return report
    p_l = projection_of(l)
    p_m = projection_of(m)
    report.record("cor7_i", _raw_sum_covers(l.one, m.one))
    report.record(
        "cor7_ii",
        op_eq(compose(p_l, p_m), total_zero(l.field, l.ambient_dim)),
    )
    report.record(
        "cor7_iii",
        op_eq(projection_of(o_join(l, m)), pls_add(p_l, p_m)),
    )
    return report

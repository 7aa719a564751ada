"""Seeded random instances for the law suites and the CLI.

Everything is driven by an explicit random.Random, so a seed pins the
whole sample.  Scalar entries are small rationals: numerators in
-3..3, denominators in 1..3.  Besides plain uniform sampling there are
shaped generators whose outputs satisfy the hypotheses of the
conditional laws by construction (ordered pairs, orthogonal total
pairs, commuting projections); without them the conditional clauses
would be vacuous on random data.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from orthoql.linalg import Matrix, Vector, matrix_inverse
from orthoql.ortho import OrthoSubspace, o_neg
from orthoql.partial_op import PartialOperator, PartialProjection, projection_of
from orthoql.quotient import QuotientSpace
from orthoql.scalars import Field, GaussianRational, Scalar
from orthoql.subspace import Subspace

__all__ = [
    "rng_from",
    "random_scalar",
    "random_vector",
    "random_subspace",
    "random_member",
    "random_subspace_within",
    "random_ortho",
    "random_total_ortho",
    "orthogonal_total_pair",
    "clql_triples",
    "complql_triples",
    "ordered_ortho_pairs",
    "non_ordered_ortho_pairs",
    "random_partial_operator",
    "random_partial_projection",
    "cayley_unitary",
    "conjugated",
    "commuting_pairs",
    "quotient_samples",
]


def rng_from(seed: Optional[int]) -> random.Random:
    return random.Random(seed)


def random_scalar(rng: random.Random, field: Field) -> Scalar:
    def frac() -> Fraction:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    if field is Field.Qi:
        return GaussianRational(frac(), frac())
    return frac()


def random_vector(rng: random.Random, field: Field, dim: int) -> Vector:
    return Vector(field, (random_scalar(rng, field) for _ in range(dim)))


def random_subspace(
    rng: random.Random, field: Field, dim: int, max_rank: Optional[int] = None
) -> Subspace:
    k = rng.randint(0, dim if max_rank is None else min(max_rank, dim))
    return Subspace(field, dim, [random_vector(rng, field, dim) for _ in range(k)])


def random_member(rng: random.Random, sub: Subspace) -> Vector:
    coeffs = [random_scalar(rng, sub.field) for _ in range(sub.rank)]
    return sub.member_from_coefficients(coeffs)


def random_subspace_within(rng: random.Random, sub: Subspace) -> Subspace:
    k = rng.randint(0, sub.rank)
    return Subspace(
        sub.field, sub.ambient_dim, [random_member(rng, sub) for _ in range(k)]
    )


def random_ortho(rng: random.Random, field: Field, dim: int) -> OrthoSubspace:
    one = random_subspace(rng, field, dim)
    zero = random_subspace_within(rng, one.perp())
    return OrthoSubspace(one, zero)


def random_total_ortho(rng: random.Random, field: Field, dim: int) -> OrthoSubspace:
    return OrthoSubspace.total_from(random_subspace(rng, field, dim))


def clql_triples(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[Subspace, Subspace, Subspace]]:
    out = []
    for _ in range(count):
        out.append(
            (
                random_subspace(rng, field, dim),
                random_subspace(rng, field, dim),
                random_subspace(rng, field, dim),
            )
        )
    return out


def orthogonal_total_pair(
    rng: random.Random, field: Field, dim: int
) -> tuple[OrthoSubspace, OrthoSubspace]:
    """Two total pairs with the first below the complement of the second."""
    l1 = random_subspace(rng, field, dim)
    m1 = random_subspace_within(rng, l1.perp())
    return OrthoSubspace.total_from(l1), OrthoSubspace.total_from(m1)


def _ordered_pair(
    rng: random.Random, field: Field, dim: int, total: bool
) -> tuple[OrthoSubspace, OrthoSubspace]:
    """A pair ordered low-to-high; with total=True both ends are total."""
    l1 = random_subspace(rng, field, dim)
    m1 = l1.join(random_subspace(rng, field, dim))
    if total:
        return OrthoSubspace.total_from(l1), OrthoSubspace.total_from(m1)
    m0 = random_subspace_within(rng, m1.perp())
    l0 = m0.join(random_subspace_within(rng, l1.perp()))
    return OrthoSubspace(l1, l0), OrthoSubspace(m1, m0)


def complql_triples(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[OrthoSubspace, OrthoSubspace, OrthoSubspace]]:
    """Triples mixing plain random pairs with shaped instances that meet
    the hypotheses of the conditional laws."""
    out = []
    for k in range(count):
        n_pair = random_ortho(rng, field, dim)
        pattern = k % 5
        if pattern == 0:
            l, m = random_ortho(rng, field, dim), random_ortho(rng, field, dim)
        elif pattern == 1:
            l, m = orthogonal_total_pair(rng, field, dim)
        elif pattern == 2:
            l, m = _ordered_pair(rng, field, dim, total=True)
        elif pattern == 3:
            a, b = orthogonal_total_pair(rng, field, dim)
            l, m = o_neg(b), o_neg(a)
        else:
            l = random_total_ortho(rng, field, dim)
            m = l
        out.append((l, m, n_pair))
    return out


def ordered_ortho_pairs(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[OrthoSubspace, OrthoSubspace]]:
    return [
        _ordered_pair(rng, field, dim, total=bool(k % 2)) for k in range(count)
    ]


def non_ordered_ortho_pairs(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[OrthoSubspace, OrthoSubspace]]:
    out = []
    while len(out) < count:
        l = random_ortho(rng, field, dim)
        m = random_ortho(rng, field, dim)
        if not l.leq(m):
            out.append((l, m))
            continue
        if not m.leq(l):
            out.append((m, l))
    return out


def random_partial_operator(
    rng: random.Random, field: Field, dim: int, total: bool = False
) -> PartialOperator:
    dom = Subspace.full(field, dim) if total else random_subspace(rng, field, dim)
    entries = [random_scalar(rng, field) for _ in range(dim * dim)]
    return PartialOperator(dom, Matrix(field, dim, dim, entries))


def random_partial_projection(
    rng: random.Random, field: Field, dim: int, total: bool = False
) -> PartialProjection:
    pair = (random_total_ortho if total else random_ortho)(rng, field, dim)
    return projection_of(pair)


def cayley_unitary(rng: random.Random, field: Field, dim: int) -> Matrix:
    """A random unitary with exact entries: (I - A)(I + A)^-1 for a
    skew-adjoint A.  I + A is always invertible for such A, and the
    transform of a skew-adjoint matrix is unitary."""

    def frac() -> Fraction:
        return Fraction(rng.randint(-2, 2), rng.randint(1, 2))

    entries: list[list[Scalar]] = [[field.zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            if field is Field.Qi:
                if i == j:
                    entries[i][j] = GaussianRational(Fraction(0), frac())
                else:
                    s, t = frac(), frac()
                    entries[i][j] = GaussianRational(s, t)
                    entries[j][i] = GaussianRational(-s, t)
            else:
                if i != j:
                    a = frac()
                    entries[i][j] = a
                    entries[j][i] = -a
    a = Matrix.from_rows(field, entries)
    eye = Matrix.identity(field, dim)
    return (eye - a) @ matrix_inverse(eye + a)


def conjugated(p: PartialProjection, u: Matrix) -> PartialProjection:
    """The projection seen through the unitary change of coordinates u."""
    dom = Subspace(
        p.field, p.ambient_dim, [list(u @ b) for b in p.dom.basis.rows()]
    )
    return PartialProjection(dom, u @ p.matrix @ u.conj_transpose())


def _coordinate_projection(
    field: Field, dim: int, support: set[int], fixed: set[int]
) -> PartialProjection:
    def axes(idx: set[int]) -> Subspace:
        rows = []
        for j in sorted(idx):
            row = [field.zero] * dim
            row[j] = field.one
            rows.append(row)
        return Subspace(field, dim, rows)

    return projection_of(OrthoSubspace(axes(fixed), axes(support - fixed)))


def commuting_pairs(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[PartialProjection, PartialProjection]]:
    """Pairs of commuting projections: simultaneously diagonal on the
    coordinate axes, then optionally pushed through a shared unitary.

    Two coordinate projections commute exactly when the domains of the
    two composites coincide as index sets, so candidates are rejection
    sampled on that criterion (sharing the support always works and is
    the fallback).
    """
    out = []
    axes = list(range(dim))
    while len(out) < count:
        s1 = {j for j in axes if rng.randint(0, 1)}
        t1 = {j for j in s1 if rng.randint(0, 1)}
        for _ in range(8):
            s2 = {j for j in axes if rng.randint(0, 1)}
            t2 = {j for j in s2 if rng.randint(0, 1)}
            d12 = (t1 & s2) | (s1 - t1)
            d21 = (t2 & s1) | (s2 - t2)
            if d12 == d21:
                break
        else:
            s2 = set(s1)
            t2 = {j for j in s2 if rng.randint(0, 1)}
        p = _coordinate_projection(field, dim, s1, t1)
        q = _coordinate_projection(field, dim, s2, t2)
        if rng.randint(0, 1):
            u = cayley_unitary(rng, field, dim)
            p, q = conjugated(p, u), conjugated(q, u)
        out.append((p, q))
    return out


def quotient_samples(
    rng: random.Random, field: Field, dim: int, count: int
) -> list[tuple[QuotientSpace, Vector, Vector, Vector]]:
    """Quotients with three random members of the carrier each."""
    out = []
    for _ in range(count):
        base = random_ortho(rng, field, dim)
        q = QuotientSpace(base)
        carrier = base.dom
        out.append(
            (
                q,
                random_member(rng, carrier),
                random_member(rng, carrier),
                random_member(rng, carrier),
            )
        )
    return out

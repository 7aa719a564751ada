"""Canonical subspaces: lattice operations, distances, orthogonality."""

import random
from fractions import Fraction as F

import pytest

import oracle
from conftest import sub_to_oracle, to_vec
from orthoql.errors import AmbientMismatch
from orthoql.generators import random_subspace, random_vector, rng_from
from orthoql.linalg import Vector, norm_sq
from orthoql.scalars import Field, GaussianRational as G
from orthoql.subspace import Subspace, coperp_rel, perp_rel


def q3(*rows):
    return Subspace(Field.Q, 3, rows)


def test_spanning_sets_collapse_to_one_representative():
    assert q3([2, 4, 0]) == q3([1, 2, 0])
    assert q3([1, 0, 0], [1, 1, 0]) == q3([0, 1, 0], [1, 0, 0])
    assert q3([1, 2, 3], [2, 4, 6]).rank == 1
    assert hash(q3([2, 4, 0])) == hash(q3([1, 2, 0]))


def test_meet_join_perp_known():
    a = q3([1, 0, 0], [0, 1, 0])
    b = q3([0, 1, 0], [0, 0, 1])
    assert a.meet(b) == q3([0, 1, 0])
    assert a.join(b).is_full
    assert a.perp() == q3([0, 0, 1])
    assert q3().perp().is_full
    assert Subspace.full(Field.Q, 3).perp().is_zero


def test_perp_over_gaussians():
    s = Subspace(Field.Qi, 2, [[G(1), G(0, 1)]])
    assert s.perp() == Subspace(Field.Qi, 2, [[G(1), G(0, -1)]])
    # Double complement restores the line.
    assert s.perp().perp() == s


def test_membership_and_coefficients():
    a = q3([1, 2, 0], [0, 0, 1])
    x = Vector(Field.Q, [F(3), F(6), F(-1)])
    assert a.contains(x)
    coeffs = a.coefficients_of(x)
    assert coeffs is not None
    assert a.member_from_coefficients(list(coeffs)) == x
    assert not a.contains(Vector(Field.Q, [F(0), F(1), F(0)]))
    assert a.coefficients_of(Vector(Field.Q, [F(0), F(1), F(0)])) is None


def test_distance_known():
    line = q3([1, 0, 0])
    x = Vector(Field.Q, [F(2), F(3), F(0)])
    assert line.distance_sq(x) == F(9)
    assert line.project(x) == Vector(Field.Q, [F(2), F(0), F(0)])
    assert Subspace.full(Field.Q, 3).distance_sq(x) == F(0)
    assert q3().distance_sq(x) == norm_sq(x)


def test_projector_shape():
    diag = q3([1, 1, 0])
    p = diag.projector
    assert p @ p == p
    assert p.conj_transpose() == p
    x = Vector(Field.Q, [F(1), F(1), F(0)])
    assert p @ x == x


def test_lattice_matches_oracle():
    rng = rng_from(101)
    for field, dim in ((Field.Q, 3), (Field.Q, 4), (Field.Qi, 3)):
        for _ in range(30):
            a = random_subspace(rng, field, dim)
            b = random_subspace(rng, field, dim)
            oa, ob = sub_to_oracle(a), sub_to_oracle(b)
            assert sub_to_oracle(a.meet(b)) == oracle.s_meet(oa, ob, dim)
            assert sub_to_oracle(a.join(b)) == oracle.s_join(oa, ob, dim)
            assert sub_to_oracle(a.perp()) == oracle.s_perp(oa, dim)
            assert a.leq(b) == oracle.s_leq(oa, ob, dim)
            x = random_vector(rng, field, dim)
            assert a.contains(x) == oracle.member(oa, to_vec(x), dim)


def test_distance_matches_oracle():
    rng = rng_from(7)
    for _ in range(40):
        dim = rng.randint(1, 4)
        sub = random_subspace(rng, Field.Q, dim)
        x = random_vector(rng, Field.Q, dim)
        assert sub.distance_sq(x) == oracle.distance_sq(
            to_vec(x), sub_to_oracle(sub), dim
        )


def test_everything_is_located_at_finite_dimension():
    rng = rng_from(55)
    for _ in range(25):
        sub = random_subspace(rng, Field.Q, 4)
        assert sub.is_located_total()
        assert sub.meet(sub.perp()).is_zero
        assert sub.join(sub.perp()).is_full


def test_orthogonality_relations():
    assert perp_rel(q3([1, 0, 0]), q3([0, 1, 0]))
    assert perp_rel(q3(), q3([1, 2, 3]))
    assert not perp_rel(q3([1, 0, 0]), q3([1, 1, 0]))
    apart, witness = coperp_rel(
        Subspace(Field.Q, 2, [[1, 0]]), Subspace(Field.Q, 2, [[1, 1]])
    )
    assert apart
    x, y = witness
    assert x == Vector(Field.Q, [F(1), F(0)]) and y == Vector(Field.Q, [F(1), F(1)])
    no, nothing = coperp_rel(q3([1, 0, 0]), q3([0, 0, 1]))
    assert not no and nothing is None


def test_operator_sugar():
    a = q3([1, 0, 0])
    b = q3([0, 1, 0])
    assert (a | b) == q3([1, 0, 0], [0, 1, 0])
    assert (a & b).is_zero
    assert a <= (a | b)
    assert (a | b) >= b


def test_ambient_checks():
    with pytest.raises(AmbientMismatch):
        q3([1, 0, 0]).meet(Subspace(Field.Q, 2, [[1, 0]]))
    with pytest.raises(AmbientMismatch):
        q3([1, 0, 0]).join(Subspace(Field.Qi, 3, [[G(1), G(0), G(0)]]))


def test_zero_ambient_dimension():
    z = Subspace(Field.Q, 0)
    assert z.is_zero and z.is_full
    assert z.perp() == z
    assert z.contains(Vector(Field.Q, []))

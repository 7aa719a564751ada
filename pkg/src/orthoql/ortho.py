"""Pairs of orthogonal subspaces with lattice and complement structure.

An element is a pair (one, zero) of subspaces that are orthogonal to
each other: "one" carries the vectors regarded as fully inside, "zero"
the vectors regarded as fully outside, and their join is the domain on
which membership is decided.  Pairs where the domain is the whole
ambient space are called total.  The complement simply swaps the two
components, which makes it an involution by construction; the
interesting content is how it interacts with meet and join, and that
is what the law battery in :mod:`orthoql.laws` exercises.
"""

from __future__ import annotations

from orthoql.errors import AmbientMismatch
from orthoql.scalars import Field
from orthoql.subspace import Subspace, perp_rel

__all__ = [
    "OrthoSubspace",
    "o_meet",
    "o_join",
    "o_neg",
    "o_minus",
    "o_implies",
    "o_iff",
    "o_not",
    "o_leq",
    "o_eq",
    "o_perp",
]


class OrthoSubspace:
    """An orthogonal pair of subspaces of a common ambient space."""

    __slots__ = ("one", "zero", "_dom")

    def __init__(self, one: Subspace, zero: Subspace):
        if one.field is not zero.field or one.ambient_dim != zero.ambient_dim:
            raise AmbientMismatch(
                f"{one.field.value}^{one.ambient_dim} vs "
                f"{zero.field.value}^{zero.ambient_dim}"
            )
        if not perp_rel(one, zero):
            raise ValueError("components of an orthogonal pair must be orthogonal")
        self.one = one
        self.zero = zero
        self._dom = None

    # --- constructors --------------------------------------------------

    @classmethod
    def bottom(cls, field: Field, ambient_dim: int) -> "OrthoSubspace":
        """The total pair with empty one-part: everything is outside."""
        return cls(Subspace.zero(field, ambient_dim), Subspace.full(field, ambient_dim))

    @classmethod
    def top(cls, field: Field, ambient_dim: int) -> "OrthoSubspace":
        """The total pair with full one-part: everything is inside."""
        return cls(Subspace.full(field, ambient_dim), Subspace.zero(field, ambient_dim))

    @classmethod
    def total_from(cls, one: Subspace) -> "OrthoSubspace":
        """The unique total pair with the given one-part."""
        return cls(one, one.perp())

    # --- structure -------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.one.field

    @property
    def ambient_dim(self) -> int:
        return self.one.ambient_dim

    @property
    def dom(self) -> Subspace:
        """Join of the two components: where membership is settled."""
        if self._dom is None:
            self._dom = self.one.join(self.zero)
        return self._dom

    @property
    def is_total(self) -> bool:
        return self.dom.is_full

    @property
    def is_strict(self) -> bool:
        return self.one.is_strict

    def local_zero(self) -> "OrthoSubspace":
        """The least element of the interval this pair lives in."""
        return OrthoSubspace(Subspace.zero(self.field, self.ambient_dim), self.dom)

    def local_one(self) -> "OrthoSubspace":
        """The greatest element of the interval this pair lives in."""
        return OrthoSubspace(self.dom, Subspace.zero(self.field, self.ambient_dim))

    def __eq__(self, other):
        if not isinstance(other, OrthoSubspace):
            return NotImplemented
        return self.one == other.one and self.zero == other.zero

    def __hash__(self):
        return hash((self.one, self.zero))

    def __repr__(self):
        return f"OrthoSubspace(one={self.one!r}, zero={self.zero!r})"

    # --- operations ------------------------------------------------------

    def meet(self, other: "OrthoSubspace") -> "OrthoSubspace":
        return OrthoSubspace(self.one & other.one, self.zero | other.zero)

    def join(self, other: "OrthoSubspace") -> "OrthoSubspace":
        return OrthoSubspace(self.one | other.one, self.zero & other.zero)

    def neg(self) -> "OrthoSubspace":
        return OrthoSubspace(self.zero, self.one)

    def minus(self, other: "OrthoSubspace") -> "OrthoSubspace":
        return self.meet(other.neg())

    def implies(self, other: "OrthoSubspace") -> "OrthoSubspace":
        return self.neg().join(other)

    def leq(self, other: "OrthoSubspace") -> bool:
        return self.one.leq(other.one) and other.zero.leq(self.zero)

    def __and__(self, other):
        return self.meet(other)

    def __or__(self, other):
        return self.join(other)

    def __neg__(self):
        return self.neg()

    def __sub__(self, other):
        return self.minus(other)

    def __le__(self, other):
        return self.leq(other)

    def __ge__(self, other):
        return other.leq(self)


def o_meet(a: OrthoSubspace, b: OrthoSubspace) -> OrthoSubspace:
    return a.meet(b)


def o_join(a: OrthoSubspace, b: OrthoSubspace) -> OrthoSubspace:
    return a.join(b)


def o_neg(a: OrthoSubspace) -> OrthoSubspace:
    return a.neg()


def o_minus(a: OrthoSubspace, b: OrthoSubspace) -> OrthoSubspace:
    return a.minus(b)


def o_implies(a: OrthoSubspace, b: OrthoSubspace) -> OrthoSubspace:
    return a.implies(b)


def o_iff(a: OrthoSubspace, b: OrthoSubspace) -> OrthoSubspace:
    return o_implies(a, b).meet(o_implies(b, a))


def o_not(a: OrthoSubspace) -> OrthoSubspace:
    """Implication into the bottom pair (not the same as neg in general)."""
    return a.implies(OrthoSubspace.bottom(a.field, a.ambient_dim))


def o_leq(a: OrthoSubspace, b: OrthoSubspace) -> bool:
    return a.leq(b)


def o_eq(a: OrthoSubspace, b: OrthoSubspace) -> bool:
    return a == b


def o_perp(a: OrthoSubspace, b: OrthoSubspace) -> bool:
    """Orthogonality of pairs: a sits below the complement of b."""
    return a.leq(b.neg())

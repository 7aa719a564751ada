"""Shared test plumbing: oracle bridging and acceptance-line reporting."""

from fractions import Fraction

from orthoql.linalg import Matrix, Vector
from orthoql.scalars import Field, GaussianRational
from orthoql.subspace import Subspace

# Lines registered by the acceptance tests; echoed after the run so the
# one-line verdicts are visible in the terminal summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# --- bridges into the brute-force oracle's representation ---------------

def to_num(scalar):
    if isinstance(scalar, GaussianRational):
        return (scalar.re, scalar.im)
    return (Fraction(scalar), Fraction(0))


def to_vec(v):
    return tuple(to_num(e) for e in v)


def to_mat(m):
    return tuple(to_vec(row) for row in m.rows())


def from_num(field, pair):
    if field is Field.Qi:
        return GaussianRational(pair[0], pair[1])
    assert pair[1] == 0
    return pair[0]


def from_vec(field, x):
    return Vector(field, [from_num(field, e) for e in x])


def sub_to_oracle(sub: Subspace):
    return to_mat(sub.basis)


def oracle_to_sub(field, mat_rows, dim) -> Subspace:
    return Subspace(field, dim, [from_vec(field, row) for row in mat_rows])

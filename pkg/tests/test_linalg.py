from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitlie.errors import DimensionMismatch, NonCommuting, NotSplitOverField
from splitlie.fixtures import sl2
from splitlie.linalg import (
    Subspace,
    as_vector,
    charpoly,
    diag,
    identity,
    inverse,
    is_direct,
    joint_eigenspaces,
    kernel,
    matmul,
    matvec,
    rank,
    rational_eigenvalues,
    rational_roots,
    rref,
    solve_coordinates,
    to_fraction,
    unit_vector,
    zeros,
)

from strategies import spanning_sets, vectors


def span(*vs, n=None):
    n = n if n is not None else len(vs[0])
    return Subspace.span(vs, n)


def test_to_fraction_rejects_floats():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    assert to_fraction("3/4") == F(3, 4)


@pytest.mark.parametrize(
    "m, expected",
    [
        (identity(2), [[1, 0], [0, 1]]),
        ([[2, 4], [1, 2]], [[1, 2], [0, 0]]),
        ([[0, 1], [1, 0]], [[1, 0], [0, 1]]),
    ],
)
def test_rref_examples(m, expected):
    assert [list(r) for r in rref(m)] == expected


def test_kernel_examples():
    assert kernel(identity(3)).is_zero()
    assert kernel(zeros(2, 2)).dim == 2
    assert kernel([[1, 1]]).basis == ((1, -1),)


def test_sum_intersect_examples():
    e1, e2 = unit_vector(2, 0), unit_vector(2, 1)
    assert span(e1) + span(e2) == Subspace.full(2)
    assert (span(e1) & span(e2)).is_zero()
    a = span((1, 1, 0), (0, 0, 1))
    assert a & span((1, 1, 1)) == span((1, 1, 1))


def test_contains_vector_and_subspace():
    a = span((1, 1, 0), (0, 0, 1))
    assert (2, 2, 5) in a
    assert (1, 0, 0) not in a
    assert a.contains(span((1, 1, 1)))
    with pytest.raises(DimensionMismatch):
        a.contains((1, 1))


def test_coordinates_use_pivot_entries():
    a = span((1, 1, 0), (0, 0, 1))
    assert a.coordinates((2, 2, 5)) == (2, 5)
    with pytest.raises(ValueError):
        a.coordinates((1, 0, 0))


def test_complement_in():
    outer = Subspace.full(3)
    inner = span((1, 1, 0))
    c = inner.complement_in(outer)
    assert c.dim == 2
    assert is_direct([inner, c], 3)
    assert (inner + c).is_full()


def test_inverse_and_solve():
    m = [[2, 1], [1, 1]]
    assert matmul(m, inverse(m)) == identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])
    assert solve_coordinates([(1, 0, 1), (0, 1, 1)], (2, 3, 5)) == (2, 3)
    assert solve_coordinates([(1, 0, 1)], (0, 1, 0)) is None


def test_charpoly_and_roots():
    # x^2 - 4 for diag(2, -2)
    assert charpoly(diag([2, -2])) == [-4, 0, 1]
    assert rational_roots([F(-1, 4), 0, 1]) == {F(-1, 2): 1, F(1, 2): 1}
    assert rational_roots([0, 0, 1]) == {0: 2}
    assert rational_roots([1, 0, 1]) == {}


def test_rational_eigenvalues_examples():
    assert rational_eigenvalues(diag([2, -2, 0])) == [-2, 0, 2]
    with pytest.raises(NotSplitOverField):
        rational_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(NotSplitOverField):
        rational_eigenvalues([[0, -1], [1, 0]])
    L = sl2()
    assert rational_eigenvalues(L.ad_basis(2)) == [-2, 0, 2]


def test_joint_eigenspaces_examples():
    got = joint_eigenspaces([diag([1, -1])])
    assert got == [((-1,), span((0, 1))), ((1,), span((1, 0)))]
    got = joint_eigenspaces([diag([1, 1]), diag([2, 3])])
    assert got == [((1, 2), span((1, 0))), ((1, 3), span((0, 1)))]
    with pytest.raises(NonCommuting):
        joint_eigenspaces([diag([1, 2]), [[0, 1], [1, 0]]])
    assert joint_eigenspaces([], 2) == [((), Subspace.full(2))]


def test_joint_eigenspaces_of_sl2_sum():
    from splitlie.fixtures import sl2_sum

    L = sl2_sum()
    got = dict(joint_eigenspaces([L.ad_basis(c) for c in L.cartan]))
    assert sorted(got) == [(-2, 0), (0, -2), (0, 0), (0, 2), (2, 0)]
    assert got[(0, 0)].dim == 2
    assert all(s.dim == 1 for f, s in got.items() if any(f))


@given(spanning_sets(4), spanning_sets(4))
@settings(max_examples=150, deadline=None)
def test_grassmann_identity(a, b):
    A, B = Subspace.span(a, 4), Subspace.span(b, 4)
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    assert (A & B) == (B & A)
    assert A.contains(A & B) and (A + B).contains(A)


@given(spanning_sets(4), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_rref_basis_is_canonical(a, rng):
    A = Subspace.span(a, 4)
    shuffled = list(a)
    rng.shuffle(shuffled)
    combos = [
        [x + 2 * y for x, y in zip(shuffled[k], shuffled[(k + 1) % len(shuffled)])]
        for k in range(len(shuffled))
    ] if shuffled else []
    B = Subspace.span(shuffled + combos, 4)
    assert A == B
    assert A.basis == B.basis


@given(vectors(3), vectors(3))
@settings(max_examples=100, deadline=None)
def test_kernel_is_annihilated(r1, r2):
    k = kernel([r1, r2], 3)
    for v in k.basis:
        assert matvec([r1, r2], v) == (0, 0)
    assert k.dim + rank([r1, r2]) == 3


def test_as_vector_accepts_rational_strings():
    assert as_vector(["1/2", 3]) == (F(1, 2), 3)

"""Lie algebras given by structure constants on a finite basis."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, JacobiViolation
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    as_vector,
    is_zero_vector,
    kernel,
    linear_combination,
    unit_vector,
    vec_add,
    zero_vector,
)


class LieAlgebra:
    """A Lie algebra over Q presented by the brackets of its basis vectors.

    ``brackets`` maps index pairs ``(i, j)`` with ``i < j`` to the coordinate
    vector of ``[e_i, e_j]``; missing pairs bracket to zero. The remaining
    products follow from antisymmetry. ``cartan`` lists the basis indices
    spanning the designated Cartan subalgebra H.

    The Jacobi identity is checked on construction unless ``check_jacobi``
    is false, which exists only so that broken tables can be inspected with
    :func:`validate_jacobi`.
    """

    def __init__(
        self,
        basis: Sequence[str],
        brackets: Mapping[tuple[int, int], Sequence],
        cartan: Sequence[int],
        check_jacobi: bool = True,
    ):
        self.basis = tuple(basis)
        n = self.dim = len(self.basis)
        if len(set(self.basis)) != n:
            raise ValueError("basis names must be distinct")
        self.cartan = tuple(cartan)
        if not self.cartan:
            raise ValueError("cartan index list is empty")
        if len(set(self.cartan)) != len(self.cartan):
            raise ValueError("cartan indices must be distinct")
        if any(not 0 <= c < n for c in self.cartan):
            raise ValueError(f"cartan index out of range for dim {n}")

        zero = zero_vector(n)
        table = [[zero] * n for _ in range(n)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key ({i},{j}) must satisfy 0 <= i < j < {n}")
            v = as_vector(coeffs)
            if len(v) != n:
                raise DimensionMismatch(f"bracket ({i},{j}) has {len(v)} coefficients, expected {n}")
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        self._table = tuple(tuple(row) for row in table)

        if check_jacobi:
            triple = _jacobi_failure(self)
            if triple is not None:
                raise JacobiViolation(triple, self.basis)

    # ------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis)}, cartan={list(self.cartan)})"

    def _key(self):
        return (self.basis, self._table, self.cartan)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def structure_constant(self, i: int, j: int) -> Vector:
        """Coordinates of ``[e_i, e_j]``."""
        return self._table[i][j]

    def nonzero_brackets(self) -> dict[tuple[int, int], Vector]:
        return {
            (i, j): self._table[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if not is_zero_vector(self._table[i][j])
        }

    def element(self, name: str) -> Vector:
        return unit_vector(self.dim, self.basis.index(name))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x, y = as_vector(x), as_vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"bracket expects vectors of length {self.dim}")
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] += c * s
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> [x, y]``; column j holds ``[x, e_j]``."""
        x = as_vector(x)
        cols = [self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def ad_basis(self, i: int) -> Matrix:
        cols = self._table[i]
        return tuple(tuple(cols[j][k] for j in range(self.dim)) for k in range(self.dim))

    @property
    def cartan_subspace(self) -> Subspace:
        return Subspace.span([unit_vector(self.dim, c) for c in self.cartan], self.dim)

    def bracket_spaces(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of ``[x, y]`` over basis vectors x of ``a`` and y of ``b``."""
        return Subspace.span(
            [self.bracket(x, y) for x in a.basis for y in b.basis], self.dim
        )

    # ------------------------------------------------------------------
    def center(self) -> Subspace:
        """``Z(L) = {c : [c, L] = 0}``."""
        # [c, e_j] = -ad(e_j) c, so stack every ad(e_j)
        rows = [row for j in range(self.dim) for row in self.ad_basis(j)]
        return kernel(rows, self.dim)

    def derived(self) -> Subspace:
        return Subspace.span(
            [self._table[i][j] for i in range(self.dim) for j in range(i + 1, self.dim)],
            self.dim,
        )

    def is_perfect(self) -> bool:
        return self.derived().is_full() and self.center().is_zero()

    def is_ideal(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise DimensionMismatch("subspace is not in this algebra")
        return all(
            s.contains(self.bracket(unit_vector(self.dim, i), v))
            for i in range(self.dim)
            for v in s.basis
        )

    def is_subalgebra(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise DimensionMismatch("subspace is not in this algebra")
        return all(
            s.contains(self.bracket(x, y))
            for k, x in enumerate(s.basis)
            for y in s.basis[k + 1:]
        )

    def commute(self, a: Subspace, b: Subspace) -> bool:
        """True when ``[a, b] = 0``."""
        return all(is_zero_vector(self.bracket(x, y)) for x in a.basis for y in b.basis)


def _jacobi_failure(L: LieAlgebra):
    n = L.dim
    t = L._table
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                # [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                total = zero_vector(n)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = t[a][b]
                    if is_zero_vector(inner):
                        continue
                    term = linear_combination(inner, [t[m][c] for m in range(n)], n)
                    total = vec_add(total, term)
                if not is_zero_vector(total):
                    return (i, j, k)
    return None


def validate_jacobi(L: LieAlgebra) -> tuple[bool, tuple[int, int, int] | None]:
    """Check the Jacobi identity on all basis triples ``i < j < k``.

    Returns ``(True, None)`` or ``(False, offending_triple)``.
    """
    triple = _jacobi_failure(L)
    return triple is None, triple


def direct_sum(first: LieAlgebra, second: LieAlgebra, suffixes=("1", "2")) -> LieAlgebra:
    """The direct sum with basis ``first`` then ``second``; names are suffixed."""
    n1, n2 = first.dim, second.dim
    names = [b + suffixes[0] for b in first.basis] + [b + suffixes[1] for b in second.basis]
    brackets = {}
    for (i, j), v in first.nonzero_brackets().items():
        brackets[(i, j)] = tuple(v) + zero_vector(n2)
    for (i, j), v in second.nonzero_brackets().items():
        brackets[(i + n1, j + n1)] = zero_vector(n1) + tuple(v)
    cartan = list(first.cartan) + [c + n1 for c in second.cartan]
    return LieAlgebra(names, brackets, cartan, check_jacobi=False)

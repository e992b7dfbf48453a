"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`; a matrix
acts on column vectors, so ``matvec(m, v)[i] = sum_j m[i][j] * v[j]``.
Subspaces are stored by their reduced row-echelon basis, which makes two
subspaces equal exactly when their bases are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonCommuting, NotSplitOverField

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def as_vector(v: Iterable) -> Vector:
    return tuple(to_fraction(x) for x in v)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(as_vector(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged matrix rows")
    return m


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(zero_vector(cols) for _ in range(rows))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(to_fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def linear_combination(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return zeros(ncols or 0, 0)
    return tuple(zip(*m))


def matvec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b))


def mat_scale(c, m: Matrix) -> Matrix:
    return tuple(vec_scale(c, r) for r in m)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(matmul(a, b), matmul(b, a))


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


# --------------------------------------------------------------------------
# Row reduction
# --------------------------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Gauss-Jordan in place; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    m = as_matrix(m)
    if not m:
        return m
    rows = [list(r) for r in m]
    _rref_rows(rows, len(m[0]))
    return tuple(tuple(r) for r in rows)


def rank(m: Matrix) -> int:
    m = as_matrix(m)
    if not m:
        return 0
    rows = [list(r) for r in m]
    return len(_rref_rows(rows, len(m[0])))


def kernel(m: Matrix, ncols: int | None = None) -> "Subspace":
    """``{v : m v = 0}``; pass ``ncols`` when ``m`` has no rows."""
    m = as_matrix(m)
    if ncols is None:
        if not m:
            raise DimensionMismatch("kernel of a matrix with no rows needs ncols")
        ncols = len(m[0])
    if not m:
        return Subspace.full(ncols)
    rows = [list(r) for r in m]
    pivots = _rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return Subspace.span(basis, ncols)


def inverse(m: Matrix) -> Matrix:
    m = as_matrix(m)
    n = len(m)
    rows = [list(r) + list(e) for r, e in zip(m, identity(n))]
    pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows)


def solve_coordinates(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coefficients ``c`` with ``sum c_i basis_i = v``, or None if v is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return () if is_zero_vector(v) else None
    n = len(v)
    # augmented system: columns are basis vectors, last column is v
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    pivots = _rref_rows(rows, k + 1)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise DimensionMismatch("basis is linearly dependent")
    return tuple(rows[i][k] for i in range(k))


# --------------------------------------------------------------------------
# Subspaces
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical RREF basis.

    Build instances with :meth:`span`, :meth:`zero` or :meth:`full`; the
    raw constructor trusts its ``basis`` to already be canonical.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Iterable], ambient_dim: int) -> "Subspace":
        rows = [list(as_vector(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(r)} in Q^{ambient_dim}")
        pivots = _rref_rows(rows, ambient_dim) if rows else []
        return cls(ambient_dim, tuple(tuple(rows[i]) for i in range(len(pivots))))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"subspaces of Q^{self.ambient_dim} and Q^{other.ambient_dim}"
            )

    def reduce(self, v: Vector) -> Vector:
        """Remainder of ``v`` after elimination against the basis."""
        out = list(v)
        for p, row in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                out = [x - c * y for x, y in zip(out, row)]
        return tuple(out)

    def contains(self, x) -> bool:
        """Membership of a vector, or containment of another subspace."""
        if isinstance(x, Subspace):
            self._check(x)
            if x.dim > self.dim:
                return False
            return all(is_zero_vector(self.reduce(r)) for r in x.basis)
        v = as_vector(x)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        return is_zero_vector(self.reduce(v))

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        # x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
        a, b = self.basis, other.basis
        n = self.ambient_dim
        system = [
            [a[i][k] for i in range(len(a))] + [-b[j][k] for j in range(len(b))]
            for k in range(n)
        ]
        sol = kernel(system, len(a) + len(b))
        vecs = [linear_combination(s[: len(a)], a, n) for s in sol.basis]
        return Subspace.span(vecs, n)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of ``v`` in the RREF basis (its entries at the pivots)."""
        v = as_vector(v)
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def complement_in(self, outer: "Subspace") -> "Subspace":
        """Deterministic complement of ``self`` inside ``outer``.

        Greedily extends ``self`` by the RREF basis rows of ``outer`` in
        order; ``self`` must be contained in ``outer``.
        """
        self._check(outer)
        if not outer.contains(self):
            raise ValueError("subspace is not contained in the outer space")
        acc = self
        chosen = []
        for row in outer.basis:
            if not acc.contains(row):
                chosen.append(row)
                acc = acc.sum(Subspace.span([row], self.ambient_dim))
        return Subspace.span(chosen, self.ambient_dim)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace.span([matvec(m, b) for b in self.basis], len(m))

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(Q^{self.ambient_dim}, [{rows}])"


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    rows = []
    for s in spaces:
        rows.extend(s.basis)
    return Subspace.span(rows, ambient_dim)


def is_direct(spaces: Sequence[Subspace], ambient_dim: int) -> bool:
    """True when the sum of ``spaces`` is direct."""
    return sum_all(spaces, ambient_dim).dim == sum(s.dim for s in spaces)


# --------------------------------------------------------------------------
# Polynomials and eigenvalues
# --------------------------------------------------------------------------
# Polynomials are coefficient lists, index = degree.

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def charpoly(m: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(xI - m) by Faddeev-LeVerrier."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n)
    eye = identity(n)
    for k in range(1, n + 1):
        mk = mat_add(matmul(m, mk), mat_scale(coeffs[n - k + 1], eye))
        coeffs[n - k] = -trace(matmul(m, mk)) / k
    return coeffs


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return [k * p[k] for k in range(1, len(p))]


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] -= c * bc
        r = _trim(r)
    return _trim(q), r


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    primes: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            primes[d] = primes.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes[n] = primes.get(n, 0) + 1
    divs = [1]
    for p, e in primes.items():
        divs = [x * p**k for x in divs for k in range(e + 1)]
    return sorted(divs)


def _integer_coefficients(p: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(p: Sequence) -> dict[Fraction, int]:
    """Rational roots of ``p`` with their multiplicities (rational root theorem)."""
    p = _trim([to_fraction(c) for c in p])
    roots: dict[Fraction, int] = {}
    if len(p) <= 1:
        return roots
    zero_mult = 0
    while p[0] == 0:
        p = p[1:]
        zero_mult += 1
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    if len(p) == 1:
        return roots
    # the square-free part has the same roots with a much smaller constant term
    g = poly_gcd(p, poly_derivative(p))
    sqfree = poly_divmod(p, g)[0] if len(g) > 1 else p
    ints = _integer_coefficients(sqfree)
    a0, an = ints[0], ints[-1]
    bound = 1 + max(Fraction(abs(c), abs(an)) for c in ints[:-1])
    candidates = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            if gcd(num, den) == 1 and Fraction(num, den) <= bound:
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
    rest = p
    for r in sorted(candidates):
        if poly_eval(ints, r) != 0:
            continue
        mult = 0
        linear = [-r, Fraction(1)]
        while True:
            q, rem = poly_divmod(rest, linear)
            if rem:
                break
            rest = q
            mult += 1
        roots[r] = mult
    return dict(sorted(roots.items()))


def eigenspace(m: Matrix, value) -> Subspace:
    n = len(m)
    lam = to_fraction(value)
    shifted = tuple(
        tuple(m[i][j] - (lam if i == j else 0) for j in range(n)) for i in range(n)
    )
    return kernel(shifted, n)


def rational_eigenvalues(m: Matrix) -> list[Fraction]:
    """All eigenvalues of ``m`` with algebraic multiplicity, in ascending order.

    Raises NotSplitOverField unless ``m`` is diagonalizable over Q.
    """
    m = as_matrix(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("eigenvalues of a non-square matrix")
    roots = rational_roots(charpoly(m))
    total = 0
    for lam in roots:
        total += eigenspace(m, lam).dim
    if total < n:
        raise NotSplitOverField(
            f"eigenspaces for rational eigenvalues {[str(r) for r in roots]} "
            f"span only {total} of {n} dimensions"
        )
    out = []
    for lam, mult in roots.items():
        out.extend([lam] * mult)
    return out


def joint_eigenspaces(ms: Sequence[Matrix], dim: int | None = None) -> list[tuple[tuple, Subspace]]:
    """Common eigenspace decomposition of pairwise commuting matrices.

    Returns ``(functional, subspace)`` pairs sorted by the functional, whose
    i-th coordinate is the eigenvalue of ``ms[i]``. With no matrices the
    whole space ``Q^dim`` is returned with the empty functional.
    """
    ms = [as_matrix(m) for m in ms]
    if dim is None:
        if not ms:
            raise DimensionMismatch("joint_eigenspaces of no matrices needs dim")
        dim = len(ms[0])
    for m in ms:
        if len(m) != dim or any(len(r) != dim for r in m):
            raise DimensionMismatch(f"expected {dim}x{dim} matrices")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if any(any(r) for r in commutator(ms[i], ms[j])):
                raise NonCommuting(f"matrices {i} and {j} do not commute")
    pieces: list[tuple[tuple, Subspace]] = [((), Subspace.full(dim))]
    for m in ms:
        values = sorted(set(rational_eigenvalues(m)))
        spaces = [(lam, eigenspace(m, lam)) for lam in values]
        refined = []
        for func, s in pieces:
            for lam, e in spaces:
                part = s.intersect(e)
                if not part.is_zero():
                    refined.append((func + (lam,), part))
        pieces = refined
    if sum(s.dim for _, s in pieces) != dim:
        raise NotSplitOverField("joint eigenspaces do not span the space")
    return sorted(pieces, key=lambda fs: fs[0])

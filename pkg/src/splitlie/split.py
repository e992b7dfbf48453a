"""Root-space decomposition with respect to a designated Cartan subalgebra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import CartanNotAbelian, NotSelfCentralizing
from .lie_algebra import LieAlgebra
from .linalg import Subspace, is_zero_vector, joint_eigenspaces, unit_vector

# A functional on H, as its values on the Cartan basis vectors; tuples compare
# lexicographically, which is the ordering used for every reported list.
Functional = tuple


def functional(*coords) -> Functional:
    return tuple(Fraction(c) for c in coords)


def is_zero_functional(f: Functional) -> bool:
    return not any(f)


def negate(f: Functional) -> Functional:
    return tuple(-x for x in f)


def add(f: Functional, g: Functional) -> Functional:
    return tuple(a + b for a, b in zip(f, g))


def is_symmetric(functionals: Iterable[Functional]) -> bool:
    fs = set(functionals)
    return all(negate(f) in fs for f in fs)


@dataclass(frozen=True)
class SplitData:
    """A validated decomposition ``L = H + sum of root spaces L_a``."""

    algebra: LieAlgebra
    cartan: Subspace
    roots: tuple  # ((Functional, Subspace), ...) over nonzero functionals, sorted
    zero_space: Subspace

    @property
    def rank(self) -> int:
        return len(self.algebra.cartan)

    @property
    def root_system(self) -> tuple[Functional, ...]:
        return tuple(f for f, _ in self.roots)

    @property
    def zero(self) -> Functional:
        return (Fraction(0),) * self.rank

    def root_space(self, f: Functional) -> Subspace:
        """``L_f``; the zero subspace when f is neither 0 nor a root."""
        f = tuple(Fraction(x) for x in f)
        if is_zero_functional(f):
            return self.zero_space
        for g, s in self.roots:
            if g == f:
                return s
        return Subspace.zero(self.algebra.dim)

    def is_symmetric(self) -> bool:
        return is_symmetric(self.root_system)


def split(L: LieAlgebra) -> SplitData:
    """Check that the designated H splits L and return the root decomposition.

    The eigenvalue convention is ``[h, x] = a(h) x`` for ``x`` in ``L_a``.
    """
    n = L.dim
    hs = [unit_vector(n, c) for c in L.cartan]
    for a in range(len(hs)):
        for b in range(a + 1, len(hs)):
            if not is_zero_vector(L.bracket(hs[a], hs[b])):
                names = (L.basis[L.cartan[a]], L.basis[L.cartan[b]])
                raise CartanNotAbelian(f"[{names[0]}, {names[1]}] != 0")
    pieces = joint_eigenspaces([L.ad_basis(c) for c in L.cartan], n)
    cartan = L.cartan_subspace
    zero = (Fraction(0),) * len(hs)
    zero_space = Subspace.zero(n)
    roots = []
    for f, s in pieces:
        if f == zero:
            zero_space = s
        else:
            roots.append((f, s))
    if zero_space != cartan:
        raise NotSelfCentralizing(
            f"the centralizer of H has dimension {zero_space.dim} > dim H = {cartan.dim}"
        )
    return SplitData(L, cartan, tuple(roots), zero_space)


def is_symmetric_roots(S: SplitData) -> bool:
    return S.is_symmetric()


def root_space(S: SplitData, f: Functional) -> Subspace:
    return S.root_space(f)

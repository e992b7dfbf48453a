"""Fixed and anti-fixed parts of an involutive automorphism.

Given a split algebra with an involutive automorphism ``xi`` preserving H,
the fixed subalgebra ``Sym = {x : xi x = x}`` is again split, with Cartan
subalgebra ``Sym & H``, and ``Skw = {x : xi x = -x}`` is a weight module
over it through the bracket.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationFailed
from .lie_algebra import LieAlgebra
from .linalg import (
    Matrix,
    Subspace,
    as_matrix,
    eigenspace,
    identity,
    is_zero_vector,
    mat_add,
    mat_scale,
    mat_sub,
    matmul,
    matvec,
    solve_coordinates,
    unit_vector,
)
from .split import SplitData, split
from .weight_module import ModuleAction


@dataclass(frozen=True)
class Involution:
    """``matrix`` holds the images of the basis vectors in its columns."""

    ambient: LieAlgebra
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix(self.matrix))

    def apply(self, x) -> tuple:
        return matvec(self.matrix, x)

    @property
    def sym_projection(self) -> Matrix:
        n = self.ambient.dim
        return mat_scale(Fraction(1, 2), mat_add(identity(n), self.matrix))

    @property
    def skw_projection(self) -> Matrix:
        n = self.ambient.dim
        return mat_scale(Fraction(1, 2), mat_sub(identity(n), self.matrix))


def violations(inv: Involution) -> list[str]:
    """Every failed condition, as short labels; empty when ``inv`` is usable."""
    L = inv.ambient
    n = L.dim
    xi = inv.matrix
    out = []
    if len(xi) != n or any(len(r) != n for r in xi):
        return [f"xi must be {n}x{n}"]
    if matmul(xi, xi) != identity(n):
        out.append("xi^2 != id")
    basis = [unit_vector(n, i) for i in range(n)]
    images = [matvec(xi, e) for e in basis]
    bad = next(
        ((i, j) for i in range(n) for j in range(i + 1, n)
         if matvec(xi, L.structure_constant(i, j)) != L.bracket(images[i], images[j])),
        None,
    )
    if bad is not None:
        out.append(f"not an automorphism on [{L.basis[bad[0]]}, {L.basis[bad[1]]}]")
    H = L.cartan_subspace
    if not all(H.contains(matvec(xi, h)) for h in H.basis):
        out.append("xi(H) not in H")
    if out:
        return out
    S = split(L)
    projections = ((0, inv.sym_projection), (1, inv.skw_projection))
    spaces = [(S.zero, S.zero_space)] + list(S.roots)
    for f, space in spaces:
        for k, proj in projections:
            if space.image(proj).is_zero():
                label = "(" + ", ".join(str(x) for x in f) + ")"
                if not any(f):
                    out.append(f"Pi_{k}(H) = 0")
                else:
                    out.append(f"Pi_{k}(L_{label}) = 0")
    return out


def validate(inv: Involution) -> bool:
    return not violations(inv)


def _combination_name(coeffs, names) -> str:
    terms = []
    for c, name in zip(coeffs, names):
        if not c:
            continue
        if c == 1:
            t = name
        elif c == -1:
            t = "-" + name
        else:
            t = f"{c}*{name}"
        if terms and not t.startswith("-"):
            t = "+" + t
        terms.append(t)
    return "".join(terms) or "0"


@dataclass(frozen=True)
class InvolutionSplit:
    sym: Subspace
    skw: Subspace
    sym_basis: tuple  # ambient coordinates of the basis of L = Sym
    algebra: LieAlgebra
    split: SplitData
    module: ModuleAction


def build(inv: Involution) -> InvolutionSplit:
    """The fixed subalgebra and the anti-fixed module, ready for decomposition."""
    problems = violations(inv)
    if problems:
        raise ValidationFailed(problems)
    L = inv.ambient
    n = L.dim
    sym = eigenspace(inv.matrix, 1)
    skw = eigenspace(inv.matrix, -1)
    sym_h = sym.intersect(L.cartan_subspace)
    # Cartan basis first so its indices are 0..r-1
    basis = list(sym_h.basis)
    acc = sym_h
    for row in sym.basis:
        if not acc.contains(row):
            basis.append(row)
            acc = acc.sum(Subspace.span([row], n))
    names = [_combination_name(v, L.basis) for v in basis]
    brackets = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            coords = solve_coordinates(basis, L.bracket(basis[i], basis[j]))
            if coords is None:
                raise ValidationFailed(["Sym is not closed under the bracket"])
            if not is_zero_vector(coords):
                brackets[(i, j)] = coords
    algebra = LieAlgebra(names, brackets, list(range(sym_h.dim)))
    split_data = split(algebra)

    skw_names = [_combination_name(v, L.basis) for v in skw.basis]
    action = {}
    for i, x in enumerate(basis):
        for a, v in enumerate(skw.basis):
            image = L.bracket(x, v)
            if not skw.contains(image):
                raise ValidationFailed(["[Sym, Skw] is not contained in Skw"])
            coords = skw.coordinates(image)
            if not is_zero_vector(coords):
                action[(i, a)] = coords
    module = ModuleAction(split_data, skw_names, action)
    return InvolutionSplit(sym, skw, tuple(basis), algebra, split_data, module)


def swap_involution(L: LieAlgebra, half: int) -> Involution:
    """The swap ``(x, y) -> (y, x)`` on a direct sum of two equal halves."""
    n = L.dim
    if n != 2 * half:
        raise ValueError("algebra is not two halves of equal dimension")
    cols = [unit_vector(n, (j + half) % n) for j in range(n)]
    matrix = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
    return Involution(L, matrix)

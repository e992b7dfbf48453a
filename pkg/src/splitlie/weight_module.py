"""Modules over split Lie algebras and their weight-space decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatch,
    ModuleAxiomViolation,
    NotSplitOverField,
    NotWeightModule,
    SymmetryViolation,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    as_vector,
    commutator,
    is_zero_vector,
    joint_eigenspaces,
    kernel,
    linear_combination,
    matvec,
    unit_vector,
    zero_vector,
)
from .split import Functional, SplitData, add, is_symmetric, is_zero_functional, negate


class ModuleAction:
    """A representation of a split Lie algebra on Q^dim.

    ``action`` maps ``(i, a)`` to the coordinates of ``e_i . v_a``, where
    ``e_i`` is an algebra basis vector and ``v_a`` a module basis vector.
    Omitted keys act by zero. The module axiom
    ``[x, y].v = x.(y.v) - y.(x.v)`` is checked on construction.
    """

    def __init__(
        self,
        split: SplitData,
        basis: Sequence[str],
        action: Mapping[tuple[int, int], Sequence],
        check_axiom: bool = True,
    ):
        self.split = split
        self.algebra = split.algebra
        self.basis = tuple(basis)
        m = self.dim = len(self.basis)
        n = self.algebra.dim
        cols = [[zero_vector(m) for _ in range(m)] for _ in range(n)]
        for (i, a), coeffs in action.items():
            if not (0 <= i < n and 0 <= a < m):
                raise ValueError(f"action key ({i},{a}) out of range")
            v = as_vector(coeffs)
            if len(v) != m:
                raise DimensionMismatch(f"action ({i},{a}) has {len(v)} coefficients, expected {m}")
            cols[i][a] = v
        self._rho = tuple(
            tuple(tuple(cols[i][a][r] for a in range(m)) for r in range(m)) for i in range(n)
        )
        if check_axiom:
            failure = _axiom_failure(self)
            if failure is not None:
                raise ModuleAxiomViolation(*failure, self.algebra.basis, self.basis)

    def __repr__(self) -> str:
        return f"ModuleAction(dim={self.dim}, algebra_dim={self.algebra.dim})"

    def rho(self, i: int) -> Matrix:
        """Matrix of the basis vector ``e_i`` acting on V."""
        return self._rho[i]

    def rho_of(self, x: Sequence) -> Matrix:
        x = as_vector(x)
        m = self.dim
        out = [[Fraction(0)] * m for _ in range(m)]
        for i, c in enumerate(x):
            if c:
                for r, row in enumerate(self._rho[i]):
                    for s, val in enumerate(row):
                        if val:
                            out[r][s] += c * val
        return tuple(tuple(r) for r in out)

    def action_entries(self) -> dict[tuple[int, int], Vector]:
        out = {}
        for i, mat in enumerate(self._rho):
            for a in range(self.dim):
                col = tuple(mat[r][a] for r in range(self.dim))
                if not is_zero_vector(col):
                    out[(i, a)] = col
        return out

    def act(self, x: Sequence, v: Sequence) -> Vector:
        x, v = as_vector(x), as_vector(v)
        if len(x) != self.algebra.dim or len(v) != self.dim:
            raise DimensionMismatch("act expects an algebra vector and a module vector")
        out = zero_vector(self.dim)
        for i, c in enumerate(x):
            if c:
                out = linear_combination((Fraction(1), c), (out, matvec(self._rho[i], v)), self.dim)
        return out

    def act_spaces(self, a: Subspace, w: Subspace) -> Subspace:
        """Span of ``x . v`` over basis vectors x of ``a`` (in L) and v of ``w`` (in V)."""
        return Subspace.span([self.act(x, v) for x in a.basis for v in w.basis], self.dim)


def _axiom_failure(M: ModuleAction):
    L = M.algebra
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = M.rho_of(L.structure_constant(i, j))
            rhs = commutator(M.rho(i), M.rho(j))
            if lhs != rhs:
                for a in range(M.dim):
                    if any(lhs[r][a] != rhs[r][a] for r in range(M.dim)):
                        return (i, j, a)
    return None


def act(M: ModuleAction, x: Sequence, v: Sequence) -> Vector:
    return M.act(x, v)


@dataclass(frozen=True)
class WeightData:
    """``V = V_0 + sum of weight spaces V_g`` for a module over a split algebra."""

    module: ModuleAction
    weights: tuple  # ((Functional, Subspace), ...) over nonzero functionals, sorted
    zero_space: Subspace

    @property
    def split(self) -> SplitData:
        return self.module.split

    @property
    def weight_system(self) -> tuple[Functional, ...]:
        return tuple(f for f, _ in self.weights)

    def weight_space(self, f: Functional) -> Subspace:
        f = tuple(Fraction(x) for x in f)
        if is_zero_functional(f):
            return self.zero_space
        for g, s in self.weights:
            if g == f:
                return s
        return Subspace.zero(self.module.dim)

    def is_symmetric(self) -> bool:
        return is_symmetric(self.weight_system)

    def v0_generated(self) -> Subspace:
        """``sum over a in roots & weights of L_{-a} V_a`` (inside V_0)."""
        M = self.module
        pieces = Subspace.zero(M.dim)
        weights = set(self.weight_system)
        for a in self.split.root_system:
            if a in weights:
                pieces = pieces.sum(
                    M.act_spaces(self.split.root_space(negate(a)), self.weight_space(a))
                )
        return pieces


def weight_decompose(M: ModuleAction) -> WeightData:
    L = M.algebra
    try:
        pieces = joint_eigenspaces([M.rho(c) for c in L.cartan], M.dim)
    except NotSplitOverField as exc:
        raise NotWeightModule(str(exc)) from exc
    zero = M.split.zero
    weights = []
    zero_space = Subspace.zero(M.dim)
    for f, s in pieces:
        if f == zero:
            zero_space = s
        else:
            weights.append((f, s))
    return WeightData(M, tuple(weights), zero_space)


def module_center(M: ModuleAction) -> Subspace:
    """``Z(V) = {v : L.v = 0}``."""
    rows = [row for i in range(M.algebra.dim) for row in M.rho(i)]
    return kernel(rows, M.dim)


def lv_equals_v(M: ModuleAction) -> bool:
    cols = [
        tuple(M.rho(i)[r][a] for r in range(M.dim))
        for i in range(M.algebra.dim)
        for a in range(M.dim)
    ]
    return Subspace.span(cols, M.dim).is_full()


def is_completely_pointed(W: WeightData) -> bool:
    return all(s.dim == 1 for _, s in W.weights)


def require_symmetric(W: WeightData) -> None:
    if not W.split.is_symmetric():
        raise SymmetryViolation("root system is not symmetric")
    if not W.is_symmetric():
        raise SymmetryViolation("weight system is not symmetric")


def is_weight_multiplicative(W: WeightData) -> bool:
    """Every allowed shift ``L_a V_g`` (with ``a + g`` a weight) is nonzero.

    When ``V_0`` is exactly ``sum L_{-b} V_b`` the definition is strengthened:
    ``L_b(L_{-b} V_b) != 0`` must imply ``L_{-b}(L_b V_{-b}) != 0``.
    """
    require_symmetric(W)
    M, S = W.module, W.split
    weights = set(W.weight_system)
    for a, la in S.roots:
        for g, vg in W.weights:
            if add(a, g) in weights and M.act_spaces(la, vg).is_zero():
                return False
    if W.v0_generated() == W.zero_space:
        for b in S.root_system:
            if b not in weights:
                continue
            lb, lmb = S.root_space(b), S.root_space(negate(b))
            forward = M.act_spaces(lb, M.act_spaces(lmb, W.weight_space(b)))
            backward = M.act_spaces(lmb, M.act_spaces(lb, W.weight_space(negate(b))))
            if not forward.is_zero() and backward.is_zero():
                return False
    return True


# --------------------------------------------------------------------------
# Constructions
# --------------------------------------------------------------------------

def adjoint_module(S: SplitData) -> ModuleAction:
    L = S.algebra
    action = {
        (i, a): L.structure_constant(i, a)
        for i in range(L.dim)
        for a in range(L.dim)
        if not is_zero_vector(L.structure_constant(i, a))
    }
    return ModuleAction(S, L.basis, action, check_axiom=False)


def trivial_module(S: SplitData, dim: int = 1, prefix: str = "t") -> ModuleAction:
    return ModuleAction(S, [f"{prefix}{k}" for k in range(dim)], {})


def direct_sum_modules(first: ModuleAction, second: ModuleAction, suffixes=("", "'")) -> ModuleAction:
    if first.algebra != second.algebra:
        raise DimensionMismatch("direct sum of modules over different algebras")
    m1, m2 = first.dim, second.dim
    names = [b + suffixes[0] for b in first.basis] + [b + suffixes[1] for b in second.basis]
    if len(set(names)) != len(names):
        names = [f"{b}_{k}" for k, b in enumerate(names)]
    action = {}
    for (i, a), v in first.action_entries().items():
        action[(i, a)] = tuple(v) + zero_vector(m2)
    for (i, a), v in second.action_entries().items():
        action[(i, a + m1)] = zero_vector(m1) + tuple(v)
    return ModuleAction(first.split, names, action, check_axiom=False)


def submodule_action(M: ModuleAction, sub: Subspace, names: Sequence[str] | None = None) -> ModuleAction:
    """The action of L on an invariant subspace, in its RREF basis."""
    if names is None:
        names = [f"w{k}" for k in range(sub.dim)]
    action = {}
    for i in range(M.algebra.dim):
        for a, w in enumerate(sub.basis):
            image = matvec(M.rho(i), w)
            if not sub.contains(image):
                raise ValueError("subspace is not invariant under the action")
            coords = sub.coordinates(image)
            if not is_zero_vector(coords):
                action[(i, a)] = coords
    return ModuleAction(M.split, names, action, check_axiom=False)


def module_basis_vector(M: ModuleAction, name: str) -> Vector:
    return unit_vector(M.dim, M.basis.index(name))

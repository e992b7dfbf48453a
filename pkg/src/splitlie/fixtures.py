"""Small named algebras and modules, and random generators built from them.

Names follow the usual conventions: ``sl2`` has basis ``e, f, h`` with
``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h``.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .lie_algebra import LieAlgebra, direct_sum
from .linalg import inverse, is_zero_vector, matmul
from .split import SplitData, split
from .weight_module import (
    ModuleAction,
    adjoint_module,
    direct_sum_modules,
    trivial_module,
)


def sl2() -> LieAlgebra:
    return LieAlgebra(
        ["e", "f", "h"],
        {(0, 1): [0, 0, 1], (0, 2): [-2, 0, 0], (1, 2): [0, 2, 0]},
        [2],
    )


def sl2_sum() -> LieAlgebra:
    """``sl2 + sl2`` with basis ``e1, f1, h1, e2, f2, h2``."""
    return direct_sum(sl2(), sl2())


def abelian(dim: int = 1) -> LieAlgebra:
    names = ["h"] if dim == 1 else [f"h{k + 1}" for k in range(dim)]
    return LieAlgebra(names, {}, list(range(dim)))


def sl2_plus_center() -> LieAlgebra:
    """``sl2 + Qz`` with ``z`` central and H spanned by ``h, z``."""
    L = sl2()
    return LieAlgebra(
        ["e", "f", "h", "z"],
        {(i, j): list(v) + [0] for (i, j), v in L.nonzero_brackets().items()},
        [2, 3],
    )


def solvable_pm1() -> LieAlgebra:
    """``span{h, e, f}`` with ``[h, e] = e``, ``[h, f] = -f``, ``[e, f] = 0``."""
    return LieAlgebra(["h", "e", "f"], {(0, 1): [0, 1, 0], (0, 2): [0, 0, -1]}, [0])


def borel() -> LieAlgebra:
    """``span{h, e}`` with ``[h, e] = e``; its root system is not symmetric."""
    return LieAlgebra(["h", "e"], {(0, 1): [0, 1]}, [0])


def bad_jacobi_table() -> dict:
    """Brackets ``[h,e]=2e, [h,f]=-2f, [e,f]=e`` on ``e, f, h``; violates Jacobi."""
    return {
        "basis": ["e", "f", "h"],
        "brackets": {(0, 1): [1, 0, 0], (0, 2): [-2, 0, 0], (1, 2): [0, 2, 0]},
        "cartan": [2],
    }


# --------------------------------------------------------------------------
# Modules
# --------------------------------------------------------------------------

def sl2_irrep(n: int, S: SplitData | None = None, offset: int = 0, prefix: str = "v") -> ModuleAction:
    """The irreducible sl2-module of highest weight ``n`` (dimension n+1).

    ``S`` may be a larger algebra containing sl2 at basis positions
    ``offset .. offset+2``; the other basis vectors act by zero.
    """
    if S is None:
        S = split(sl2())
    e, f, h = offset, offset + 1, offset + 2
    m = n + 1
    action = {}
    for k in range(m):
        action[(h, k)] = [n - 2 * k if a == k else 0 for a in range(m)]
        if k < n:
            action[(f, k)] = [1 if a == k + 1 else 0 for a in range(m)]
        if k > 0:
            action[(e, k)] = [k * (n - k + 1) if a == k - 1 else 0 for a in range(m)]
    names = ["x", "y"] if (n == 1 and prefix == "v") else [f"{prefix}{k}" for k in range(m)]
    return ModuleAction(S, names, action)


def sl2_natural() -> ModuleAction:
    return sl2_irrep(1)


def sl2_adjoint() -> ModuleAction:
    return adjoint_module(split(sl2()))


def sl2_natural_plus_adjoint() -> ModuleAction:
    S = split(sl2())
    return direct_sum_modules(sl2_irrep(1, S), adjoint_module(S))


def sl2_natural_plus_natural() -> ModuleAction:
    S = split(sl2())
    return direct_sum_modules(sl2_irrep(1, S), sl2_irrep(1, S))


def sl2_sum_naturals() -> ModuleAction:
    """Natural module of the first copy plus natural module of the second."""
    S = split(sl2_sum())
    return direct_sum_modules(
        sl2_irrep(1, S, 0, prefix="a"), sl2_irrep(1, S, 3, prefix="b")
    )


def sl2_sum_adjoints() -> ModuleAction:
    """Adjoint module of ``sl2 + sl2``, i.e. adjoint of each copy side by side."""
    return adjoint_module(split(sl2_sum()))


def torus_module(weights, S: SplitData | None = None, prefix: str = "v") -> ModuleAction:
    """Diagonal module over an abelian algebra; ``weights[a]`` is the functional of ``v_a``."""
    if S is None:
        S = split(abelian(len(weights[0])))
    m = len(weights)
    action = {}
    for a, w in enumerate(weights):
        for i, c in enumerate(w):
            if c:
                action[(i, a)] = [c if b == a else 0 for b in range(m)]
    return ModuleAction(S, [f"{prefix}{a}" for a in range(m)], action)


def torus_pair() -> ModuleAction:
    """One-dimensional torus on ``span{v, w}`` with ``h v = v``, ``h w = -w``."""
    M = torus_module([[1], [-1]])
    return ModuleAction(M.split, ["v", "w"], M.action_entries())


def solvable_half_module(S: SplitData | None = None, raising: bool = True) -> ModuleAction:
    """Weights ``+-1/2`` over :func:`solvable_pm1`; one of ``e``, ``f`` acts, the other is zero."""
    if S is None:
        S = split(solvable_pm1())
    half = Fraction(1, 2)
    action = {(0, 0): [half, 0], (0, 1): [0, -half]}
    if raising:
        action[(1, 1)] = [1, 0]
    else:
        action[(2, 0)] = [0, 1]
    return ModuleAction(S, ["p", "q"], action)


# --------------------------------------------------------------------------
# Random inputs
# --------------------------------------------------------------------------

def random_symmetric_system(rng: random.Random, max_size: int = 12, bound: int = 5, rank: int = 2):
    """A random negation-closed set of nonzero integer points."""
    target = rng.randrange(0, max_size // 2 + 1)
    points = set()
    attempts = 0
    while len(points) < 2 * target and attempts < 1000:
        attempts += 1
        p = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(rank))
        if any(p):
            points.add(p)
            points.add(tuple(-x for x in p))
    return points


def random_invertible(rng: random.Random, n: int, spread: int = 2):
    """Product of random unit triangular integer matrices and a permutation."""
    lower = [[Fraction(1 if i == j else (rng.randint(-spread, spread) if i > j else 0))
              for j in range(n)] for i in range(n)]
    upper = [[Fraction(1 if i == j else (rng.randint(-spread, spread) if i < j else 0))
              for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    p = [[Fraction(1 if perm[i] == j else 0) for j in range(n)] for i in range(n)]
    return matmul(matmul(p, lower), upper)


def change_basis(M: ModuleAction, P) -> ModuleAction:
    """The same module in the basis given by the columns of ``P``."""
    Pinv = inverse(P)
    action = {}
    for i in range(M.algebra.dim):
        mat = matmul(matmul(Pinv, M.rho(i)), P)
        for a in range(M.dim):
            col = tuple(mat[r][a] for r in range(M.dim))
            if not is_zero_vector(col):
                action[(i, a)] = col
    return ModuleAction(M.split, [f"u{a}" for a in range(M.dim)], action, check_axiom=False)


def _sl2_blocks(rng, S, budget, offsets):
    blocks = []
    while budget > 0:
        n = rng.randint(0, min(budget, 4) - 1)
        blocks.append(sl2_irrep(n, S, rng.choice(offsets), prefix=f"b{len(blocks)}_"))
        budget -= n + 1
        if rng.random() < 0.3:
            break
    return blocks


def random_module(rng: random.Random, max_dim: int = 8) -> ModuleAction:
    """A random weight module with symmetric weights, in a scrambled basis."""
    kind = rng.choice(["sl2", "sl2", "sl2sum", "torus1", "torus2", "solvable", "center"])
    budget = rng.randint(1, max_dim)
    if kind == "sl2":
        S = split(sl2())
        blocks = _sl2_blocks(rng, S, budget, [0])
        if rng.random() < 0.2 and sum(b.dim for b in blocks) + 3 <= max_dim:
            blocks.append(adjoint_module(S))
    elif kind == "sl2sum":
        S = split(sl2_sum())
        if budget >= 6 and rng.random() < 0.3:
            blocks = [adjoint_module(S)]
        else:
            blocks = _sl2_blocks(rng, S, budget, [0, 3])
    elif kind == "center":
        S = split(sl2_plus_center())
        blocks = _sl2_blocks(rng, S, budget, [0])
        if rng.random() < 0.4:
            # z acts by a scalar pair +-c on a two-dimensional block
            c = rng.choice([1, 2, Fraction(1, 2)])
            blocks.append(ModuleAction(S, ["z+", "z-"], {(3, 0): [c, 0], (3, 1): [0, -c]}))
    elif kind == "solvable":
        S = split(solvable_pm1())
        blocks = []
        size = 0
        while size < budget:
            pick = rng.random()
            if pick < 0.3 and size + 3 <= max_dim:
                blocks.append(adjoint_module(S))
                size += 3
            elif pick < 0.8 and size + 2 <= max_dim:
                blocks.append(solvable_half_module(S, raising=rng.random() < 0.5))
                size += 2
            else:
                blocks.append(trivial_module(S, 1))
                size += 1
    else:
        rank = 1 if kind == "torus1" else 2
        S = split(abelian(rank))
        weights = []
        while len(weights) < budget:
            w = [rng.randint(-2, 2) for _ in range(rank)]
            if not any(w):
                weights.append(w)
            elif len(weights) + 2 <= max_dim:
                weights.extend([w, [-x for x in w]])
        blocks = [torus_module(weights, S)]
    module = blocks[0]
    for b in blocks[1:]:
        if module.dim + b.dim > max_dim:
            break
        module = direct_sum_modules(module, b)
    if module.dim > 1 and rng.random() < 0.7:
        module = change_basis(module, random_invertible(rng, module.dim))
    return module


def named_algebras() -> dict:
    return {
        "sl2": sl2,
        "sl2_sum": sl2_sum,
        "abelian1": lambda: abelian(1),
        "abelian2": lambda: abelian(2),
        "sl2_plus_center": sl2_plus_center,
        "solvable_pm1": solvable_pm1,
    }


def named_modules() -> dict:
    return {
        "sl2_natural": sl2_natural,
        "sl2_adjoint": sl2_adjoint,
        "sl2_natural_plus_adjoint": sl2_natural_plus_adjoint,
        "sl2_natural_plus_natural": sl2_natural_plus_natural,
        "sl2_sum_naturals": sl2_sum_naturals,
        "sl2_sum_adjoints": sl2_sum_adjoints,
        "torus_pair": torus_pair,
        "solvable_adjoint": lambda: adjoint_module(split(solvable_pm1())),
        "sl2_trivial": lambda: trivial_module(split(sl2()), 1),
    }

"""Subspaces attached to connection classes, and checks of the structure theorems.

Every decomposition records which hypotheses held and a list of
:class:`Check` results. A failed check whose hypotheses held means either a
bug or a counterexample; :attr:`status` tells the two situations apart from
the harmless out-of-hypotheses case.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .connections import Partition, connect_roots, connect_weights
from .errors import MismatchedAlgebra, PreconditionFailed, SplitLieError, SymmetryViolation
from .linalg import (
    Subspace,
    is_direct,
    joint_eigenspaces,
    linear_combination,
    matvec,
    sum_all,
)
from .split import Functional, SplitData, negate
from .weight_module import (
    ModuleAction,
    WeightData,
    is_completely_pointed,
    is_weight_multiplicative,
    lv_equals_v,
    module_center,
    require_symmetric,
    submodule_action,
    weight_decompose,
)

OK = "ok"
OUT_OF_HYPOTHESES = "out-of-hypotheses"
THEOREM_FAILURE = "theorem-failure"

SIMPLE = "SIMPLE"
SPLIT_PAIR = "SPLIT_PAIR"
OUT_OF_HYPOTHESES_VERDICT = "OUT_OF_HYPOTHESES"


@dataclass(frozen=True)
class Check:
    claim: str
    passed: bool
    detail: str = ""


def _status(hypotheses: dict, checks: Sequence[Check]) -> str:
    if any(not c.passed for c in checks):
        return THEOREM_FAILURE
    if not all(hypotheses.values()):
        return OUT_OF_HYPOTHESES
    return OK


# --------------------------------------------------------------------------
# Modules
# --------------------------------------------------------------------------

def is_submodule(M: ModuleAction, s: Subspace) -> bool:
    if s.ambient_dim != M.dim:
        raise ValueError("subspace is not in this module")
    return all(s.contains(matvec(M.rho(i), v)) for i in range(M.algebra.dim) for v in s.basis)


def is_weight_subspace(W: WeightData, s: Subspace) -> bool:
    """True when ``s`` is the direct sum of its intersections with the weight spaces."""
    spaces = [W.zero_space] + [v for _, v in W.weights]
    return sum(s.intersect(v).dim for v in spaces) == s.dim


def submodule_closure(M: ModuleAction, seed: Subspace) -> Subspace:
    """Least submodule containing ``seed``."""
    current = seed
    for _ in range(M.dim + 1):
        images = [matvec(M.rho(i), v) for i in range(M.algebra.dim) for v in current.basis]
        grown = current.sum(Subspace.span(images, M.dim))
        if grown == current:
            return current
        current = grown
    return current


def submodule_for_class(W: WeightData, cls: Sequence[Functional]) -> Subspace:
    """``(sum over roots a in cls of L_{-a} V_a) + (sum over d in cls of V_d)``."""
    M, S = W.module, W.split
    members = set(cls)
    parts = [W.weight_space(d) for d in cls]
    for a in S.root_system:
        if a in members:
            parts.append(M.act_spaces(S.root_space(negate(a)), W.weight_space(a)))
    return sum_all(parts, M.dim)


@dataclass(frozen=True)
class ModuleDecomposition:
    weight_data: WeightData
    partition: Partition
    pieces: tuple  # ((class id, Subspace), ...)
    complement: Subspace
    direct: bool
    hypotheses: dict
    checks: tuple

    @property
    def status(self) -> str:
        return _status(self.hypotheses, self.checks)


def decompose_module(W: WeightData) -> ModuleDecomposition:
    require_symmetric(W)
    M, S = W.module, W.split
    partition = connect_weights(S.root_system, W.weight_system)
    pieces = tuple((k, submodule_for_class(W, cls)) for k, cls in enumerate(partition.classes))
    complement = W.v0_generated().complement_in(W.zero_space)
    spaces = [p for _, p in pieces] + [complement]
    total = sum_all(spaces, M.dim)
    direct = total.is_full() and is_direct(spaces, M.dim)
    hypotheses = {"LV=V": lv_equals_v(M), "Z(V)=0": module_center(M).is_zero()}

    checks = []
    for k, piece in pieces:
        checks.append(Check(f"submodule[{k}]", is_submodule(M, piece)))
        checks.append(Check(f"weight-subspace[{k}]", is_weight_subspace(W, piece)))
    checks.append(Check("V=U+sum", total.is_full()))
    if all(hypotheses.values()):
        checks.append(Check("direct-sum", direct, f"dim U = {complement.dim}"))
        checks.append(Check("U=0", complement.is_zero()))
    return ModuleDecomposition(W, partition, pieces, complement, direct, hypotheses, tuple(checks))


# --------------------------------------------------------------------------
# Algebras
# --------------------------------------------------------------------------

def cartan_part_for_class(S: SplitData, cls: Sequence[Functional]) -> Subspace:
    """``span{[L_b, L_{-b}] : b in cls}``."""
    L = S.algebra
    parts = [L.bracket_spaces(S.root_space(b), S.root_space(negate(b))) for b in cls]
    return sum_all(parts, L.dim)


def ideal_for_class(S: SplitData, cls: Sequence[Functional]) -> Subspace:
    """``H_cls + N_cls`` where ``N_cls`` is the sum of the root spaces in cls."""
    L = S.algebra
    return sum_all([cartan_part_for_class(S, cls)] + [S.root_space(b) for b in cls], L.dim)


@dataclass(frozen=True)
class AlgebraDecomposition:
    split: SplitData
    partition: Partition
    pieces: tuple  # ((class id, Subspace), ...)
    complement: Subspace
    direct: bool
    hypotheses: dict
    checks: tuple

    @property
    def status(self) -> str:
        return _status(self.hypotheses, self.checks)


def decompose_algebra(S: SplitData, weights: Sequence[Functional] | None = None) -> AlgebraDecomposition:
    """Ideals from the root connection relation.

    The relation also steps through the weights of a module; by default the
    weights are the roots themselves (the adjoint module).
    """
    if not S.is_symmetric():
        raise SymmetryViolation("root system is not closed under negation")
    L = S.algebra
    roots = S.root_system
    partition = connect_roots(roots, roots if weights is None else weights)
    pieces = tuple((k, ideal_for_class(S, cls)) for k, cls in enumerate(partition.classes))
    generated = cartan_part_for_class(S, roots)
    complement = generated.complement_in(S.cartan)
    spaces = [p for _, p in pieces] + [complement]
    total = sum_all(spaces, L.dim)
    direct = total.is_full() and is_direct(spaces, L.dim)
    hypotheses = {"Z(L)=0": L.center().is_zero(), "H=sum[L_a,L_-a]": generated == S.cartan}

    checks = []
    for k, piece in pieces:
        checks.append(Check(f"ideal[{k}]", L.is_ideal(piece)))
    for a, (k, p) in enumerate(pieces):
        for l, q in pieces[a + 1:]:
            checks.append(Check(f"[I{k},I{l}]=0", L.commute(p, q)))
    checks.append(Check("L=U+sum", total.is_full()))
    if all(hypotheses.values()):
        checks.append(Check("direct-sum", direct, f"dim U = {complement.dim}"))
        checks.append(Check("U=0", complement.is_zero()))
    return AlgebraDecomposition(S, partition, pieces, complement, direct, hypotheses, tuple(checks))


# --------------------------------------------------------------------------
# Pairing ideals with module pieces
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Pairing:
    map: dict  # module class id -> algebra class id (only when unique)
    candidates: dict  # module class id -> tuple of algebra class ids acting nontrivially
    witness: dict  # module class id -> (root or 0, weight or 0, dim of the product)
    hypotheses: dict
    checks: tuple

    @property
    def status(self) -> str:
        return _status(self.hypotheses, self.checks)


def _restricted_matrix(M: ModuleAction, x, sub: Subspace):
    rho = M.rho_of(x)
    cols = [sub.coordinates(matvec(rho, w)) for w in sub.basis]
    return tuple(tuple(cols[c][r] for c in range(sub.dim)) for r in range(sub.dim))


def is_weight_module_over(M: ModuleAction, ideal: Subspace, cartan: Subspace, piece: Subspace) -> bool:
    """``piece`` is stable under ``ideal`` and ``ideal & H`` acts diagonalizably on it."""
    for x in ideal.basis:
        rho = M.rho_of(x)
        if not all(piece.contains(matvec(rho, w)) for w in piece.basis):
            return False
    h_part = ideal.intersect(cartan)
    try:
        joint_eigenspaces([_restricted_matrix(M, h, piece) for h in h_part.basis], piece.dim)
    except SplitLieError:
        return False
    return True


def _witness(AD: AlgebraDecomposition, MD: ModuleDecomposition, i: int, j: int):
    S, W = AD.split, MD.weight_data
    M = W.module
    ideal = dict(AD.pieces)[i]
    piece = dict(MD.pieces)[j]
    algebra_parts = [(b, S.root_space(b)) for b in AD.partition.classes[i]]
    algebra_parts.append((S.zero, ideal.intersect(S.cartan)))
    module_parts = [(d, W.weight_space(d)) for d in MD.partition.classes[j]]
    module_parts.append((S.zero, piece.intersect(W.zero_space)))
    for a, la in algebra_parts:
        for g, vg in module_parts:
            prod = M.act_spaces(la, vg)
            if not prod.is_zero():
                return (a, g, prod.dim)
    return None


def pair(AD: AlgebraDecomposition, MD: ModuleDecomposition) -> Pairing:
    """For each module piece, the ideals acting on it nontrivially."""
    S = AD.split
    W = MD.weight_data
    M = W.module
    if S.algebra != M.algebra:
        raise MismatchedAlgebra("decompositions come from different algebras")
    L = S.algebra
    hypotheses = {
        "L perfect": L.is_perfect(),
        "LV=V": MD.hypotheses["LV=V"],
        "Z(V)=0": MD.hypotheses["Z(V)=0"],
    }
    holds = all(hypotheses.values())
    mapping, candidates, witness, checks = {}, {}, {}, []
    for j, piece in MD.pieces:
        acting = tuple(i for i, ideal in AD.pieces if not M.act_spaces(ideal, piece).is_zero())
        candidates[j] = acting
        if len(acting) == 1:
            i = acting[0]
            mapping[j] = i
            witness[j] = _witness(AD, MD, i, j)
            ideal = dict(AD.pieces)[i]
            checks.append(Check(f"weight-module[{j}]", is_weight_module_over(M, ideal, S.cartan, piece)))
        if holds:
            checks.append(Check(f"unique[{j}]", len(acting) == 1, f"candidates {list(acting)}"))
    return Pairing(mapping, candidates, witness, hypotheses, tuple(checks))


# --------------------------------------------------------------------------
# Simple components
# --------------------------------------------------------------------------

def minimal_weight_submodules(W: WeightData) -> list[Subspace]:
    """Minimal nonzero submodules of a completely pointed module with zero center.

    Under those two conditions each nonzero submodule contains a whole
    weight space, so the minimal ones are among the closures of the weight
    spaces.
    """
    if not is_completely_pointed(W):
        raise PreconditionFailed("completely_pointed")
    M = W.module
    if not module_center(M).is_zero():
        raise PreconditionFailed("center_zero")
    closures: list[Subspace] = []
    for _, vg in W.weights:
        c = submodule_closure(M, vg)
        if c not in closures:
            closures.append(c)
    return [
        c for c in closures
        if not any(d != c and c.contains(d) for d in closures)
    ]


def weights_in(W: WeightData, s: Subspace) -> tuple:
    """Nonzero weights whose weight space meets ``s``."""
    return tuple(g for g, vg in W.weights if not s.intersect(vg).is_zero())


@dataclass(frozen=True)
class SimplicityReport:
    flags: dict
    minimal: tuple | None
    verdict: str
    failed: tuple  # names of the flags that do not hold
    checks: tuple
    split_weights: tuple | None = None  # (P^W, -P^W) for SPLIT_PAIR

    @property
    def status(self) -> str:
        return _status(self.flags, self.checks)


def simplicity_flags(W: WeightData) -> dict:
    M = W.module
    symmetric = W.is_symmetric() and W.split.is_symmetric()
    flags = {
        "completely_pointed": is_completely_pointed(W),
        "weight_multiplicative": symmetric and is_weight_multiplicative(W),
        "center_zero": module_center(M).is_zero(),
        "weights_connected": symmetric
        and len(connect_weights(W.split.root_system, W.weight_system)) <= 1,
        "v0_generated": W.v0_generated() == W.zero_space,
    }
    return flags


def simplicity_report(W: WeightData) -> SimplicityReport:
    """Decide between a simple module and a sum of two simple submodules.

    The verdict is SIMPLE when V is its own unique minimal submodule,
    SPLIT_PAIR when every hypothesis holds and V is the direct sum of
    exactly two minimal submodules, and OUT_OF_HYPOTHESES otherwise.
    """
    M = W.module
    flags = simplicity_flags(W)
    failed = tuple(k for k, v in flags.items() if not v)
    minimal = None
    if flags["completely_pointed"] and flags["center_zero"]:
        minimal = tuple(minimal_weight_submodules(W))
    full = Subspace.full(M.dim)
    holds = not failed

    verdict = OUT_OF_HYPOTHESES_VERDICT
    split_weights = None
    if minimal is not None and list(minimal) == [full]:
        verdict = SIMPLE
    elif holds and minimal is not None and len(minimal) == 2:
        w, w2 = minimal
        if is_direct(minimal, M.dim) and w.sum(w2).is_full():
            verdict = SPLIT_PAIR
            split_weights = (weights_in(W, w), weights_in(W, w2))

    checks = []
    if holds:
        checks.append(Check("simple-or-split", verdict in (SIMPLE, SPLIT_PAIR),
                            f"{len(minimal or ())} minimal submodules"))
    if verdict == SPLIT_PAIR:
        pw, pw2 = split_weights
        disjoint = set(pw).isdisjoint(pw2)
        negated = sorted(negate(g) for g in pw) == sorted(pw2)
        covers = sorted(pw + pw2) == sorted(W.weight_system)
        checks.append(Check("P=P^W+-P^W", disjoint and negated and covers))
        for k, piece in enumerate(minimal):
            simple = all(
                submodule_closure(M, vg.intersect(piece)) == piece
                for _, vg in W.weights
                if not vg.intersect(piece).is_zero()
            )
            checks.append(Check(f"simple[{k}]", simple))
    return SimplicityReport(flags, minimal, verdict, failed, tuple(checks), split_weights)


def _lift(sub: Subspace, piece: Subspace) -> Subspace:
    return Subspace.span(
        [linear_combination(v, piece.basis, piece.ambient_dim) for v in sub.basis],
        piece.ambient_dim,
    )


@dataclass(frozen=True)
class SimpleComponents:
    module_decomposition: ModuleDecomposition
    piece_reports: tuple  # ((class id, SimplicityReport), ...)
    components: tuple  # Subspaces of V
    pairing: dict  # component index -> tuple of ideal class ids acting on it
    hypotheses: dict
    checks: tuple

    @property
    def status(self) -> str:
        return _status(self.hypotheses, self.checks)


def simple_components(W: WeightData) -> SimpleComponents:
    """Split V into connection-class pieces, then each piece into simple submodules.

    With V completely pointed, weight-multiplicative, ``LV = V`` and
    ``Z(V) = 0`` the resulting components must be exactly the minimal
    submodules of V, one or two per class.
    """
    M = W.module
    S = W.split
    MD = decompose_module(W)
    flags = simplicity_flags(W)
    hypotheses = {
        "completely_pointed": flags["completely_pointed"],
        "weight_multiplicative": flags["weight_multiplicative"],
        "LV=V": MD.hypotheses["LV=V"],
        "Z(V)=0": MD.hypotheses["Z(V)=0"],
    }
    holds = all(hypotheses.values())
    reports = []
    components: list[Subspace] = []
    for k, piece in MD.pieces:
        sub = submodule_action(M, piece)
        report = simplicity_report(weight_decompose(sub))
        reports.append((k, report))
        if report.verdict in (SIMPLE, SPLIT_PAIR):
            components.extend(_lift(c, piece) for c in report.minimal)
        else:
            components.append(piece)

    AD = decompose_algebra(S, W.weight_system)
    acting = {
        c: tuple(i for i, ideal in AD.pieces if not M.act_spaces(ideal, comp).is_zero())
        for c, comp in enumerate(components)
    }

    checks = list(MD.checks)
    if holds:
        for k, report in reports:
            checks.append(Check(f"piece[{k}] simple-or-split",
                                report.verdict in (SIMPLE, SPLIT_PAIR), report.verdict))
        checks.append(Check("direct-sum-of-components",
                            is_direct(components, M.dim) and sum_all(components, M.dim).is_full()))
        minimal = minimal_weight_submodules(W)
        checks.append(Check("components=minimal-submodules",
                            sorted(components, key=_key) == sorted(minimal, key=_key)))
        if S.algebra.is_perfect():
            for c, ids in acting.items():
                checks.append(Check(f"unique-ideal[{c}]", len(ids) == 1, f"candidates {list(ids)}"))
    return SimpleComponents(MD, tuple(reports), tuple(components), acting, hypotheses, tuple(checks))


def _key(s: Subspace):
    return s.basis

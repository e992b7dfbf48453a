"""Connection equivalence relations on weights and on roots.

Both relations are computed as connected components of a graph whose
vertices are functionals and whose edges are single chain steps, plus an
edge between every functional and its negative. Because the root and
weight systems are closed under negation every step can be reversed, so
reachability along chains is the same as membership in one component.
:func:`chain_partition` re-derives the partitions by enumerating chains
directly and is kept as an independent check of that reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import SymmetryViolation
from .split import Functional, add, is_symmetric, is_zero_functional, negate

WEIGHTS = "weights"
ROOTS = "roots"


@dataclass(frozen=True)
class Partition:
    elements: tuple
    classes: tuple  # tuple of sorted tuples, ordered by least member
    class_of: dict = field(compare=False, repr=False)

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[Functional]]) -> "Partition":
        ordered = sorted((tuple(sorted(c)) for c in classes if c), key=lambda c: c[0])
        class_of = {f: k for k, c in enumerate(ordered) for f in c}
        return cls(tuple(sorted(class_of)), tuple(ordered), class_of)

    def __len__(self) -> int:
        return len(self.classes)

    def same_class(self, f: Functional, g: Functional) -> bool:
        return self.class_of[f] == self.class_of[g]

    def class_containing(self, f: Functional) -> tuple:
        return self.classes[self.class_of[f]]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller functional becomes the representative
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def groups(self):
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def _prepare(roots, weights):
    roots = {tuple(r) for r in roots}
    weights = {tuple(w) for w in weights}
    if any(is_zero_functional(f) for f in roots | weights):
        raise ValueError("the zero functional is not a root or weight")
    if not is_symmetric(roots):
        raise SymmetryViolation("root system is not closed under negation")
    if not is_symmetric(weights):
        raise SymmetryViolation("weight system is not closed under negation")
    return roots, weights


def _components(vertices: set, steps: set) -> list[list]:
    uf = _UnionFind(vertices)
    for mu in vertices:
        uf.union(mu, negate(mu))
        for z in steps:
            nu = add(mu, z)
            if nu in vertices:
                uf.union(mu, nu)
    return uf.groups()


def connect_weights(roots: Iterable[Functional], weights: Iterable[Functional]) -> Partition:
    """Partition of the weights: steps are roots, partial sums stay among the weights."""
    roots, weights = _prepare(roots, weights)
    return Partition.from_classes(_components(weights, roots))


def connect_roots(roots: Iterable[Functional], weights: Iterable[Functional]) -> Partition:
    """Partition of the roots: steps and partial sums range over roots and weights."""
    roots, weights = _prepare(roots, weights)
    both = roots | weights
    groups = _components(both, both)
    return Partition.from_classes([f for f in g if f in roots] for g in groups)


# --------------------------------------------------------------------------
# Explicit chains
# --------------------------------------------------------------------------

def _mode_sets(roots, weights, mode):
    if mode == WEIGHTS:
        return roots, weights, weights
    if mode == ROOTS:
        both = roots | weights
        return both, both, roots
    raise ValueError(f"mode must be {WEIGHTS!r} or {ROOTS!r}")


def is_connection(
    chain: Sequence[Functional],
    roots: Iterable[Functional],
    weights: Iterable[Functional],
    target: Functional,
    mode: str = WEIGHTS,
) -> bool:
    """Check ``chain`` against the definition of a connection to ``target``.

    In weights mode ``chain = [g, a_1, ..., a_n]`` with each ``a_i`` a root;
    in roots mode ``chain = [z_1, ..., z_n]`` with each ``z_i`` a root or
    weight and ``z_1`` the starting root. Partial sums before the last must
    lie in the allowed set and the full sum must be ``target`` or its
    negative.
    """
    roots = {tuple(r) for r in roots}
    weights = {tuple(w) for w in weights}
    steps, allowed, endpoints = _mode_sets(roots, weights, mode)
    if not chain:
        return False
    start = tuple(chain[0])
    if start not in endpoints or tuple(target) not in endpoints:
        return False
    rest = [tuple(z) for z in chain[1:]]
    if any(z not in steps for z in rest):
        return False
    total = start
    for z in rest:
        if total not in allowed:
            return False
        total = add(total, z)
    return total == tuple(target) or total == negate(tuple(target))


def find_connection(
    roots: Iterable[Functional],
    weights: Iterable[Functional],
    start: Functional,
    target: Functional,
    mode: str = WEIGHTS,
) -> list | None:
    """Shortest connection from ``start`` to ``target``, or None.

    Among shortest chains the lexicographically least sequence of steps is
    returned, so reports are reproducible.
    """
    roots, weights = _prepare(roots, weights)
    steps, allowed, endpoints = _mode_sets(roots, weights, mode)
    start, target = tuple(start), tuple(target)
    if start not in endpoints or target not in endpoints:
        raise ValueError("start and target must both be in the partitioned set")
    goal = {target, negate(target)}
    if start in goal:
        return [start]
    ordered_steps = sorted(steps)
    # best[s] = lexicographically least step sequence reaching partial sum s
    best = {start: ()}
    layer = {start: ()}
    while layer:
        candidates: dict = {}
        finishing = []
        for s, path in sorted(layer.items(), key=lambda kv: kv[1]):
            for z in ordered_steps:
                nxt = add(s, z)
                new_path = path + (z,)
                if nxt in goal:
                    finishing.append(new_path)
                elif nxt in allowed and nxt not in best:
                    if nxt not in candidates or new_path < candidates[nxt]:
                        candidates[nxt] = new_path
        if finishing:
            return [start] + list(min(finishing))
        best.update(candidates)
        layer = candidates
    return None


# --------------------------------------------------------------------------
# Independent chain-enumeration oracle
# --------------------------------------------------------------------------

def chain_targets(
    roots: Iterable[Functional],
    weights: Iterable[Functional],
    start: Functional,
    mode: str = WEIGHTS,
    max_depth: int | None = None,
) -> set:
    """Every element that ``start`` is connected to by a chain of length <= max_depth.

    Follows the definition literally: all partial-sum sets are enumerated
    breadth-first with no symmetry shortcut.
    """
    roots = {tuple(r) for r in roots}
    weights = {tuple(w) for w in weights}
    steps, allowed, endpoints = _mode_sets(roots, weights, mode)
    if max_depth is None:
        max_depth = len(roots) + len(weights)
    start = tuple(start)
    # the trivial chain connects start to itself and to its negative
    reached = {f for f in (start, negate(start)) if f in endpoints}
    frontier = {start}
    for _ in range(max_depth):
        sums = {add(s, z) for s in frontier for z in steps}
        for t in sums:
            for d in (t, negate(t)):
                if d in endpoints:
                    reached.add(d)
        frontier = {t for t in sums if t in allowed}
        if not frontier:
            break
    return reached


def chain_partition(
    roots: Iterable[Functional],
    weights: Iterable[Functional],
    mode: str = WEIGHTS,
    max_depth: int | None = None,
) -> Partition:
    """Partition obtained from :func:`chain_targets`.

    Raises ValueError if the enumerated relation is not an equivalence
    relation (which would mean ``max_depth`` is too small).
    """
    roots = {tuple(r) for r in roots}
    weights = {tuple(w) for w in weights}
    _, _, endpoints = _mode_sets(roots, weights, mode)
    related = {f: chain_targets(roots, weights, f, mode, max_depth) for f in endpoints}
    for f, rel in related.items():
        if f not in rel:
            raise ValueError(f"relation is not reflexive at {f}")
        for g in rel:
            if f not in related[g]:
                raise ValueError(f"relation is not symmetric on {f}, {g}")
            if not related[g] <= rel:
                raise ValueError(f"relation is not transitive through {g}")
    return Partition.from_classes({frozenset(r) for r in related.values()})


def partition_to_lists(p: Partition) -> list[list[list[str]]]:
    return [[[str(x) for x in f] for f in c] for c in p.classes]

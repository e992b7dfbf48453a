"""The eight acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL`` line that is printed in the
pytest summary; running this file directly prints the same lines.
"""
import random
import sys
from fractions import Fraction
from functools import lru_cache

from conftest import ACCEPTANCE_LINES
from splitlie import io
from splitlie.cli import COMMANDS, run
from splitlie.connections import ROOTS, WEIGHTS, chain_partition, connect_roots, connect_weights
from splitlie.decomposition import (
    SIMPLE,
    SPLIT_PAIR,
    decompose_algebra,
    decompose_module,
    ideal_for_class,
    is_submodule,
    minimal_weight_submodules,
    pair,
    simple_components,
    simplicity_report,
    submodule_for_class,
)
from splitlie.fixtures import (
    torus_pair,
    random_module,
    random_symmetric_system,
    sl2_adjoint,
    sl2_natural,
    sl2_natural_plus_adjoint,
    sl2_natural_plus_natural,
    sl2_sum,
    sl2_sum_adjoints,
    sl2_sum_naturals,
)
from splitlie.involution import build, swap_involution
from splitlie.linalg import Subspace, is_direct, sum_all
from splitlie.weight_module import module_center, weight_decompose


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(ACCEPTANCE_LINES[number])


def fixture_modules():
    mods = {
        "sl2 adjoint": sl2_adjoint(),
        "sl2 natural": sl2_natural(),
        "natural+adjoint": sl2_natural_plus_adjoint(),
        "sl2+sl2 naturals": sl2_sum_naturals(),
        "sl2+sl2 adjoint": sl2_sum_adjoints(),
        "torus pair": torus_pair(),
        "swap construction": build(swap_involution(sl2_sum(), 3)).module,
    }
    return mods


@lru_cache(maxsize=None)
def corpus():
    mods = fixture_modules()
    rng = random.Random(20261019)
    for k in range(100):
        mods[f"random {k}"] = random_module(rng, max_dim=8)
    return mods


def test_1_connection_partitions_match_oracle():
    rng = random.Random(1)
    mismatches = 0
    for _ in range(200):
        roots = random_symmetric_system(rng, max_size=12, bound=5)
        weights = random_symmetric_system(rng, max_size=12, bound=5)
        if connect_weights(roots, weights) != chain_partition(roots, weights, WEIGHTS):
            mismatches += 1
        if connect_roots(roots, weights) != chain_partition(roots, weights, ROOTS):
            mismatches += 1
    record(1, mismatches == 0, f"200 random systems in Z^2, {mismatches} mismatches")
    assert mismatches == 0


def test_2_class_pieces_are_submodules():
    failures, count = [], 0
    for name, M in corpus().items():
        W = weight_decompose(M)
        for cls in connect_weights(W.split.root_system, W.weight_system).classes:
            count += 1
            if not is_submodule(M, submodule_for_class(W, cls)):
                failures.append(name)
    record(2, not failures, f"{count} class pieces over {len(corpus())} modules, {len(failures)} failures")
    assert not failures


def test_3_class_ideals_are_ideals_and_commute():
    failures, count = [], 0
    for name, M in corpus().items():
        W = weight_decompose(M)
        S, L = W.split, W.split.algebra
        ideals = [ideal_for_class(S, c) for c in connect_roots(S.root_system, W.weight_system).classes]
        count += len(ideals)
        if not all(L.is_ideal(i) for i in ideals):
            failures.append(f"{name}: not an ideal")
        for a in range(len(ideals)):
            for b in range(a + 1, len(ideals)):
                if not L.bracket_spaces(ideals[a], ideals[b]).is_zero():
                    failures.append(f"{name}: ideals {a},{b} do not commute")
    record(3, not failures, f"{count} ideals, {len(failures)} failures")
    assert not failures, failures


def test_4_direct_sums_under_hypotheses(tmp_path):
    failures, applied = [], 0
    for name, M in corpus().items():
        W = weight_decompose(M)
        MD = decompose_module(W)
        if all(MD.hypotheses.values()):
            applied += 1
            if not (MD.direct and MD.complement.is_zero()):
                failures.append(f"{name}: module")
        AD = decompose_algebra(W.split, W.weight_system)
        if all(AD.hypotheses.values()):
            applied += 1
            if not (AD.direct and AD.complement.is_zero()):
                failures.append(f"{name}: algebra")
    exit_two = []
    for k, (name, M) in enumerate(corpus().items()):
        path = tmp_path / f"m{k}.json"
        path.write_text(io.dumps(io.module_to_dict(M)))
        for command in sorted(set(COMMANDS) - {"involution-split"}):
            if run(command, str(path)).exit_code == 2:
                exit_two.append(f"{name}: {command}")
    swap = tmp_path / "swap.json"
    swap.write_text(io.dumps(io.involution_to_dict(swap_involution(sl2_sum(), 3))))
    if run("involution-split", str(swap)).exit_code == 2:
        exit_two.append("swap: involution-split")
    ok = not failures and not exit_two
    record(4, ok, f"{applied} decompositions under hypotheses, {len(failures)} not direct, "
                  f"{len(exit_two)} exit-2 runs")
    assert ok, failures + exit_two


def names_span(M, names):
    return Subspace.span([[1 if b == n else 0 for b in M.basis] for n in names], M.dim)


def test_5_pairing_on_sl2_sum():
    D = sl2_sum()
    copies = [names_span(D, ("e1", "f1", "h1")), names_span(D, ("e2", "f2", "h2"))]
    problems = []
    for label, M, blocks in (
        ("naturals", sl2_sum_naturals(), [("a0", "a1"), ("b0'", "b1'")]),
        ("adjoints", sl2_sum_adjoints(), [("e1", "f1", "h1"), ("e2", "f2", "h2")]),
    ):
        W = weight_decompose(M)
        MD = decompose_module(W)
        AD = decompose_algebra(W.split, W.weight_system)
        P = pair(AD, MD)
        ideals = dict(AD.pieces)
        pieces = dict(MD.pieces)
        if set(P.map) != set(pieces) or any(len(c) != 1 for c in P.candidates.values()):
            problems.append(f"{label}: not total and single-valued")
            continue
        # hand computation: copy k acts on block k only
        for j, i in P.map.items():
            k = [names_span(M, b) for b in blocks].index(pieces[j])
            if ideals[i] != copies[k]:
                problems.append(f"{label}: piece {j} paired with the wrong copy")
    record(5, not problems, "sl2+sl2 on natural1+natural2 and adjoint1+adjoint2: "
                            + ("identity matching" if not problems else "; ".join(problems)))
    assert not problems


def test_6_simplicity_dichotomy():
    problems = []
    for label, M in (("sl2 natural", sl2_natural()), ("sl2 adjoint", sl2_adjoint())):
        if simplicity_report(weight_decompose(M)).verdict != SIMPLE:
            problems.append(f"{label} not SIMPLE")

    M = torus_pair()
    W = weight_decompose(M)
    R = simplicity_report(W)
    v, w = names_span(M, ("v",)), names_span(M, ("w",))
    if R.verdict != SPLIT_PAIR or set(R.minimal) != {v, w}:
        problems.append("torus pair not SPLIT_PAIR span{v} + span{w}")
    else:
        pw, npw = R.split_weights
        if set(pw) & set(npw) or set(pw) | set(npw) != set(W.weight_system) \
                or {tuple(-x for x in g) for g in pw} != set(npw):
            problems.append("torus pair weights are not P^W and -P^W")

    N = sl2_natural_plus_adjoint()
    WN = weight_decompose(N)
    SC = simple_components(WN)
    minimal = minimal_weight_submodules(WN)
    if [r.verdict for _, r in SC.piece_reports] != [SIMPLE, SIMPLE] \
            or set(SC.components) != set(minimal) \
            or not (is_direct(minimal, N.dim) and sum_all(minimal, N.dim).is_full()):
        problems.append("natural+adjoint pieces are not simple summing to V")

    if simplicity_report(weight_decompose(sl2_natural_plus_natural())).verdict in (SIMPLE, SPLIT_PAIR):
        problems.append("natural+natural got a verdict outside the hypotheses")
    record(6, not problems, "; ".join(problems) or
           "natural/adjoint SIMPLE, torus pair SPLIT_PAIR, natural+adjoint two simple pieces")
    assert not problems


def test_7_swap_construction_end_to_end():
    D = sl2_sum()
    built = build(swap_involution(D, 3))
    L, M = built.algebra, built.module
    W = weight_decompose(M)
    AD = decompose_algebra(built.split, W.weight_system)
    MD = decompose_module(W)
    P = pair(AD, MD)
    lifted_v0 = Subspace.span(
        [[sum((c * b[k] for c, b in zip(v, built.skw.basis)), Fraction(0)) for k in range(D.dim)]
         for v in W.zero_space.basis],
        D.dim,
    )
    facts = {
        "dim L = 3": L.dim == 3,
        "dim V = 3": M.dim == 3,
        "V_0 dim 1": W.zero_space.dim == 1,
        "V_0 = Skw(H)": lifted_v0 == built.skw.intersect(D.cartan_subspace),
        "one ideal": len(AD.pieces) == 1,
        "one piece": len(MD.pieces) == 1,
        "unique match": P.map == {0: 0} and P.candidates == {0: (0,)},
        "checks pass": all(c.passed for c in AD.checks + MD.checks + P.checks),
        "center zero": module_center(M).is_zero(),
    }
    bad = [k for k, v in facts.items() if not v]
    record(7, not bad, "swap on sl2+sl2: " + (", ".join(facts) if not bad else "failed " + ", ".join(bad)))
    assert not bad


def is_rref(s: Subspace) -> bool:
    pivots = s.pivots
    if list(pivots) != sorted(set(pivots)):
        return False
    for row, p in zip(s.basis, pivots):
        if row[p] != 1:
            return False
        if any(other[p] != 0 for other in s.basis if other is not row):
            return False
    return True


def random_subspace(rng, n=6):
    k = rng.randint(0, n)
    return [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(k)]


def test_8_exact_linear_algebra():
    rng = random.Random(8)
    failures = 0
    for _ in range(500):
        a, b = random_subspace(rng), random_subspace(rng)
        A, B = Subspace.span(a, 6), Subspace.span(b, 6)
        if (A + B).dim + (A & B).dim != A.dim + B.dim:
            failures += 1
        # another spanning set of the same space gives the same basis
        coeffs = [rng.randint(-2, 2) for _ in a]
        mixed = [[x + c * y for x, y in zip(r, a[(i + 1) % len(a)])]
                 for i, (r, c) in enumerate(zip(a, coeffs))]
        rng.shuffle(mixed)
        again = Subspace.span(mixed + list(A.basis), 6)
        if again.basis != A.basis or not is_rref(A) or not is_rref(A & B):
            failures += 1
    record(8, failures == 0, f"500 random subspace pairs of Q^6, {failures} failures")
    assert failures == 0


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        results = []
        for test in (
            test_1_connection_partitions_match_oracle,
            test_2_class_pieces_are_submodules,
            test_3_class_ideals_are_ideals_and_commute,
            lambda: test_4_direct_sums_under_hypotheses(Path(tmp)),
            test_5_pairing_on_sl2_sum,
            test_6_simplicity_dichotomy,
            test_7_swap_construction_end_to_end,
            test_8_exact_linear_algebra,
        ):
            try:
                test()
                results.append(True)
            except AssertionError:
                results.append(False)
    sys.exit(0 if all(results) else 1)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitlie.errors import ModuleAxiomViolation, NotWeightModule, SymmetryViolation
from splitlie.fixtures import (
    torus_pair,
    random_module,
    sl2,
    sl2_adjoint,
    sl2_natural,
    sl2_natural_plus_adjoint,
    sl2_natural_plus_natural,
    solvable_half_module,
    torus_module,
)
from splitlie.linalg import Subspace, is_direct, sum_all
from splitlie.split import split
from splitlie.weight_module import (
    ModuleAction,
    _axiom_failure,
    act,
    is_completely_pointed,
    is_weight_multiplicative,
    lv_equals_v,
    module_basis_vector,
    module_center,
    submodule_action,
    trivial_module,
    weight_decompose,
)


def vec(M, *names):
    out = [0] * M.dim
    for n in names:
        out[M.basis.index(n)] += 1
    return tuple(out)


def test_act_examples():
    M = sl2_natural()
    L = M.algebra
    assert act(M, L.element("h"), vec(M, "x")) == vec(M, "x")
    assert act(M, L.element("e"), vec(M, "y")) == vec(M, "x")
    assert act(M, L.element("f"), vec(M, "x", "y")) == vec(M, "y")


def test_module_axiom_is_checked():
    S = split(sl2())
    # h acts like the natural module but e, f both kill nothing consistently
    bad = {(2, 0): [1, 0], (2, 1): [0, -1], (0, 1): [1, 0], (1, 0): [0, 2]}
    with pytest.raises(ModuleAxiomViolation):
        ModuleAction(S, ["x", "y"], bad)


def test_non_diagonalizable_cartan_action():
    S = split(sl2())
    # h acts by a Jordan block; e, f act by zero, so the axiom fails first
    with pytest.raises((NotWeightModule, ModuleAxiomViolation)):
        weight_decompose(ModuleAction(S, ["a", "b"], {(2, 1): [1, 0]}))


def test_weight_decompose_examples():
    W = weight_decompose(sl2_adjoint())
    assert W.weight_system == ((-2,), (2,))
    assert W.zero_space == Subspace.span([vec(W.module, "h")], 3)
    W = weight_decompose(sl2_natural())
    assert W.weight_system == ((-1,), (1,))
    assert W.zero_space.is_zero()
    W = weight_decompose(sl2_natural_plus_adjoint())
    assert W.weight_system == ((-2,), (-1,), (1,), (2,))
    assert W.zero_space == Subspace.span([vec(W.module, "h'")], 5)


def test_center_examples():
    assert module_center(sl2_natural()).is_zero()
    assert module_center(trivial_module(split(sl2()), 2)).is_full()
    assert module_center(sl2_adjoint()).is_zero()


def test_lv_examples():
    assert lv_equals_v(sl2_natural())
    assert not lv_equals_v(trivial_module(split(sl2()), 1))
    assert lv_equals_v(torus_pair())


def test_completely_pointed_examples():
    assert is_completely_pointed(weight_decompose(sl2_natural()))
    assert not is_completely_pointed(weight_decompose(sl2_natural_plus_natural()))
    assert is_completely_pointed(weight_decompose(sl2_adjoint()))


def test_weight_multiplicative_examples():
    for M in (sl2_natural(), sl2_adjoint(), torus_pair(), sl2_natural_plus_adjoint()):
        assert is_weight_multiplicative(weight_decompose(M))


def test_weight_multiplicative_failure():
    # only one of e, f acts, so one of the shifts between -1/2 and 1/2 vanishes
    for raising in (True, False):
        W = weight_decompose(solvable_half_module(raising=raising))
        assert not is_weight_multiplicative(W)


def test_weight_multiplicative_needs_symmetry():
    W = weight_decompose(torus_module([[1], [2], [-1]]))
    with pytest.raises(SymmetryViolation):
        is_weight_multiplicative(W)


def test_v0_generated_in_adjoint():
    W = weight_decompose(sl2_adjoint())
    assert W.v0_generated() == W.zero_space


def test_submodule_action_restricts():
    M = sl2_natural_plus_adjoint()
    natural = Subspace.span([vec(M, "x"), vec(M, "y")], 5)
    sub = submodule_action(M, natural)
    assert sub.dim == 2
    assert weight_decompose(sub).weight_system == ((-1,), (1,))
    with pytest.raises(ValueError):
        submodule_action(M, Subspace.span([vec(M, "x")], 5))


def test_module_basis_vector():
    assert module_basis_vector(sl2_natural(), "y") == (0, 1)


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_random_modules_are_weight_modules(seed):
    M = random_module(random.Random(seed))
    assert _axiom_failure(M) is None
    W = weight_decompose(M)
    spaces = [W.zero_space] + [s for _, s in W.weights]
    assert is_direct(spaces, M.dim)
    assert sum_all(spaces, M.dim).is_full()
    assert W.is_symmetric()
    for f, s in W.weights:
        for k, c in enumerate(M.algebra.cartan):
            for v in s.basis:
                assert act(M, M.algebra.element(M.algebra.basis[c]), v) == tuple(f[k] * x for x in v)

"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.builds(
    Fraction, st.integers(-4, 4), st.integers(1, 3)
)


def vectors(n):
    return st.lists(small_rationals, min_size=n, max_size=n)


def spanning_sets(n, max_vectors=5):
    return st.lists(vectors(n), min_size=0, max_size=max_vectors)


def symmetric_sets(rank=2, bound=5, max_pairs=6):
    point = st.tuples(*[st.integers(-bound, bound) for _ in range(rank)]).filter(any)
    return st.lists(point, max_size=max_pairs).map(
        lambda ps: {tuple(Fraction(x) for x in p) for p in ps}
        | {tuple(Fraction(-x) for x in p) for p in ps}
    )

"""Root and weight decompositions of small split algebras.

Run: python demos/roots_and_weights.py
"""
from splitlie import split, weight_decompose
from splitlie.cli import Span
from splitlie.fixtures import sl2_natural_plus_adjoint, sl2_sum


def show(label, pairs, names):
    print(label)
    for f, space in pairs:
        print(f"  ({', '.join(f)}): {Span(space, names).text()}")


# Two commuting copies of sl2, Cartan subalgebra spanned by h1, h2.
L = sl2_sum()
S = split(L)
show("roots of sl2 + sl2", [(tuple(map(str, f)), s) for f, s in S.roots], L.basis)
print("  H =", Span(S.zero_space, L.basis).text())

# The natural and adjoint sl2 modules side by side.
M = sl2_natural_plus_adjoint()
W = weight_decompose(M)
show("weights of natural + adjoint", [(tuple(map(str, f)), s) for f, s in W.weights], M.basis)
print("  V_0 dimension:", W.zero_space.dim)

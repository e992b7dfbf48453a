"""Ideals of the algebra, submodules of the module, and how they pair up.

Run: python demos/decompose_and_pair.py
"""
from splitlie import decompose_algebra, decompose_module, pair, weight_decompose
from splitlie.fixtures import sl2_natural_plus_adjoint, sl2_sum_naturals

for label, M in (("sl2+sl2 on natural1 + natural2", sl2_sum_naturals()),
                 ("sl2 on natural + adjoint", sl2_natural_plus_adjoint())):
    W = weight_decompose(M)
    AD = decompose_algebra(W.split, W.weight_system)
    MD = decompose_module(W)
    P = pair(AD, MD)
    print(label)
    for k, ideal in AD.pieces:
        print(f"  ideal {k}: dim {ideal.dim}")
    for j, piece in MD.pieces:
        print(f"  module piece {j}: dim {piece.dim} -> ideal {P.map.get(j)}")
    print("  direct:", AD.direct, MD.direct, " status:", AD.status, MD.status, P.status)

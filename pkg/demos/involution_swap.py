"""Fixed algebra and anti-fixed module of the swap on sl2 + sl2.

Run: python demos/involution_swap.py
"""
from splitlie import decompose_algebra, decompose_module, pair, weight_decompose
from splitlie.fixtures import sl2_sum
from splitlie.involution import build, swap_involution

built = build(swap_involution(sl2_sum(), 3))
L, V = built.algebra, built.module
print("L basis:", L.basis)
print("V basis:", V.basis)
W = weight_decompose(V)
print("weights of V:", [str(f[0]) for f in W.weight_system], " V_0 dim:", W.zero_space.dim)
AD = decompose_algebra(built.split, W.weight_system)
MD = decompose_module(W)
print("ideals:", len(AD.pieces), " pieces:", len(MD.pieces), " pairing:", pair(AD, MD).map)

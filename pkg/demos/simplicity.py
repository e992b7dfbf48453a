"""Simple or a pair of simple halves.

Run: python demos/simplicity.py
"""
from splitlie import simple_components, simplicity_report, weight_decompose
from splitlie.fixtures import torus_pair, sl2_natural, sl2_natural_plus_adjoint, sl2_natural_plus_natural

for label, M in (
    ("sl2 natural", sl2_natural()),
    ("torus on span{v, w}", torus_pair()),
    ("sl2 natural + natural", sl2_natural_plus_natural()),
):
    R = simplicity_report(weight_decompose(M))
    print(f"{label:24} {R.verdict:18} failed flags: {list(R.failed)}")

# Weights of natural + adjoint are not connected, so split by class first.
SC = simple_components(weight_decompose(sl2_natural_plus_adjoint()))
print("natural + adjoint components:", [c.dim for c in SC.components], SC.status)

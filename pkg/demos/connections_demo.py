"""Connection classes of weights and roots, with explicit witness chains.

Run: python demos/connections_demo.py
"""
from fractions import Fraction

from splitlie.connections import ROOTS, WEIGHTS, chain_partition, connect_roots, connect_weights, find_connection


def pts(*xs):
    return {(Fraction(x),) for x in xs}


roots = pts(2, -2)
weights = pts(1, -1, 2, -2)

# Steps of +-2 from 1 only reach -1 inside the weights, so there are two classes.
part = connect_weights(roots, weights)
print("weight classes:", [[str(f[0]) for f in c] for c in part.classes])
print("same as chain enumeration:", part == chain_partition(roots, weights, WEIGHTS))
print("chain 1 -> 2:", find_connection(roots, weights, (Fraction(1),), (Fraction(2),)))

# Roots can step through weights as well; 3 = 1 + 2 links nothing new here.
weights = pts(1, -1, 2, -2, 3, -3)
rp = connect_roots(roots, weights)
print("root classes:", [[str(f[0]) for f in c] for c in rp.classes])
print("same as chain enumeration:", rp == chain_partition(roots, weights, ROOTS))

# Longer chains appear when the weights form a string.
chain = find_connection(pts(1, -1), weights, (Fraction(1),), (Fraction(3),))
print("chain 1 -> 3 with root steps +-1:", [str(z[0]) for z in chain])

# The 4096-element symmetry group: normal forms, relations, orbits.
import numpy as np

from baseq import decode, encode, format_code, parse_code
from baseq.group import ORDER, apply, group, orbit

G = group(1)                     # odd n
a, t, s2 = G.generator("alpha"), G.generator("theta"), G.generator("sigma2")
print(G.mul(t, a), "|", G.mul(a, t))
print(G.from_word(["rho1", "alpha"]))   # alpha rho1 alpha picks up nu1 for odd n

# Cayley table: every row a permutation, identity in column 0
C = G.cayley_table
print(C.shape, C.dtype, (np.sort(C[123]) == np.arange(ORDER)).all())

# act on a representative
S = decode(parse_code("0165;6123", 7))
g = G.element(0b110101101010)
print(g, "->", format_code(encode(apply(g, S))))

# orbit sizes divide the group order
for code in ["0165;6123", "0165;6141", "0646;1260"]:
    k = len(orbit(decode(parse_code(code, 7))))
    print(code, k, ORDER // k)

# alpha-free elements act quad by quad on codes
P, Q = G.half_images(encode(S))
print(P.shape, Q.shape, len({tuple(r) for r in P.tolist()}), len({tuple(r) for r in Q.tolist()}))

"""
Grassmann algebra
=================

Exterior algebra on v1..vk with blades as bitmasks.  Even elements are
central, odd elements square to zero, and the algebra is Lie nilpotent of
index 2, yet products of commutators need not vanish.
"""

from ncch import GrassmannAlgebra, chain_product, commutator, left_normed, random_element

E = GrassmannAlgebra(4)
v1, v2, v3, v4 = E.gens
print(commutator(v1, v2))            # 2*v1*v2
print(commutator(v1, v2) * commutator(v3, v4))

# 2^d v1...v2d, never zero
for d in range(1, 5):
    print(d, chain_product(d))

# seeded random elements
g, h, f = (random_element(6, 2, 3, seed) for seed in (1, 2, 3))
print("g =", g)
print("even part central:", g.even_part() * h == h * g.even_part())
print("odd square:", g.odd_part() * g.odd_part())
print("[g, h, f] =", left_normed([g, h, f]))

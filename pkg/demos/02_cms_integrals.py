"""The infinite-dimensional CMS integrals: how they act, that they
commute, and the two independent routes to the second-order operator.

Run:  python3 demos/02_cms_integrals.py
"""

from jacklaurent import LaurentSymFunc, cms_L, stable_H
from jacklaurent.operators import cms_L2_direct

g = LaurentSymFunc.gen

f = g(2) * g(-1)
print("f =", f)
print()
print("The integrals act on the Laurent symmetric functions.")
print("Order 1 is the weight (Euler) operator:")
print("  L1 f =", cms_L(1, f))
print()
print("Order 2 is the CMS Hamiltonian; two independent implementations")
print("(auxiliary-variable composition vs direct differential operator):")
composed = cms_L(2, f)
direct = cms_L2_direct(f)
print("  L2 f =", composed)
print("  agreement:", composed == direct)
print()
print("The integrals commute:")
lhs = cms_L(2, cms_L(3, f))
rhs = cms_L(3, cms_L(2, f))
print("  L2 L3 f == L3 L2 f:", lhs == rhs)
print()
print("On the positive part there is a stable family free of p0:")
h = g(2)
print("  H1 p2 =", stable_H(1, h))
print("  H2 p2 =", stable_H(2, h))

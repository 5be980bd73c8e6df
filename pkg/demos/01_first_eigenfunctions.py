"""Construct the first few Jack-Laurent symmetric functions and show
their expansions and eigenvalues.

Run:  python3 demos/01_first_eigenfunctions.py
"""

from jacklaurent import construct, eigen_check_all

LABELS = [
    ((), ()),
    ((1,), ()),
    ((), (1,)),
    ((1,), (1,)),
    ((2,), (1,)),
    ((1, 1), (1,)),
    ((2, 1), (1,)),
]

print("Eigenfunctions P[lam; mu] in the power sums p_i, i in Z \\ {0},")
print("with exact coefficients in Q(k, p0):")
print()
for alpha in LABELS:
    jf = construct(alpha)
    print(" ", jf)
print()

print("Each is a joint eigenfunction of the commuting integrals; the")
print("first integral measures |lam| - |mu| and the second has a closed")
print("form in the label:")
print()
for alpha in [((1,), (1,)), ((2, 1), (1,))]:
    rows = eigen_check_all(alpha, 3)
    print("  alpha =", alpha)
    for r, value in rows:
        print("    order %d eigenvalue: %s" % (r, value))

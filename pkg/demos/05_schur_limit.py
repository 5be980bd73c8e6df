"""The k = -1 limit: the eigenfunctions specialize to Schur-Laurent
functions, given by a determinant in the complete symmetric functions
h_i and their images h_i* under p_j -> p_{-j}.

Run:  python3 demos/05_schur_limit.py
"""

from jacklaurent import construct, jacobi_trudy_S, schur_limit

for lam, mu in [((1,), (1,)), ((1, 1), (1,)), ((2,), (1,))]:
    p = construct((lam, mu))
    lim = schur_limit(p.f)
    det = jacobi_trudy_S(lam, mu)
    print("lam =", lam, " mu =", mu)
    print("  limit of P at k = -1:", lim)
    print("  determinant formula: ", det)
    print("  equal:", lim == det)
    print()

print("The limit is always pole-free and independent of p0, even though")
print("the coefficients of P itself have denominators involving both")
print("parameters.")

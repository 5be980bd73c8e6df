"""The bridge to finitely many variables: restricting an infinite
eigenfunction gives the N-variable Jack-Laurent polynomial at p0 = N,
and the torus constant-term form makes distinct labels orthogonal.

Run:  python3 demos/04_finite_n_bridge.py
"""

from fractions import Fraction

from jacklaurent import (
    construct, jack_laurent_poly_N, norm_value, phi_N_map, torus_form,
)
from jacklaurent.partitions import chi_N

alpha = ((1,), (1,))
p11 = construct(alpha)
print("P[1; 1] =", p11.f)
print()

N = 2
img = phi_N_map(p11.f, N)
chi = chi_N(alpha, N)
print("Restriction to N = %d variables (p_i -> power sums, p0 -> %d):"
      % (N, N))
print("  phi_N(P) =", img)
print("  finite eigenpolynomial for chi =", chi, ":", end=" ")
print(jack_laurent_poly_N(chi, N))
print("  equal:", img == jack_laurent_poly_N(chi, N))
print()

print("Restriction to a single variable kills the function:")
print("  phi_1(P) =", phi_N_map(p11.f, 1))
print()

N, k0 = 4, Fraction(-1)
f4 = phi_N_map(construct(alpha).f, N).substitute_k(k0)
g4 = phi_N_map(construct(((1,), ())).f, N).substitute_k(k0)
print("Torus form at k = %s, N = %d:" % (k0, N))
print("  (P[1;1], P[1;1]) =", torus_form(f4, f4, int(k0), N))
print("  closed form      =", norm_value(alpha).specialize(k0, N))
print("  (P[1;1], P[1;0]) =", torus_form(f4, g4, int(k0), N),
      " (distinct labels are orthogonal)")

"""Prime fields with power-of-two roots of unity.

A ring context fixes the prime p, the order M = 2^m of the root of unity and
the root omega itself.  Twiddle factors are never stored as field elements;
they are exponents s with zeta = omega^s.
"""
from cftft import ring_context, default_ring

# A toy field: p = 17 has 2-adicity 4, and the search finds omega = 3.
F17 = ring_context(17, 4)
print("p = 17:", F17)
print("  powers of omega:", [F17.omega_pow(e) for e in range(F17.M)])
print("  omega^(M/2) =", F17.omega_pow(F17.M // 2), "(that is, -1)")
print("  1/2 =", F17.inv_two, "  half(11) =", F17.half(11), "  inv(3) =", F17.inv(3))

# The default field used by the benchmarks: 2^64 - 2^32 + 1, roots of order up to 2^32.
F = default_ring()
print("\ndefault prime", F.p, "two-adicity", F.m)
print("  omega =", F.omega, "= 7^((p-1)/2^32):", F.omega == pow(7, (F.p - 1) >> 32, F.p))

# omega_L = omega^(M/L) is a principal L-th root for every L | M.
for ell in (1, 4, 16, 32):
    L = 1 << ell
    w = F.omega_pow(F.M // L)
    print(f"  L = 2^{ell:<2d}: w^L = {pow(w, L, F.p)}, w^(L/2) = -1: {pow(w, L // 2, F.p) == F.p - 1}")

# Moduli without enough 2-adicity are rejected.
try:
    ring_context(17, 5)
except ValueError as e:
    print("\nring_context(17, 5) ->", type(e).__name__, e)

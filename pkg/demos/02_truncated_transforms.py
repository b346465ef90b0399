"""Truncated transforms on a matrix view of the buffer.

The TFT reads only the first z inputs and writes only the first n outputs;
the ITFT goes back from n transformed values plus the untransformed tail.
"""
import random

from cftft import (ButterflyStats, SplitPolicy, StridedView, TransformParams, cf_itft, cf_tft,
                   dft_naive, ring_context)

F = ring_context(17, 4)
L, s = 8, 3          # zeta = omega^3
a = [2, 7, 1, 8, 2]  # z = 5, a_5 = a_6 = a_7 = 0
z = len(a)

full = dft_naive(F, L, s, a)
print("full weighted DFT (bit-reversed order):", full)

# Cells past z may hold anything: the transform never reads them.
for n in (1, 3, 6, 8):
    x = a + [99] * (L - z)
    st = ButterflyStats()
    cf_tft(F, TransformParams(L, s, z, n), x, stats=st)
    print(f"TFT  n={n}: first n cells {x[:n]}  base cases {st.base_case_count}")

# Inverse: feed ahat_0..ahat_{n-1} and L*a_n..L*a_{z-1}; get L*a_0..L*a_{n-1} and ahat_n.
n, f = 3, 1
x = full[:n] + [L * v % F.p for v in a[n:]] + [0] * (L - z)
cf_itft(F, TransformParams(L, s, z, n, f), x)
print(f"\nITFT n={n} f={f}: L*a_0..L*a_{n-1} = {x[:n]} (expected {[L * v % F.p for v in a[:n]]}),"
      f" ahat_{n} = {x[n]} (expected {full[n]})")

# The same call works on any strided window, e.g. one column of a larger matrix.
rng = random.Random(1)
big = [rng.randrange(F.p) for _ in range(4 * L)]
col = StridedView(big, base=1, stride=4, length=L)   # column 1 of an L x 4 matrix
before = list(big)
coeffs = col.tolist()
cf_tft(F, TransformParams(L, s, L, L), col, SplitPolicy.RADIX2)
print("\ncolumn transform matches oracle:", col.tolist() == dft_naive(F, L, s, coeffs))
print("other columns untouched:", all(big[i] == before[i] for i in range(len(big)) if i % 4 != 1))

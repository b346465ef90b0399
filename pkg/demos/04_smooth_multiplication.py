"""Polynomial multiplication cost as a function of product length.

Multiplies random polynomials whose product length n sweeps across two
power-of-two boundaries.  Both the butterfly count and the wall time rise
smoothly with n instead of doubling when n passes a power of two.  Pass
--plot to save a PNG (needs matplotlib).
"""
import io
import sys

from cftft import default_ring, mul, schoolbook
from cftft.bench import cmd_bench
from cftft.transform import full_count

F = default_ring()

g, h = [1, 2, 3], [4, 5]
print("(1 + 2x + 3x^2)(4 + 5x) =", mul(F, g, h), "check:", schoolbook(F, g, h))

recs = cmd_bench(F, 200, 1100, 10, trials=3, out=io.StringIO())
print(f"\n{'n':>5} {'L':>5} {'butterflies':>12} {'padded FFT':>11} {'ms':>8}")
for r in recs:
    padded = 3 * full_count(r.L)
    print(f"{r.n:>5} {r.L:>5} {r.butterflies:>12} {padded:>11} {r.wall_ns / 1e6:>8.2f}")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    ax.plot([r.n for r in recs], [r.butterflies for r in recs], label="truncated")
    ax.plot([r.n for r in recs], [3 * full_count(r.L) for r in recs], label="zero-padded")
    ax.set_xlabel("product length n")
    ax.set_ylabel("base cases per multiply")
    ax.legend()
    fig.savefig("smooth_multiplication.png", dpi=120)
    print("wrote smooth_multiplication.png")

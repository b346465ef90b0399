"""Base-case counts against the worst-case bounds.

A full length-L transform executes L*ell/2 base cases.  Truncating to the
first n outputs costs at most (n-1)*ell/2 + L - 1, so the cost grows with n
rather than jumping at powers of two.
"""
import io

from cftft import default_ring
from cftft.bench import cmd_count
from cftft.transform import full_count

F = default_ring()
L = 64
rows = cmd_count(F, L, out=io.StringIO())

print(f"L = {L}, full transform = {full_count(L)} base cases\n")
print(f"{'n':>4} {'tft':>5} {'bound':>6} {'itft':>5} {'bound':>6}  ratio vs full")
for r in rows[::4] + [rows[-1]]:
    ratio = r["tft_count"] / full_count(L)
    bar = "#" * round(40 * ratio)
    print(f"{r['n']:>4} {r['tft_count']:>5} {r['tft_bound']:>6} {r['itft_count']:>5} "
          f"{r['itft_bound']:>6}  {ratio:5.2f} {bar}")

worst = max(r["tft_count"] - r["tft_bound"] for r in rows)
print("\nlargest (count - bound) over all n:", worst, "(never positive)")

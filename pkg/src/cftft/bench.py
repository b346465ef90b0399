"""Verification sweeps, base-case count tables and timing sweeps.

Every command writes CSV or a plain-text summary to a stream and returns
data the caller can inspect; ``cli.py`` only parses flags.
"""
from __future__ import annotations

import csv
import random
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Iterator, TextIO

from .polymul import choose_length, mul
from .ring import RingCtx
from .transform import (ButterflyStats, SplitPolicy, TransformParams, cf_itft, cf_tft,
                        check_length, dft_naive, full_count, itft_bound, itft_bound_x2,
                        smoothness_ok, tft_bound, tft_bound_x2)

POLICIES = (SplitPolicy.BALANCED, SplitPolicy.RADIX2)


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# verify

@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failure: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def fail(self, **where) -> None:
        if self.failure is None:
            self.failure = where

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: PASS ({self.checks} checks)"
        where = " ".join(f"{k}={v}" for k, v in self.failure.items())
        return f"{self.name}: FAIL after {self.checks} checks at {where}"


def _lengths(max_ell: int) -> Iterator[tuple[int, int]]:
    for ell in range(1, max_ell + 1):
        yield ell, 1 << ell


def run_suites(ctx: RingCtx, max_ell: int, seed: int, samples: int = 8) -> list[SuiteResult]:
    """Exhaustive oracle, inversion and count-bound checks up to L = 2^max_ell.

    For every L, every admissible (z, n[, f]), both split policies and
    ``samples`` random (input, twiddle exponent) draws, compare against
    ``dft_naive``.  The base-case counts observed along the way feed the
    bound and smoothness suites.
    """
    rng = random.Random(seed)
    p, M = ctx.p, ctx.M
    tft_ok = SuiteResult("tft-oracle")
    itft_ok = SuiteResult("itft-inversion")
    tft_cnt = SuiteResult("tft-bound")
    itft_cnt = SuiteResult("itft-bound")
    smooth = SuiteResult("tft-smoothness")

    for ell, L in _lengths(max_ell):
        check_length(ctx, L)
        for z in range(1, L + 1):
            for _ in range(samples):
                a = [rng.randrange(p) for _ in range(z)]
                s = rng.randrange(M)
                ref = dft_naive(ctx, L, s, a)
                scaled = [L * v % p for v in a]
                for policy in POLICIES:
                    where = dict(L=L, z=z, policy=policy.value, seed=seed)
                    for n in range(1, L + 1):
                        x = a + [rng.randrange(p) for _ in range(L - z)]
                        st = ButterflyStats()
                        cf_tft(ctx, TransformParams(L, s, z, n), x, policy, st)
                        tft_ok.checks += 1
                        if x[:n] != ref[:n]:
                            tft_ok.fail(n=n, f=0, **where)
                        tft_cnt.checks += 1
                        c = st.base_case_count
                        if 2 * c > tft_bound_x2(L, n) or (n == z == L and c != full_count(L)):
                            tft_cnt.fail(n=n, f=0, count=c, **where)
                        smooth.checks += 1
                        if not smoothness_ok(L, n, c):
                            smooth.fail(n=n, f=0, count=c, **where)
                    for n in range(0, z + 1):
                        for f in (0, 1):
                            if not 1 <= n + f <= L:
                                continue
                            x = ref[:n] + scaled[n:] + [rng.randrange(p) for _ in range(L - z)]
                            st = ButterflyStats()
                            cf_itft(ctx, TransformParams(L, s, z, n, f), x, policy, st)
                            itft_ok.checks += 1
                            if x[:n] != scaled[:n] or (f and x[n] != ref[n]):
                                itft_ok.fail(n=n, f=f, **where)
                            itft_cnt.checks += 1
                            c = st.base_case_count
                            full = n == z == L and f == 0
                            if 2 * c > itft_bound_x2(L, n, f) or (full and c != full_count(L)):
                                itft_cnt.fail(n=n, f=f, count=c, **where)
    return [tft_ok, itft_ok, tft_cnt, itft_cnt, smooth]


def cmd_verify(ctx: RingCtx, max_ell: int, seed: int, samples: int = 8,
               out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    if not 1 <= max_ell <= 8:
        raise UsageError("--max-ell must lie in 1..8")
    if samples < 1:
        raise UsageError("--samples must be >= 1")
    if ctx.M < (1 << max_ell):
        raise UsageError(f"root order {ctx.M} is smaller than 2^{max_ell}")
    results = run_suites(ctx, max_ell, seed, samples)
    for r in results:
        print(r.summary(), file=out)
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# count

def cmd_count(ctx: RingCtx, L: int, policy: SplitPolicy = SplitPolicy.BALANCED,
              out: TextIO | None = None) -> list[dict]:
    """Measured TFT/ITFT base-case counts against their bounds, n = 1..L."""
    out = sys.stdout if out is None else out
    check_length(ctx, L)
    if L > 1 << 16:
        raise UsageError("--length must be at most 65536")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "tft_count", "tft_bound", "itft_count", "itft_bound"])
    rows = []
    buf = [0] * L
    for n in range(1, L + 1):
        st = ButterflyStats()
        cf_tft(ctx, TransformParams(L, 0, n, n), buf, policy, st)
        tc = st.base_case_count
        st = ButterflyStats()
        cf_itft(ctx, TransformParams(L, 0, n, n, 0), buf, policy, st)
        row = dict(n=n, tft_count=tc, tft_bound=tft_bound(L, n),
                   itft_count=st.base_case_count, itft_bound=itft_bound(L, n, 0))
        w.writerow(row.values())
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# bench / compare

@dataclass
class BenchRecord:
    n: int
    L: int
    policy: SplitPolicy
    wall_ns: int
    butterflies: int

    def within_bound(self) -> bool:
        return self.butterflies <= 2 * tft_bound(self.L, self.n) + itft_bound(self.L, self.n, 0)


def length_grid(min_n: int, max_n: int, step_pct: float) -> list[int]:
    """Geometric grid from min_n to max_n with ratio 1 + step_pct/100.

    Points are rounded and deduplicated; both endpoints are included.
    """
    ratio = 1 + step_pct / 100
    grid = []
    x = float(min_n)
    while round(x) < max_n:
        v = round(x)
        if not grid or v > grid[-1]:
            grid.append(v)
        x *= ratio
    if not grid or grid[-1] != max_n:
        grid.append(max_n)
    return grid


def _check_sweep(ctx: RingCtx, min_n: int, max_n: int, step_pct: float, trials: int) -> None:
    if not 1 <= min_n <= max_n <= ctx.M:
        raise UsageError(f"need 1 <= --min <= --max <= {ctx.M}")
    if step_pct < 1:
        raise UsageError("--step-pct must be >= 1")
    if trials < 1:
        raise UsageError("--trials must be >= 1")


def _factors(ctx: RingCtx, n: int, rng: random.Random) -> tuple[list[int], list[int]]:
    # lengths z1 + z2 - 1 = n, nonzero leading coefficients
    z1 = (n + 1) // 2
    z2 = n + 1 - z1
    g = [rng.randrange(ctx.p) for _ in range(z1 - 1)] + [rng.randrange(1, ctx.p)]
    h = [rng.randrange(ctx.p) for _ in range(z2 - 1)] + [rng.randrange(1, ctx.p)]
    return g, h


def _time_mul(ctx, g, h, policy, trials) -> tuple[int, int]:
    st = ButterflyStats()
    mul(ctx, g, h, policy, st)  # warm-up, also gives the count
    times = []
    for _ in range(trials):
        t0 = time.perf_counter_ns()
        mul(ctx, g, h, policy)
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times)), st.base_case_count


def cmd_bench(ctx: RingCtx, min_n: int = 512, max_n: int = 16384, step_pct: float = 5,
              trials: int = 3, policy: SplitPolicy = SplitPolicy.BALANCED, seed: int = 0,
              out: TextIO | None = None) -> list[BenchRecord]:
    out = sys.stdout if out is None else out
    _check_sweep(ctx, min_n, max_n, step_pct, trials)
    rng = random.Random(seed)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "L", "policy", "wall_ns", "butterflies"])
    records = []
    for n in length_grid(min_n, max_n, step_pct):
        g, h = _factors(ctx, n, rng)
        wall, bf = _time_mul(ctx, g, h, policy, trials)
        rec = BenchRecord(n, choose_length(ctx, n), policy, wall, bf)
        if not rec.within_bound():
            raise AssertionError(f"butterfly count {bf} exceeds the bound at n={n}")
        w.writerow([rec.n, rec.L, policy.value, rec.wall_ns, rec.butterflies])
        out.flush()
        records.append(rec)
    return records


def cmd_compare(ctx: RingCtx, min_n: int = 512, max_n: int = 16384, step_pct: float = 5,
                trials: int = 3, seed: int = 0, out: TextIO | None = None) -> list[dict]:
    """Time both split policies on identical inputs; ratio = radix2 / balanced."""
    out = sys.stdout if out is None else out
    _check_sweep(ctx, min_n, max_n, step_pct, trials)
    rng = random.Random(seed)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "wall_ns_balanced", "wall_ns_radix2", "ratio"])
    rows = []
    for n in length_grid(min_n, max_n, step_pct):
        g, h = _factors(ctx, n, rng)
        L = choose_length(ctx, n)
        rec = {}
        for policy in POLICIES:
            wall, bf = _time_mul(ctx, g, h, policy, trials)
            r = BenchRecord(n, L, policy, wall, bf)
            if not r.within_bound():
                raise AssertionError(f"butterfly count {bf} exceeds the bound at n={n}")
            rec[policy] = r
        bal, rad = rec[SplitPolicy.BALANCED].wall_ns, rec[SplitPolicy.RADIX2].wall_ns
        ratio = rad / bal if bal else float("nan")
        w.writerow([n, bal, rad, f"{ratio:.4f}"])
        out.flush()
        rows.append(dict(n=n, wall_ns_balanced=bal, wall_ns_radix2=rad, ratio=ratio,
                         butterflies_balanced=rec[SplitPolicy.BALANCED].butterflies,
                         butterflies_radix2=rec[SplitPolicy.RADIX2].butterflies))
    return rows

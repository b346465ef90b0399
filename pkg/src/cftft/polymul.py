"""Polynomial multiplication in GF(p)[X] through the truncated transforms.

Two TFTs compute the first n Fourier coefficients of g and h (n is the
length of the product), n pointwise products give those of u = g*h, and one
ITFT recovers L*u.  No transform is ever padded to its full length L.
"""
from __future__ import annotations

from typing import Sequence

from .errors import TooLarge
from .ring import RingCtx
from .transform import ButterflyStats, SplitPolicy, TransformParams, cf_itft, cf_tft

Polynomial = list  # coefficient of X^i at index i


def degree(g: Sequence[int]) -> int:
    """Degree of g, or -1 for the zero polynomial."""
    d = len(g) - 1
    while d >= 0 and g[d] == 0:
        d -= 1
    return d


def choose_length(ctx: RingCtx, n: int) -> int:
    """Smallest power of two L >= max(n, 2) dividing M."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ctx.M:
        raise TooLarge(f"product length {n} exceeds the root order {ctx.M}")
    return max(2, 1 << (n - 1).bit_length())


def mul(ctx: RingCtx, g: Sequence[int], h: Sequence[int],
        policy: SplitPolicy = SplitPolicy.BALANCED,
        stats: ButterflyStats | None = None) -> list[int]:
    """Return g*h with exactly deg g + deg h + 1 coefficients.

    Coefficients must already be reduced mod p.  Returns [] when either
    factor is zero.
    """
    z1, z2 = degree(g) + 1, degree(h) + 1
    if z1 == 0 or z2 == 0:
        return []
    n = z1 + z2 - 1
    L = choose_length(ctx, n)
    p = ctx.p

    gx = list(g[:z1]) + [0] * (L - z1)
    hx = list(h[:z2]) + [0] * (L - z2)
    cf_tft(ctx, TransformParams(L, 0, z1, n), gx, policy, stats)
    cf_tft(ctx, TransformParams(L, 0, z2, n), hx, policy, stats)
    for i in range(n):
        gx[i] = gx[i] * hx[i] % p
    if stats is not None:
        stats.pointwise_products += n
    cf_itft(ctx, TransformParams(L, 0, n, n, 0), gx, policy, stats)

    scale = ctx.inv(L % p)
    return [gx[i] * scale % p for i in range(n)]


def schoolbook(ctx: RingCtx, g: Sequence[int], h: Sequence[int]) -> list[int]:
    """Quadratic-time reference product, trimmed like ``mul``."""
    z1, z2 = degree(g) + 1, degree(h) + 1
    if z1 == 0 or z2 == 0:
        return []
    out = [0] * (z1 + z2 - 1)
    for i in range(z1):
        gi = g[i]
        for j in range(z2):
            out[i + j] += gi * h[j]
    return [c % ctx.p for c in out]

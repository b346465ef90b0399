"""Cache-friendly truncated Fourier transform and its inverse.

Both transforms work in place on an array ``x_0 .. x_{L-1}`` viewed as an
``L1 x L2`` matrix (``L = L1 * L2``).  Column ``u`` is the strided sequence
``x_u, x_{u+L2}, ...``; row ``u`` is the contiguous run starting at
``x_{u*L2}``.  Column transforms of length L1 and row transforms of length L2
recurse until L = 2.

Outputs follow the weighted, bit-reversed DFT

    ahat_j = zeta^{j'} * sum_i omega_L^{i j'} a_i,      j' = bitrev_ell(j)

with ``zeta = omega^s`` carried as the exponent ``s`` modulo M.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import MutableSequence, Sequence

from .errors import BadLength, InvalidParams
from .ring import RingCtx


class SplitPolicy(enum.Enum):
    BALANCED = "balanced"
    RADIX2 = "radix2"


def split(ell: int, policy: SplitPolicy = SplitPolicy.BALANCED) -> tuple[int, int]:
    """Return (ell1, ell2) with L1 = 2^ell1 rows and L2 = 2^ell2 columns."""
    if ell < 2:
        raise ValueError("split requires ell >= 2")
    if policy is SplitPolicy.RADIX2:
        return 1, ell - 1
    return ell // 2, (ell + 1) // 2


@dataclass
class ButterflyStats:
    base_case_count: int = 0
    # incremented by polymul.mul only
    pointwise_products: int = 0


@dataclass(frozen=True)
class TransformParams:
    L: int
    s: int
    z: int
    n: int
    f: int = 0

    @property
    def ell(self) -> int:
        return self.L.bit_length() - 1

    def check_length(self, ctx: RingCtx) -> None:
        check_length(ctx, self.L)

    def check_tft(self, ctx: RingCtx) -> None:
        self.check_length(ctx)
        if not (1 <= self.z <= self.L and 1 <= self.n <= self.L):
            raise InvalidParams(f"TFT needs 1 <= z, n <= L, got {self}")
        if self.f:
            raise InvalidParams("the TFT takes no f flag")

    def check_itft(self, ctx: RingCtx) -> None:
        self.check_length(ctx)
        L, z, n, f = self.L, self.z, self.n, self.f
        if f not in (0, 1):
            raise InvalidParams(f"f must be 0 or 1, got {f}")
        if not (1 <= z <= L and 1 <= n + f <= L and z >= n >= 0):
            raise InvalidParams(f"ITFT needs 1 <= z <= L, 1 <= n+f <= L, z >= n; got {self}")


def check_length(ctx: RingCtx, L: int) -> None:
    if L < 2 or L & (L - 1):
        raise BadLength(f"transform length must be a power of two >= 2, got {L}")
    if ctx.M % L:
        raise BadLength(f"length {L} does not divide the root order {ctx.M}")


class StridedView:
    """Window ``buf[base], buf[base+stride], ...`` of ``len`` elements."""

    __slots__ = ("buf", "base", "stride", "len")

    def __init__(self, buf: MutableSequence[int], base: int = 0, stride: int = 1,
                 length: int | None = None):
        if stride < 1:
            raise ValueError("stride must be >= 1")
        if length is None:
            length = (len(buf) - base + stride - 1) // stride
        if length < 0 or base < 0 or (length and base + (length - 1) * stride >= len(buf)):
            raise IndexError("view runs past the end of the buffer")
        self.buf = buf
        self.base = base
        self.stride = stride
        self.len = length

    def __len__(self) -> int:
        return self.len

    def _index(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return self.base + i * self.stride

    def __getitem__(self, i: int) -> int:
        return self.buf[self._index(i)]

    def __setitem__(self, i: int, value: int) -> None:
        self.buf[self._index(i)] = value

    def column(self, u: int, L1: int, L2: int) -> "StridedView":
        """Column u of this view read as an L1 x L2 matrix."""
        return StridedView(self.buf, self.base + u * self.stride, self.stride * L2, L1)

    def row(self, u: int, L2: int) -> "StridedView":
        return StridedView(self.buf, self.base + u * L2 * self.stride, self.stride, L2)

    def tolist(self) -> list[int]:
        return [self.buf[self.base + i * self.stride] for i in range(self.len)]

    def __repr__(self) -> str:
        return f"StridedView(base={self.base}, stride={self.stride}, len={self.len})"


def bit_reverse(j: int, ell: int) -> int:
    r = 0
    for _ in range(ell):
        r = (r << 1) | (j & 1)
        j >>= 1
    return r


def dft_naive(ctx: RingCtx, L: int, s: int, a: Sequence[int]) -> list[int]:
    """All L weighted DFT outputs by direct summation (test oracle).

    ``a`` holds the z leading coefficients; the rest are taken as zero.
    Every power is recomputed with ``pow`` so nothing is shared with the
    fast transforms.
    """
    check_length(ctx, L)
    if not 1 <= len(a) <= L:
        raise InvalidParams(f"need 1 <= z <= L, got z = {len(a)}")
    p, M, omega = ctx.p, ctx.M, ctx.omega
    ell = L.bit_length() - 1
    step = M // L
    out = []
    for j in range(L):
        jr = bit_reverse(j, ell)
        acc = 0
        for i, ai in enumerate(a):
            acc += pow(omega, (step * i * jr) % M, p) * ai
        out.append(pow(omega, (s * jr) % M, p) * acc % p)
    return out


# ---------------------------------------------------------------------------
# base cases (L = 2), acting on x[i0], x[i1]

def tft_base2(ctx: RingCtx, s: int, z: int, n: int, x: MutableSequence[int],
              i0: int = 0, i1: int = 1, stats: ButterflyStats | None = None) -> None:
    p = ctx.p
    if n == 2:
        if z == 2:
            a, b = x[i0], x[i1]
            x[i0] = (a + b) % p
            x[i1] = ctx.omega_pow(s) * (a - b) % p
        else:
            x[i1] = ctx.omega_pow(s) * x[i0] % p
    elif z == 2:
        x[i0] = (x[i0] + x[i1]) % p
    if stats is not None:
        stats.base_case_count += 1


def itft_base2(ctx: RingCtx, s: int, z: int, n: int, f: int, x: MutableSequence[int],
               i0: int = 0, i1: int = 1, stats: ButterflyStats | None = None) -> None:
    p = ctx.p
    if n == 2:
        a = x[i0]
        b = ctx.omega_pow(-s) * x[i1]
        x[i0] = (a + b) % p
        x[i1] = (a - b) % p
    elif n == 1:
        a = x[i0]
        if z == 2:
            b = x[i1]
            x[i0] = (2 * a - b) % p
            if f:
                # cross butterfly
                x[i1] = ctx.omega_pow(s) * (a - b) % p
        else:
            x[i0] = 2 * a % p
            if f:
                x[i1] = ctx.omega_pow(s) * a % p
    elif z == 2:
        x[i0] = (x[i0] + x[i1]) * ctx.inv_two % p
    else:
        x[i0] = x[i0] * ctx.inv_two % p
    if stats is not None:
        stats.base_case_count += 1


# ---------------------------------------------------------------------------
# recursion

class _Engine:
    """One transform call: fixed ring, split policy and counter."""

    def __init__(self, ctx: RingCtx, policy: SplitPolicy):
        self.ctx = ctx
        self.p = ctx.p
        self.inv_two = ctx.inv_two
        self.k, self.lo, self.hi = ctx._root_tables()
        self.lo_mask = (1 << self.k) - 1
        self.mask = ctx.M - 1
        self.M = ctx.M
        self.radix2 = policy is SplitPolicy.RADIX2
        self.count = 0

    def split(self, ell):
        if self.radix2:
            return 1, ell - 1
        return ell >> 1, (ell + 1) >> 1

    def tft(self, x, base, stride, ell, s, z, n):
        if ell == 1:
            # tft_base2, inlined
            self.count += 1
            p = self.p
            if n == 2:
                if z == 2:
                    a, b = x[base], x[base + stride]
                    x[base] = (a + b) % p
                    x[base + stride] = self.lo[s & self.lo_mask] * self.hi[s >> self.k] % p * (a - b) % p
                else:
                    x[base + stride] = self.lo[s & self.lo_mask] * self.hi[s >> self.k] % p * x[base] % p
            elif z == 2:
                x[base] = (x[base] + x[base + stride]) % p
            return
        ell1, ell2 = self.split(ell)
        L1, L2 = 1 << ell1, 1 << ell2
        n2, n1 = n & (L2 - 1), n >> ell2
        n1c = n1 + (n2 > 0)
        z2, z1 = z & (L2 - 1), z >> ell2
        z2c = L2 if z1 > 0 else z2
        mask = self.mask
        col_step = self.M >> ell
        col_stride = stride << ell2
        for u in range(z2):
            self.tft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1 + 1, n1c)
        for u in range(z2, z2c):
            self.tft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1, n1c)
        row_s = (s << ell1) & mask
        for u in range(n1):
            self.tft(x, base + u * col_stride, stride, ell2, row_s, z2c, L2)
        if n2:
            self.tft(x, base + n1 * col_stride, stride, ell2, row_s, z2c, n2)

    def itft(self, x, base, stride, ell, s, z, n, f):
        if ell == 1:
            # itft_base2, inlined
            self.count += 1
            p = self.p
            i1 = base + stride
            if n == 2:
                a = x[base]
                t = -s & self.mask
                b = self.lo[t & self.lo_mask] * self.hi[t >> self.k] % p * x[i1]
                x[base] = (a + b) % p
                x[i1] = (a - b) % p
            elif n == 1:
                a = x[base]
                if z == 2:
                    b = x[i1]
                    x[base] = (2 * a - b) % p
                    if f:
                        x[i1] = self.lo[s & self.lo_mask] * self.hi[s >> self.k] % p * (a - b) % p
                else:
                    x[base] = 2 * a % p
                    if f:
                        x[i1] = self.lo[s & self.lo_mask] * self.hi[s >> self.k] % p * a % p
            elif z == 2:
                x[base] = (x[base] + x[i1]) * self.inv_two % p
            else:
                x[base] = x[base] * self.inv_two % p
            return
        ell1, ell2 = self.split(ell)
        L1, L2 = 1 << ell1, 1 << ell2
        n2, n1 = n & (L2 - 1), n >> ell2
        z2, z1 = z & (L2 - 1), z >> ell2
        fc = 1 if n2 + f > 0 else 0
        z2c = L2 if z1 > 0 else z2
        m, mc = min(n2, z2), max(n2, z2)
        mask = self.mask
        col_step = self.M >> ell
        col_stride = stride << ell2
        row_s = (s << ell1) & mask
        for u in range(n1):
            self.itft(x, base + u * col_stride, stride, ell2, row_s, L2, L2, 0)
        for u in range(n2, mc):
            self.itft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1 + 1, n1, fc)
        for u in range(mc, z2c):
            self.itft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1, n1, fc)
        if fc:
            assert n1 < L1, "last row lies outside the matrix"
            self.itft(x, base + n1 * col_stride, stride, ell2, row_s, z2c, n2, f)
        for u in range(m):
            self.itft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1 + 1, n1 + 1, 0)
        for u in range(m, n2):
            self.itft(x, base + u * stride, col_stride, ell1, (s + u * col_step) & mask, z1, n1 + 1, 0)


def _as_view(buf, L: int) -> StridedView:
    view = buf if isinstance(buf, StridedView) else StridedView(buf)
    if view.len != L:
        raise InvalidParams(f"buffer holds {view.len} elements, transform length is {L}")
    return view


def cf_tft(ctx: RingCtx, params: TransformParams, buf, policy: SplitPolicy = SplitPolicy.BALANCED,
           stats: ButterflyStats | None = None) -> None:
    """In-place truncated Fourier transform.

    On entry ``buf[:z]`` holds ``a_0 .. a_{z-1}`` (the remaining cells are
    never read).  On exit ``buf[:n]`` holds ``ahat_0 .. ahat_{n-1}``; other
    cells are left with scratch data.  ``buf`` is a list of length L or a
    ``StridedView`` of length L.
    """
    params.check_tft(ctx)
    view = _as_view(buf, params.L)
    eng = _Engine(ctx, policy)
    eng.tft(view.buf, view.base, view.stride, params.ell, params.s % ctx.M, params.z, params.n)
    if stats is not None:
        stats.base_case_count += eng.count


def cf_itft(ctx: RingCtx, params: TransformParams, buf, policy: SplitPolicy = SplitPolicy.BALANCED,
            stats: ButterflyStats | None = None) -> None:
    """In-place inverse truncated Fourier transform.

    On entry ``buf[:n]`` holds ``ahat_0 .. ahat_{n-1}`` and ``buf[n:z]``
    holds ``L*a_n .. L*a_{z-1}``, with ``a_i = 0`` for ``i >= z``.  On exit
    ``buf[:n]`` holds ``L*a_0 .. L*a_{n-1}`` and, if ``f == 1``,
    ``buf[n] == ahat_n``.
    """
    params.check_itft(ctx)
    view = _as_view(buf, params.L)
    eng = _Engine(ctx, policy)
    eng.itft(view.buf, view.base, view.stride, params.ell, params.s % ctx.M,
             params.z, params.n, params.f)
    if stats is not None:
        stats.base_case_count += eng.count


# ---------------------------------------------------------------------------
# base-case count bounds

def _ell(L: int) -> int:
    return L.bit_length() - 1


def tft_bound_x2(L: int, n: int) -> int:
    """Twice the TFT base-case bound min((n-1)ell/2 + L - 1, L ell/2)."""
    ell = _ell(L)
    return min((n - 1) * ell + 2 * (L - 1), L * ell)


def itft_bound_x2(L: int, n: int, f: int) -> int:
    """Twice the ITFT base-case bound min((n+f-1)ell/2 + L - 1, L ell/2)."""
    ell = _ell(L)
    return min((n + f - 1) * ell + 2 * (L - 1), L * ell)


def tft_bound(L: int, n: int) -> int:
    """Largest integer count allowed by the TFT bound."""
    return tft_bound_x2(L, n) // 2


def itft_bound(L: int, n: int, f: int = 0) -> int:
    return itft_bound_x2(L, n, f) // 2


def full_count(L: int) -> int:
    """Base cases in a full length-L transform, L*ell/2."""
    return L * _ell(L) // 2


def smoothness_ok(L: int, n: int, count: int) -> bool:
    """count / (L ell / 2) <= n/L + 2/ell, evaluated exactly."""
    ell = _ell(L)
    return Fraction(2 * count, L * ell) <= Fraction(n, L) + Fraction(2, ell)

"""Prime field Z/p with a principal 2^m-th root of unity.

Field elements are plain Python ints kept in canonical form ``0 <= a < p``.
Roots of unity are addressed by their exponent: ``omega_pow(e)`` is
``omega**(e mod M)``, so twiddle bookkeeping is integer arithmetic on
exponents.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoRootOfUnity, NotPrime, ZeroInverse

FieldElement = int

# 2^64 - 2^32 + 1, 2-adicity 32
DEFAULT_PRIME = 0xFFFFFFFF00000001
DEFAULT_TWO_ADICITY = 32


@dataclass(frozen=True)
class RingCtx:
    p: int
    m: int
    omega: int
    inv_two: int
    M: int = field(init=False)
    _tables: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "M", 1 << self.m)

    def add(self, a: int, b: int) -> int:
        r = a + b
        return r - self.p if r >= self.p else r

    def sub(self, a: int, b: int) -> int:
        r = a - b
        return r + self.p if r < 0 else r

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return pow(a, e, self.p)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def half(self, a: int) -> int:
        return a * self.inv_two % self.p

    def _root_tables(self) -> tuple[int, list[int], list[int]]:
        # omega^e = hi[e >> k] * lo[e & (2^k - 1)], about 2*sqrt(M) entries
        if not self._tables:
            k = (self.m + 1) // 2
            lo = _powers(self.omega, 1 << k, self.p)
            hi = _powers(pow(self.omega, 1 << k, self.p), 1 << (self.m - k), self.p)
            self._tables.append((k, lo, hi))
        return self._tables[0]

    def omega_pow(self, e: int) -> int:
        """Return omega**(e mod M)."""
        k, lo, hi = self._root_tables()
        e &= self.M - 1
        return lo[e & ((1 << k) - 1)] * hi[e >> k] % self.p

    def root_exponent(self, L: int) -> int:
        """Exponent M/L such that omega_pow(M/L) is the principal L-th root."""
        return self.M // L


def _powers(w: int, count: int, p: int) -> list[int]:
    out = [1] * count
    for i in range(1, count):
        out[i] = out[i - 1] * w % p
    return out


def is_probable_prime(p: int) -> bool:
    # sympy.isprime is deterministic below 2^64 and BPSW above
    from sympy import isprime

    return bool(isprime(p))


def ring_context(p: int = DEFAULT_PRIME, m: int = DEFAULT_TWO_ADICITY) -> RingCtx:
    """Build the context for Z/p with a principal 2^m-th root of unity.

    omega is the first ``g**((p-1)/2^m)`` over g = 2, 3, 4, ... with
    ``omega**(2^(m-1)) == p - 1``.
    """
    if m < 1:
        raise ValueError("two-adicity exponent must be >= 1")
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    M = 1 << m
    if (p - 1) % M:
        raise NoRootOfUnity(f"2^{m} does not divide p - 1 for p = {p}")
    cofactor = (p - 1) // M
    g = 2
    while True:
        omega = pow(g, cofactor, p)
        if pow(omega, M // 2, p) == p - 1:
            break
        g += 1
    return RingCtx(p=p, m=m, omega=omega, inv_two=(p + 1) // 2)


_default_ctx: RingCtx | None = None


def default_ring() -> RingCtx:
    global _default_ctx
    if _default_ctx is None:
        _default_ctx = ring_context(DEFAULT_PRIME, DEFAULT_TWO_ADICITY)
    return _default_ctx

"""Exceptions raised by the ring, transform and multiplication layers."""


class ZeroInverse(ZeroDivisionError):
    pass


class NotPrime(ValueError):
    pass


class NoRootOfUnity(ValueError):
    pass


class BadLength(ValueError):
    """Transform length is not a power of two dividing the root order."""


class InvalidParams(ValueError):
    """(z, n, f) outside the admissible range for a TFT or ITFT call."""


class TooLarge(ValueError):
    pass

"""Cache-friendly truncated FFT and inverse truncated FFT over prime fields."""
from .errors import BadLength, InvalidParams, NoRootOfUnity, NotPrime, TooLarge, ZeroInverse
from .polymul import choose_length, mul, schoolbook
from .ring import DEFAULT_PRIME, RingCtx, default_ring, ring_context
from .transform import (ButterflyStats, SplitPolicy, StridedView, TransformParams, bit_reverse,
                        cf_itft, cf_tft, dft_naive, itft_base2, itft_bound, split, tft_base2,
                        tft_bound)

__all__ = [
    "BadLength", "InvalidParams", "NoRootOfUnity", "NotPrime", "TooLarge", "ZeroInverse",
    "choose_length", "mul", "schoolbook",
    "DEFAULT_PRIME", "RingCtx", "default_ring", "ring_context",
    "ButterflyStats", "SplitPolicy", "StridedView", "TransformParams", "bit_reverse",
    "cf_itft", "cf_tft", "dft_naive", "itft_base2", "itft_bound", "split", "tft_base2",
    "tft_bound",
]

"""Word-packed bit-vectors backed by Python ints.

Python ints are arbitrary precision and store 30-bit digits internally;
``int.bit_count`` is a native popcount, so ``(a & b).bit_count()`` is the
intersection size of two sets without any per-element Python work.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np


def from_indices(indices: Iterable[int]) -> int:
    value = 0
    for i in indices:
        value |= 1 << i
    return value


def from_bool(flags: np.ndarray) -> int:
    """Bit ``i`` is set iff ``flags[i]``."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def to_indices(value: int) -> list[int]:
    out = []
    while value:
        low = value & -value
        out.append(low.bit_length() - 1)
        value ^= low
    return out


def popcount(value: int) -> int:
    return value.bit_count()

"""Conversions between Python-int bitsets and numpy arrays.

Every subset of a group (and every set of lattice nodes) is stored as a
plain ``int`` whose bit ``i`` says whether index ``i`` is a member.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


def from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def to_bool(bits: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def to_indices(bits: int, size: int) -> np.ndarray:
    return np.flatnonzero(to_bool(bits, size))


def iter_bits(bits: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0

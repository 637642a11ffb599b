"""Bit-level transforms of the cipher.

Blocks are numpy ``uint8`` arrays holding 0/1 values. Every transform acts on
the last axis, so a 2-D array is treated as a stack of equal-size blocks and
processed in one vectorised pass (this is how :mod:`rbpbo.codec` drives it).

Phase 1 (neighbour XOR)::

    q[0] = s[0]
    q[i] = s[i-1] ^ s[i]        1 <= i < n

Phase 2 applies the same recurrence to consecutive 2-bit pairs. Both are
GF(2)-linear bijections; their inverses are prefix-XOR scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Literal

import numpy as np

Phase = Literal[1, 2]

DEFAULT_T1 = 3
DEFAULT_T2 = 1


@dataclass(frozen=True)
class IterationParams:
    """How many times each phase is applied to a block."""

    t1: int = DEFAULT_T1
    t2: int = DEFAULT_T2

    def __post_init__(self):
        for name in ("t1", "t2"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or not 0 <= value <= 255:
                raise ValueError(f"{name} must be an integer in 0..255 (was: {value!r})")


def as_block(bits) -> np.ndarray:
    """Coerce ``bits`` to a uint8 0/1 array, validating length and values."""
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim == 0:
        raise ValueError("a block needs at least one axis of bits")
    n = arr.shape[-1]
    if n < 2 or n % 2:
        raise ValueError(f"block length must be even and >= 2 (was: {n})")
    if arr.size and arr.max() > 1:
        raise ValueError("block entries must be 0 or 1")
    return arr


def _pairs(b: np.ndarray) -> np.ndarray:
    if b.shape[-1] % 2:
        raise ValueError(f"pair transform needs an even bit count (was: {b.shape[-1]})")
    return b.reshape(b.shape[:-1] + (b.shape[-1] // 2, 2))


def phase1_forward(b) -> np.ndarray:
    b = as_block(b)
    q = b.copy()
    q[..., 1:] ^= b[..., :-1]
    return q


def phase1_inverse(b) -> np.ndarray:
    b = as_block(b)
    return np.bitwise_xor.accumulate(b, axis=-1)


def phase2_forward(b) -> np.ndarray:
    b = as_block(b)
    p = _pairs(b)
    q = p.copy()
    q[..., 1:, :] ^= p[..., :-1, :]
    return q.reshape(b.shape)


def phase2_inverse(b) -> np.ndarray:
    b = as_block(b)
    return np.bitwise_xor.accumulate(_pairs(b), axis=-2).reshape(b.shape)


_FORWARD = {1: phase1_forward, 2: phase2_forward}


def encrypt_block(b, params: IterationParams = IterationParams()) -> np.ndarray:
    """Apply phase 1 ``params.t1`` times, then phase 2 ``params.t2`` times."""
    out = as_block(b).copy()
    for _ in range(params.t1):
        out = phase1_forward(out)
    for _ in range(params.t2):
        out = phase2_forward(out)
    return out


def decrypt_block(b, params: IterationParams = IterationParams()) -> np.ndarray:
    out = as_block(b).copy()
    for _ in range(params.t2):
        out = phase2_inverse(out)
    for _ in range(params.t1):
        out = phase1_inverse(out)
    return out


def block_cycle_length(b, phase: Phase) -> int:
    """Smallest k >= 1 with forward^k(b) == b."""
    forward = _FORWARD[phase]
    start = as_block(b)
    if start.ndim != 1:
        raise ValueError("block_cycle_length takes a single block")
    cur = forward(start)
    k = 1
    while not np.array_equal(cur, start):
        cur = forward(cur)
        k += 1
    return k


def _first_returns(start: np.ndarray, phase: Phase) -> np.ndarray:
    """Per-row cycle length for a stack of blocks iterated together."""
    forward = _FORWARD[phase]
    start = as_block(start)
    lengths = np.zeros(len(start), dtype=np.int64)
    cur = forward(start)
    k = 1
    while True:
        back = (cur == start).all(axis=1) & (lengths == 0)
        lengths[back] = k
        if lengths.all():
            return lengths
        cur = forward(cur)
        k += 1


def all_blocks(n: int) -> np.ndarray:
    """Every n-bit block as the rows of a (2**n, n) array, in counting order."""
    values = np.arange(1 << n, dtype=np.uint32)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint32)
    return ((values[:, None] >> shifts) & 1).astype(np.uint8)


def basis_cycle_lengths(n: int, phase: Phase) -> np.ndarray:
    """Cycle length of each single-bit basis block of length ``n``."""
    return _first_returns(np.eye(n, dtype=np.uint8), phase)


def transform_order(n: int, phase: Phase) -> int:
    """Smallest k >= 1 such that k forward passes are the identity on n-bit blocks.

    By linearity this is the lcm of the basis-block cycle lengths.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2 (was: {n})")
    return int(reduce(math.lcm, (int(x) for x in basis_cycle_lengths(n, phase)), 1))


def order_closed_form(n: int, phase: Phase) -> int:
    """2^ceil(log2 m) where m is the number of bits (phase 1) or pairs (phase 2)."""
    m = n if phase == 1 else n // 2
    return 1 << (m - 1).bit_length()


def bits_from_bytes(data: bytes) -> np.ndarray:
    """MSB-first bit expansion: bit 0 is the high bit of byte 0."""
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def bytes_from_bits(bits: np.ndarray) -> bytes:
    return np.packbits(np.asarray(bits, dtype=np.uint8)).tobytes()


def cycle_length_distribution(n: int, phase: Phase) -> dict[int, int]:
    """Histogram of cycle lengths over all 2**n blocks of length n (small n only)."""
    if n > 20:
        raise ValueError(f"exhaustive enumeration limited to n <= 20 (was: {n})")
    ks, counts = np.unique(_first_returns(all_blocks(n), phase), return_counts=True)
    return {int(a): int(b) for a, b in zip(ks, counts)}

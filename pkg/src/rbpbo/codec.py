"""Whole-stream encryption driven by a session key.

Bytes map to bits MSB-first, the bit stream is cut into the blocks listed by
:func:`plan_segments`, and each block goes through the bit transforms. The
ciphertext has no header, so its length always equals the plaintext length.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from rbpbo.bitcore import (
    IterationParams,
    bits_from_bytes,
    bytes_from_bits,
    decrypt_block,
    encrypt_block,
)
from rbpbo.errors import LengthMismatch
from rbpbo.keying import RANKS, SessionKey, block_size, derive_key, pack_key, parse_key

KEY_SUFFIX = ".rbk"


@dataclass(frozen=True)
class SegmentPlan:
    blocks: tuple[int, ...]
    total_bits: int

    def groups(self) -> list[tuple[int, int]]:
        """Run-length form: ``(block_size, count)`` in plan order."""
        out: list[tuple[int, int]] = []
        for size in self.blocks:
            if out and out[-1][0] == size:
                out[-1] = (size, out[-1][1] + 1)
            else:
                out.append((size, 1))
        return out


def plan_segments(key: SessionKey) -> SegmentPlan:
    blocks: list[int] = []
    for rank, count in zip(RANKS, key.counts):
        blocks.extend([block_size(rank)] * count)
    return SegmentPlan(tuple(blocks), sum(blocks))


def _run(data: bytes, key: SessionKey, block_fn) -> bytes:
    data = bytes(data)
    bits = bits_from_bytes(data)
    if bits.size != key.total_bits:
        raise LengthMismatch(
            f"input is {bits.size} bits but the key plans {key.total_bits} bits")
    out = np.empty_like(bits)
    pos = 0
    for rank, count in zip(RANKS, key.counts):
        if not count:
            continue
        size = block_size(rank)
        span = count * size
        # blocks of one segment are contiguous and equal-sized: transform as a stack
        stack = bits[pos:pos + span].reshape(count, size)
        out[pos:pos + span] = block_fn(stack, key.params).reshape(-1)
        pos += span
    return bytes_from_bits(out)


def encrypt_stream(plaintext: bytes, key: SessionKey) -> bytes:
    return _run(plaintext, key, encrypt_block)


def decrypt_stream(ciphertext: bytes, key: SessionKey) -> bytes:
    return _run(ciphertext, key, decrypt_block)


@dataclass(frozen=True)
class FileSummary:
    source_bytes: int
    output_bytes: int
    seconds: float

    def line(self) -> str:
        return f"{self.source_bytes} {self.output_bytes} {self.seconds:.6f}"


def encrypt_file(in_path, key_out_path, out_path,
                 params: IterationParams = IterationParams()) -> FileSummary:
    """Encrypt ``in_path``; write the 17-byte key and the same-size ciphertext.

    ``seconds`` covers the transform only, not file I/O.
    """
    in_path = Path(in_path)
    size = os.stat(in_path).st_size
    key = derive_key(size * 8, params)
    plaintext = in_path.read_bytes()
    start = time.perf_counter()
    ciphertext = encrypt_stream(plaintext, key)
    elapsed = time.perf_counter() - start
    Path(key_out_path).write_bytes(pack_key(key))
    Path(out_path).write_bytes(ciphertext)
    return FileSummary(len(plaintext), len(ciphertext), elapsed)


def read_key_file(path) -> SessionKey:
    return parse_key(Path(path).read_bytes())


def decrypt_file(in_path, key, out_path) -> FileSummary:
    """Decrypt ``in_path`` with ``key`` (a key-file path or a :class:`SessionKey`)."""
    if not isinstance(key, SessionKey):
        key = read_key_file(key)
    ciphertext = Path(in_path).read_bytes()
    start = time.perf_counter()
    plaintext = decrypt_stream(ciphertext, key)
    elapsed = time.perf_counter() - start
    Path(out_path).write_bytes(plaintext)
    return FileSummary(len(ciphertext), len(plaintext), elapsed)

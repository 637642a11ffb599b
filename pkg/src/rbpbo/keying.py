"""Twelve-segment session key: derivation, capacity and the 17-byte record.

Segment ``R`` (1..12) holds blocks of ``2**(15-R)`` bits and may contain up to
``2**(15-R)`` of them. The count for segment R is stored in a ``16-R`` bit
field; the twelve fields total 114 bits.

Record layout (17 bytes)::

    bytes 0..14   c_1 (15 bits) | c_2 (14 bits) | ... | c_12 (4 bits) | 6 zero bits
                  packed most-significant-bit first
    byte  15      t1
    byte  16      t2
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rbpbo.bitcore import IterationParams
from rbpbo.errors import CapacityExceeded, FieldOverflow, MalformedKey

SEGMENTS = 12
RANKS = tuple(range(1, SEGMENTS + 1))
KEY_BITS = 114
RECORD_SIZE = 17
_PAD_BITS = 15 * 8 - KEY_BITS

# capacity figure quoted for this key format, in (decimal) megabytes
QUOTED_CAPACITY_MB = 42.79


def block_size(rank: int) -> int:
    return 1 << (15 - rank)


def max_blocks(rank: int) -> int:
    return 1 << (15 - rank)


def field_width(rank: int) -> int:
    return 16 - rank


@dataclass(frozen=True)
class SessionKey:
    counts: tuple[int, ...] = (0,) * SEGMENTS
    params: IterationParams = field(default_factory=IterationParams)

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != SEGMENTS:
            raise ValueError(f"expected {SEGMENTS} segment counts, got {len(counts)}")
        for rank, c in zip(RANKS, counts):
            if c < 0 or c > max_blocks(rank):
                raise FieldOverflow(
                    f"segment {rank}: count {c} outside 0..{max_blocks(rank)}")
        object.__setattr__(self, "counts", counts)

    @property
    def total_bits(self) -> int:
        return sum(c * block_size(r) for r, c in zip(RANKS, self.counts))

    def hex(self) -> str:
        return pack_key(self).hex()

    @classmethod
    def fromhex(cls, text: str) -> "SessionKey":
        try:
            record = bytes.fromhex(text.strip())
        except ValueError as exc:
            raise MalformedKey(f"invalid hex key: {exc}") from None
        return parse_key(record)


@dataclass(frozen=True)
class CapacityReport:
    max_bits: int
    max_bytes: int

    @property
    def max_mib(self) -> float:
        return self.max_bytes / 2**20

    @property
    def note(self) -> str:
        return (
            f"capacity {self.max_bytes:,} bytes ({self.max_bytes / 1e6:.2f} MB, "
            f"{self.max_mib:.2f} MiB); differs from the quoted "
            f"{QUOTED_CAPACITY_MB} MB figure, which matches neither unit")


def capacity() -> CapacityReport:
    bits = sum(max_blocks(r) * block_size(r) for r in RANKS)
    return CapacityReport(max_bits=bits, max_bytes=bits // 8)


def derive_key(stream_bits: int, params: IterationParams = IterationParams()) -> SessionKey:
    """Cover ``stream_bits`` greedily, largest blocks first."""
    if stream_bits < 0 or stream_bits % 8:
        raise ValueError(f"stream length must be a non-negative multiple of 8 bits (was: {stream_bits})")
    remaining = stream_bits
    counts = []
    for rank in RANKS:
        take = min(max_blocks(rank), remaining // block_size(rank))
        counts.append(take)
        remaining -= take * block_size(rank)
    if remaining:
        raise CapacityExceeded(
            f"stream of {stream_bits} bits exceeds key capacity of {capacity().max_bits} bits")
    return SessionKey(tuple(counts), params)


def pack_key(key: SessionKey) -> bytes:
    acc = 0
    for rank, c in zip(RANKS, key.counts):
        if c > max_blocks(rank):
            raise FieldOverflow(f"segment {rank}: count {c} exceeds {max_blocks(rank)}")
        acc = (acc << field_width(rank)) | c
    acc <<= _PAD_BITS
    return acc.to_bytes(15, "big") + bytes((key.params.t1, key.params.t2))


def parse_key(record: bytes) -> SessionKey:
    record = bytes(record)
    if len(record) != RECORD_SIZE:
        raise MalformedKey(f"key record must be {RECORD_SIZE} bytes (was: {len(record)})")
    acc = int.from_bytes(record[:15], "big")
    if acc & ((1 << _PAD_BITS) - 1):
        raise MalformedKey("nonzero padding bits in key record")
    acc >>= _PAD_BITS
    counts = []
    for rank in reversed(RANKS):
        width = field_width(rank)
        counts.append(acc & ((1 << width) - 1))
        acc >>= width
    counts.reverse()
    return SessionKey(tuple(counts), IterationParams(record[15], record[16]))

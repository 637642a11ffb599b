"""Recursive bitwise / pairs-of-bits block cipher with a 114-bit segment key."""

from rbpbo.bitcore import (
    IterationParams,
    block_cycle_length,
    decrypt_block,
    encrypt_block,
    phase1_forward,
    phase1_inverse,
    phase2_forward,
    phase2_inverse,
    transform_order,
)
from rbpbo.codec import (
    SegmentPlan,
    decrypt_file,
    decrypt_stream,
    encrypt_file,
    encrypt_stream,
    plan_segments,
)
from rbpbo.errors import (
    CapacityExceeded,
    DegenerateInput,
    FieldOverflow,
    LengthMismatch,
    MalformedKey,
    RBPBOError,
    TotalsMismatch,
)
from rbpbo.keying import SessionKey, capacity, derive_key, pack_key, parse_key

__version__ = "0.1.0"

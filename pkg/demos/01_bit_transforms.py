"""Walk through the two bit transforms on a single 8-bit block."""

import numpy as np

from rbpbo.bitcore import (
    IterationParams,
    block_cycle_length,
    cycle_length_distribution,
    decrypt_block,
    encrypt_block,
    phase1_forward,
    phase2_forward,
    transform_order,
)

block = np.array([1, 0, 1, 1, 0, 0, 1, 0], dtype=np.uint8)
print("block          ", block)

# phase 1: every bit is XORed with its left neighbour, bit 0 passes through
step = block
for k in range(1, 9):
    step = phase1_forward(step)
    print(f"phase1 x{k}      ", step)
# after 8 passes we are back where we started: 8 is the order for n=8
print("cycle length of this block:", block_cycle_length(block, 1))

# phase 2 does the same on 2-bit pairs: (10)(11)(00)(10) -> (10)(01)(11)(10)
print("phase2          ", phase2_forward(block))

# the cipher picks an intermediate: 3 phase-1 passes, then 1 phase-2 pass
p = IterationParams(3, 1)
ct = encrypt_block(block, p)
print("encrypted       ", ct)
print("decrypted       ", decrypt_block(ct, p))

# orders grow as the next power of two of the block (or pair) count
for n in (4, 8, 16, 32, 64, 128, 256):
    print(f"n={n:4d}  order phase1={transform_order(n, 1):4d}  phase2={transform_order(n, 2):4d}")

# every block's cycle divides the order
print("n=8 cycle lengths over all 256 blocks:", cycle_length_distribution(8, 1))

# the whole thing is linear: encrypt(a ^ b) == encrypt(a) ^ encrypt(b)
rng = np.random.default_rng(0)
a, b = rng.integers(0, 2, (2, 64), dtype=np.uint8)
print("linear:", np.array_equal(encrypt_block(a ^ b, p), encrypt_block(a, p) ^ encrypt_block(b, p)))

"""Session keys: how a stream length turns into twelve block counts."""

from rbpbo.keying import RANKS, block_size, capacity, derive_key, pack_key, parse_key

# a 30848-byte file is 246784 bits = 15 blocks of 16384 + one of 1024
key = derive_key(30848 * 8)
for rank, count in zip(RANKS, key.counts):
    if count:
        print(f"segment {rank:2d}: {count} x {block_size(rank)} bits")

record = pack_key(key)
print("17-byte key record:", record.hex())
print("parses back:", parse_key(record) == key)

# the largest stream the format can describe
cap = capacity()
print(cap.max_bits, "bits")
print(cap.note)

# smallest lengths use the small segments; 8 bits is the granularity
for nbytes in (1, 3, 7, 8, 100):
    print(nbytes, "bytes ->", derive_key(nbytes * 8).counts)

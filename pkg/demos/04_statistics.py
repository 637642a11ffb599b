"""Byte-frequency and chi-square comparison of a text file and its ciphertext."""

import random

from rbpbo.analysis import byte_histogram, chi_square, keyspace_table, keyspace_text
from rbpbo.codec import encrypt_stream
from rbpbo.keying import derive_key

rng = random.Random(1)
words = ["int", "return", "if", "else", "{", "}", ";", "buffer", "=", "0", "i", "for"]
text = " ".join(rng.choice(words) for _ in range(30000)).encode()

cipher = encrypt_stream(text, derive_key(len(text) * 8))
src, enc = byte_histogram(text), byte_histogram(cipher)
print("distinct bytes: source", (src.counts > 0).sum(), "cipher", (enc.counts > 0).sum())

report = chi_square(src, enc)
print(report.line(), f"(critical value {report.critical_value:.2f}, {report.skipped} skipped)")

# the cipher is GF(2)-linear, so a large chi-square does not mean it is strong:
# one known plaintext/ciphertext pair of a block size reveals the whole map.

print(keyspace_text(keyspace_table([32, 56, 128, 114, 168])))

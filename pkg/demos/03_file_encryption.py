"""Encrypt and decrypt a file; ciphertext and plaintext have the same size."""

import tempfile
from pathlib import Path

from rbpbo.analysis import timing_csv, timing_run
from rbpbo.bitcore import IterationParams
from rbpbo.codec import decrypt_file, encrypt_file

work = Path(tempfile.mkdtemp())
src = work / "viewprev.cpp"
src.write_bytes((b"// sample source line with some code; i = i + 1;\n" * 700)[:30848])

enc = encrypt_file(src, work / "viewprev.rbk", work / "viewprev.enc", IterationParams(3, 1))
print("encrypt:", enc.line())
dec = decrypt_file(work / "viewprev.enc", work / "viewprev.rbk", work / "viewprev.out")
print("decrypt:", dec.line())
print("identical:", (work / "viewprev.out").read_bytes() == src.read_bytes())

# timing table over a few sizes (absolute times depend on the machine)
paths = []
for kib in (64, 256, 1024, 4096):
    p = work / f"{kib}k.bin"
    p.write_bytes(bytes(range(256)) * (kib * 4))
    paths.append(p)
print(timing_csv(timing_run(paths)))

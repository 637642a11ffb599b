import io
import os
import subprocess
import sys

import pytest

from rbpbo.cli import main
from rbpbo.keying import SessionKey, capacity, derive_key, pack_key


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def sample(tmp_path):
    p = tmp_path / "sample.txt"
    p.write_bytes(b"int main(void) { return 0; }\n" * 400)
    return p


def test_encrypt_decrypt_round_trip(tmp_path, sample):
    ct, key, back = tmp_path / "ct", tmp_path / "k.rbk", tmp_path / "back"
    code, out, err = run("encrypt", sample, ct, "--key-out", key)
    assert code == 0
    size = sample.stat().st_size
    src_bytes, cipher_bytes, seconds = out.split()
    assert (int(src_bytes), int(cipher_bytes)) == (size, size) and float(seconds) >= 0
    code, out, _ = run("decrypt", ct, back, "--key", key)
    assert code == 0
    assert back.read_bytes() == sample.read_bytes()


def test_encrypt_default_key_path_and_hex(tmp_path, sample):
    ct = tmp_path / "ct"
    assert run("encrypt", sample, ct, "--t1", 5, "--t2", 2)[0] == 0
    key = SessionKey.fromhex((tmp_path / "ct.rbk").read_bytes().hex())
    assert (key.params.t1, key.params.t2) == (5, 2)
    code, _, _ = run("decrypt", ct, tmp_path / "back", "--key-hex", key.hex())
    assert code == 0 and (tmp_path / "back").read_bytes() == sample.read_bytes()


def test_encrypt_errors(tmp_path):
    assert run("encrypt", tmp_path / "missing", tmp_path / "ct")[0] == 3
    big = tmp_path / "big"
    with open(big, "wb") as fh:
        fh.truncate(capacity().max_bytes + 1)
    code, _, err = run("encrypt", big, tmp_path / "ct")
    assert code == 2 and "CapacityExceeded" in err
    assert run("encrypt", big, tmp_path / "ct", "--t1", 300)[0] == 1


def test_decrypt_errors(tmp_path, sample):
    ct, key = tmp_path / "ct", tmp_path / "k.rbk"
    run("encrypt", sample, ct, "--key-out", key)
    bad = tmp_path / "bad.rbk"
    bad.write_bytes(key.read_bytes()[:10])
    assert run("decrypt", ct, tmp_path / "o", "--key", bad)[0] == 2
    short = tmp_path / "short"
    short.write_bytes(ct.read_bytes()[:-3])
    code, _, err = run("decrypt", short, tmp_path / "o", "--key", key)
    assert code == 2 and "LengthMismatch" in err
    assert run("decrypt", ct, tmp_path / "o")[0] == 1


def test_keyinfo(tmp_path):
    code, out, err = run("keyinfo", "--key-hex", "00" * 17)
    assert code == 0
    lines = out.splitlines()
    assert lines[1:13] == [f"{r} {2 ** (15 - r)} 0" for r in range(1, 13)]
    assert "total_bits 0" in lines
    assert "capacity_bytes 44739240" in lines
    assert "42.79" in err

    path = tmp_path / "k.rbk"
    path.write_bytes(pack_key(derive_key(246784)))
    code, out, _ = run("keyinfo", path)
    assert code == 0 and "total_bits 246784" in out
    assert "1 16384 15" in out and "5 1024 1" in out

    assert run("keyinfo", "--key-hex", "not-hex")[0] == 2


def test_cycle():
    code, out, _ = run("cycle", "--n", 8, "--phase", 1)
    assert code == 0 and out.strip() == "order 8"
    code, out, _ = run("cycle", "--n", 4, "--exhaustive")
    lengths = [int(l.split()[1]) for l in out.splitlines() if l.startswith("cycle")]
    assert lengths and all(4 % k == 0 for k in lengths)
    assert run("cycle", "--n", 7, "--phase", 2)[0] == 1
    assert run("cycle", "--n", 32, "--exhaustive")[0] == 1


def test_stats(tmp_path, sample):
    code, out, err = run("stats", sample, sample)
    assert code == 0
    assert len(out.splitlines()) == 257
    assert "chi2=0 " in err
    ct = tmp_path / "ct"
    run("encrypt", sample, ct)
    code, out, err = run("stats", sample, ct)
    assert code == 0 and "significant_1pct=True" in err
    other = tmp_path / "other"
    other.write_bytes(b"xy")
    assert run("stats", sample, other)[0] == 2
    assert run("stats", sample, tmp_path / "missing")[0] == 3


def test_keyspace():
    code, out, _ = run("keyspace", "--bits", 32, 56, 114)
    assert code == 0
    assert "35.79 minutes" in out and "1142 years" in out
    assert "3.293e+20 years" in out and "note: 114-bit" in out
    assert run("keyspace", "--bits", 0)[0] == 1


def test_usage_error_exit_code():
    assert run()[0] == 1
    assert run("bogus")[0] == 1


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "rbpbo", "cycle", "--n", "8", "--phase", "2"],
                         capture_output=True, text=True, env={**os.environ})
    assert res.returncode == 0 and res.stdout.strip() == "order 4"

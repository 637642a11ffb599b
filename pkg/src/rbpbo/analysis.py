"""Evaluation instruments: byte histograms, chi-square homogeneity,
encryption timing runs and the brute-force keyspace table."""

from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy import stats

from rbpbo.bitcore import IterationParams
from rbpbo.codec import decrypt_stream, encrypt_stream
from rbpbo.errors import DegenerateInput, RBPBOError, TotalsMismatch
from rbpbo.keying import derive_key

SIGNIFICANCE = 0.01
SECONDS_PER_YEAR = 3.1536e7


@dataclass(frozen=True)
class Histogram256:
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def byte_histogram(data: bytes) -> Histogram256:
    counts = np.bincount(np.frombuffer(bytes(data), dtype=np.uint8), minlength=256)
    return Histogram256(counts.astype(np.int64))


@dataclass(frozen=True)
class ChiSquareReport:
    statistic: float
    df: int
    skipped: int
    critical_value: float
    significant_1pct: bool

    def line(self) -> str:
        return f"chi2={self.statistic:.6g} df={self.df} significant_1pct={self.significant_1pct}"


def critical_value(df: int, alpha: float = SIGNIFICANCE) -> float:
    """Upper-tail chi-square quantile."""
    return float(stats.chi2.isf(alpha, df))


def chi_square(source: Histogram256, cipher: Histogram256) -> ChiSquareReport:
    """Homogeneity of ``cipher`` against ``source``.

    The source counts are the expected frequencies; byte values absent from
    the source are skipped and counted in ``skipped``.
    """
    if source.total != cipher.total:
        raise TotalsMismatch(f"histogram totals differ: {source.total} vs {cipher.total}")
    used = source.counts > 0
    df = int(used.sum()) - 1
    if df < 1:
        raise DegenerateInput(f"need at least two byte values in the source (df={df})")
    expected = source.counts[used].astype(np.float64)
    observed = cipher.counts[used].astype(np.float64)
    statistic = float(np.sum((observed - expected) ** 2 / expected))
    crit = critical_value(df)
    return ChiSquareReport(statistic, df, 256 - int(used.sum()), crit, statistic > crit)


def freq_csv(source_path, cipher_path) -> str:
    src = byte_histogram(Path(source_path).read_bytes())
    enc = byte_histogram(Path(cipher_path).read_bytes())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["byte", "source_count", "cipher_count"])
    for b in range(256):
        writer.writerow([b, int(src.counts[b]), int(enc.counts[b])])
    return buf.getvalue()


@dataclass(frozen=True)
class TimingRow:
    path: str
    size: int
    enc_seconds: float
    cipher_size: int
    dec_seconds: float
    roundtrip_ok: bool
    error: str | None = None


def _time_one(path: Path, params: IterationParams) -> TimingRow:
    data = path.read_bytes()
    key = derive_key(len(data) * 8, params)
    t0 = time.perf_counter()
    cipher = encrypt_stream(data, key)
    t1 = time.perf_counter()
    plain = decrypt_stream(cipher, key)
    t2 = time.perf_counter()
    ok = hashlib.sha256(plain).digest() == hashlib.sha256(data).digest()
    return TimingRow(str(path), len(data), t1 - t0, len(cipher), t2 - t1, ok)


def timing_run(paths, params: IterationParams = IterationParams()) -> list[TimingRow]:
    """Encrypt and decrypt each file in turn, timing the transforms only.

    A file that fails (unreadable, over capacity) yields a row carrying the
    error; the remaining files are still measured.
    """
    rows = []
    for p in paths:
        p = Path(p)
        try:
            rows.append(_time_one(p, params))
        except (OSError, RBPBOError) as exc:
            rows.append(TimingRow(str(p), -1, float("nan"), -1, float("nan"), False,
                                  f"{type(exc).__name__}: {exc}"))
    return sorted(rows, key=lambda r: r.size)


def timing_csv(rows: list[TimingRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["path", "size", "enc_seconds", "cipher_size", "dec_seconds", "roundtrip_ok"])
    for r in rows:
        writer.writerow([r.path, r.size, f"{r.enc_seconds:.6f}", r.cipher_size,
                         f"{r.dec_seconds:.6f}", r.roundtrip_ok])
    return buf.getvalue()


def linear_fit(sizes, seconds) -> tuple[float, float, float]:
    """Least-squares ``seconds = slope * size + intercept``; returns (slope, intercept, r2)."""
    res = stats.linregress(np.asarray(sizes, float), np.asarray(seconds, float))
    return float(res.slope), float(res.intercept), float(res.rvalue ** 2)


# --- brute-force keyspace table -------------------------------------------

_UNITS = [
    ("years", SECONDS_PER_YEAR),
    ("days", 86400.0),
    ("hours", 3600.0),
    ("minutes", 60.0),
    ("seconds", 1.0),
    ("milliseconds", 1e-3),
    ("microseconds", 1e-6),
]

# tabulated values that disagree with 2**(bits-1) microseconds
KNOWN_DISCREPANCIES = {
    114: "often tabulated as 3.33e24 years at 1 decryption/us, "
         "which is inconsistent with the 128-bit row by a factor of ~2^14",
}


def to_unit(seconds: float) -> tuple[float, str]:
    """Express ``seconds`` in the largest unit giving a value >= 1."""
    for name, scale in _UNITS:
        if seconds >= scale:
            return seconds / scale, name
    return seconds / 1e-6, "microseconds"


def format_duration(seconds: float) -> str:
    value, unit = to_unit(seconds)
    return f"{value:.4g} {unit}"


@dataclass(frozen=True)
class KeyspaceRow:
    key_bits: int
    alternate_keys: int
    seconds_one_per_us: float
    seconds_fast: float
    rate_fast: float
    note: str = ""

    @property
    def time_one_per_us(self) -> str:
        return format_duration(self.seconds_one_per_us)

    @property
    def time_1e6_per_us(self) -> str:
        return format_duration(self.seconds_fast)


def keyspace_table(bit_sizes, rate_fast: float = 1e6) -> list[KeyspaceRow]:
    """Expected exhaustive-search time (half the keyspace) per key width."""
    rows = []
    for bits in bit_sizes:
        bits = int(bits)
        if not 1 <= bits <= 512:
            raise ValueError(f"key width must be in 1..512 (was: {bits})")
        half_us = 1 << (bits - 1)
        slow = float(Fraction(half_us, 10**6))
        fast = float(Fraction(half_us, 10**6) / Fraction(rate_fast))
        rows.append(KeyspaceRow(bits, 1 << bits, slow, fast, rate_fast,
                                KNOWN_DISCREPANCIES.get(bits, "")))
    return rows


def keyspace_text(rows: list[KeyspaceRow]) -> str:
    lines = ["bits\talternate_keys\ttime@1/us\ttime@%g/us" % (rows[0].rate_fast if rows else 1e6)]
    for r in rows:
        lines.append(f"{r.key_bits}\t2^{r.key_bits}={float(r.alternate_keys):.3g}\t"
                     f"{r.time_one_per_us}\t{r.time_1e6_per_us}")
    for r in rows:
        if r.note:
            lines.append(f"note: {r.key_bits}-bit row {r.note}")
    return "\n".join(lines) + "\n"

"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error (bad key, length or
capacity), 3 I/O error. Machine-readable output goes to stdout; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from rbpbo import analysis, bitcore, codec, keying
from rbpbo.bitcore import IterationParams
from rbpbo.errors import DataError

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _byte(text: str) -> int:
    value = int(text)
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(f"must be in 0..255 (was: {value})")
    return value


def _load_key(args) -> keying.SessionKey:
    if args.key_hex is not None:
        return keying.SessionKey.fromhex(args.key_hex)
    if args.key is None:
        raise UsageError("a key file or --key-hex is required")
    return codec.read_key_file(args.key)


def cmd_encrypt(args, out, err) -> int:
    key_out = args.key_out or args.output + codec.KEY_SUFFIX
    summary = codec.encrypt_file(args.input, key_out, args.output,
                                 IterationParams(args.t1, args.t2))
    print(summary.line(), file=out)
    print(f"key written to {key_out}", file=err)
    return EXIT_OK


def cmd_decrypt(args, out, err) -> int:
    summary = codec.decrypt_file(args.input, _load_key(args), args.output)
    print(summary.line(), file=out)
    return EXIT_OK


def cmd_keyinfo(args, out, err) -> int:
    key = _load_key(args)
    print("R size count", file=out)
    for rank, count in zip(keying.RANKS, key.counts):
        print(f"{rank} {keying.block_size(rank)} {count}", file=out)
    print(f"total_bits {key.total_bits}", file=out)
    print(f"t1 {key.params.t1}", file=out)
    print(f"t2 {key.params.t2}", file=out)
    print(f"hex {key.hex()}", file=out)
    cap = keying.capacity()
    print(f"capacity_bytes {cap.max_bytes}", file=out)
    print(f"note: {cap.note}", file=err)
    return EXIT_OK


def cmd_cycle(args, out, err) -> int:
    n, phase = args.n, args.phase
    if n < 2 or n % 2:
        raise UsageError(f"--n must be even and >= 2 (was: {n})")
    if args.exhaustive and n > 16:
        raise UsageError("--exhaustive is limited to n <= 16")
    print(f"order {bitcore.transform_order(n, phase)}", file=out)
    if args.exhaustive:
        for length, count in bitcore.cycle_length_distribution(n, phase).items():
            print(f"cycle {length} {count}", file=out)
    return EXIT_OK


def cmd_stats(args, out, err) -> int:
    with open(args.source, "rb") as fh:
        src = analysis.byte_histogram(fh.read())
    with open(args.cipher, "rb") as fh:
        enc = analysis.byte_histogram(fh.read())
    report = analysis.chi_square(src, enc)
    out.write(analysis.freq_csv(args.source, args.cipher))
    print(report.line(), file=err)
    return EXIT_OK


def cmd_keyspace(args, out, err) -> int:
    rows = analysis.keyspace_table(args.bits, args.rate)
    out.write(analysis.keyspace_text(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rbpbo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encrypt", help="encrypt a file and write its key")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--key-out", help=f"key file path (default: OUTPUT{codec.KEY_SUFFIX})")
    p.add_argument("--t1", type=_byte, default=bitcore.DEFAULT_T1)
    p.add_argument("--t2", type=_byte, default=bitcore.DEFAULT_T2)
    p.set_defaults(func=cmd_encrypt)

    for name, func in (("decrypt", cmd_decrypt), ("keyinfo", cmd_keyinfo)):
        p = sub.add_parser(name)
        if name == "decrypt":
            p.add_argument("input")
            p.add_argument("output")
            p.add_argument("--key", required=False)
        else:
            p.add_argument("key", nargs="?")
        p.add_argument("--key-hex")
        p.set_defaults(func=func)

    p = sub.add_parser("cycle", help="order of the phase transforms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--phase", type=int, choices=(1, 2), default=1)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("stats", help="byte frequencies and chi-square")
    p.add_argument("source")
    p.add_argument("cipher")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("keyspace", help="brute-force search time table")
    p.add_argument("--bits", type=int, nargs="+", default=[32, 56, 128, 114, 168])
    p.add_argument("--rate", type=float, default=1e6, help="decryptions per microsecond")
    p.set_defaults(func=cmd_keyspace)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except (UsageError, ValueError) as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except DataError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_DATA
    except OSError as exc:
        print(f"I/O error: {exc}", file=err)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

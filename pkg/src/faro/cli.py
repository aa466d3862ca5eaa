"""Command-line front end: shuffle record files, inspect cycles, benchmark.

Exit codes: 0 success, 2 argument or validation error, 3 I/O failure,
4 verification mismatch.
"""

import argparse
import math
import os
import sys
import tempfile
import time
from pathlib import Path

from . import _fastpath
from .kway import MAX_K, k_shuffle, k_unshuffle
from .oracle import oracle_shuffle
from .permcore import (
    IN_SHUFFLE,
    ShuffleKind,
    cycle_decomposition,
    kway_kind,
    permutation_order,
    validate_order,
)
from .shuffle import (
    Instrumentation,
    RecordBuffer,
    in_shuffle,
    out_shuffle,
    un_out_shuffle,
    un_shuffle,
)

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VERIFY = 4


def parse_kind(text: str) -> ShuffleKind:
    if text == "in":
        return IN_SHUFFLE
    if text == "out":
        return ShuffleKind("out")
    if text.startswith("k:"):
        try:
            return kway_kind(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError(f"kind must be 'in', 'out' or 'k:<k>', got {text!r}")


def _apply_kind(buf, kind: ShuffleKind, inverse: bool, instr=None) -> None:
    if kind.family == "in":
        (un_shuffle if inverse else in_shuffle)(buf, instr)
    elif kind.family == "out":
        (un_out_shuffle if inverse else out_shuffle)(buf, instr)
    else:
        (k_unshuffle if inverse else k_shuffle)(buf, kind.k, instr)


def _fail(code: int, message: str) -> int:
    print(f"faro: {message}", file=sys.stderr)
    return code


def cmd_apply(path: Path, record_size: int, kind: ShuffleKind, inverse: bool, verify: bool) -> int:
    if record_size < 1:
        return _fail(EXIT_USAGE, f"record size must be >= 1, got {record_size}")
    try:
        data = path.read_bytes()
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read {path}: {exc}")
    if len(data) % record_size != 0:
        return _fail(
            EXIT_USAGE,
            f"{path} holds {len(data)} bytes, not a whole number of "
            f"{record_size}-byte records",
        )
    count = len(data) // record_size
    buf = RecordBuffer(bytearray(data), record_size)
    try:
        validate_order(kind, count)
        _apply_kind(buf, kind, inverse)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))

    if verify:
        original = [data[i * record_size : (i + 1) * record_size] for i in range(count)]
        result = [buf[i] for i in range(count)]
        # forward: result must equal the oracle's shuffle of the original;
        # inverse: shuffling the result with the oracle must give it back
        if inverse:
            ok = oracle_shuffle(result, kind) == original
        else:
            ok = oracle_shuffle(original, kind) == result
        if not ok:
            return _fail(EXIT_VERIFY, "verification mismatch, file left untouched")

    # atomic commit: temp file next to the target, then rename over it
    try:
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(buf.data)
            os.replace(tmp_name, path)
        except BaseException:
            os.unlink(tmp_name)
            raise
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {path}: {exc}")
    return EXIT_OK


def cmd_cycles(order: int, kind: ShuffleKind) -> int:
    try:
        decomposition = cycle_decomposition(kind, order)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    for cycle in decomposition.cycles:
        print(f"({' '.join(map(str, cycle))}) len={len(cycle)}")
    lengths = [len(c) for c in decomposition.cycles]
    print(f"cycles={len(lengths)} order={math.lcm(*lengths) if lengths else 1}")
    return EXIT_OK


def cmd_order(order: int) -> int:
    try:
        print(permutation_order(IN_SHUFFLE, order))
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    return EXIT_OK


def _fresh_buffer(size: int):
    if _np is not None:
        return _np.arange(size, dtype=_np.int64)
    return list(range(size))


def cmd_bench(min_size: int, max_size: int, factor: float) -> int:
    if not 2 <= min_size <= max_size:
        return _fail(EXIT_USAGE, f"need 2 <= min <= max, got {min_size}..{max_size}")
    if factor <= 1:
        return _fail(EXIT_USAGE, f"growth factor must be > 1, got {factor}")
    _fastpath.warm_up()
    print("size,nanos,moves,aux_words")
    s = min_size
    last_emitted = None
    while s <= max_size:
        size = max(2, (s + 1) // 2 * 2)  # nearest even, ties rounded up
        if size != last_emitted:
            buf = _fresh_buffer(size)
            instr = Instrumentation()
            started = time.perf_counter_ns()
            in_shuffle(buf, instr)
            elapsed = time.perf_counter_ns() - started
            print(f"{size},{elapsed},{instr.moves},{instr.aux_words_peak}")
            last_emitted = size
        s = math.ceil(s * factor)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faro",
        description="In-place perfect (faro) shuffles for arrays and record files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    apply_p = sub.add_parser("apply", help="permute a file of fixed-size records in place")
    apply_p.add_argument("--kind", type=parse_kind, default=IN_SHUFFLE,
                         help="shuffle family: in, out, or k:<k> (default: in)")
    apply_p.add_argument("--inverse", action="store_true", help="apply the inverse permutation")
    apply_p.add_argument("--verify", action="store_true",
                         help="check the result against the reference shuffle before committing")
    apply_p.add_argument("--record-size", type=int, required=True, help="bytes per record")
    apply_p.add_argument("path", type=Path, help="file of raw fixed-size records")

    cycles_p = sub.add_parser("cycles", help="print the cycle structure of a shuffle")
    cycles_p.add_argument("--kind", type=parse_kind, default=IN_SHUFFLE,
                          help="shuffle family: in, out, or k:<k> (default: in)")
    cycles_p.add_argument("order", type=int, help="number of elements")

    order_p = sub.add_parser("order", help="print how many in-shuffles restore the original")
    order_p.add_argument("order", type=int, help="number of elements")

    bench_p = sub.add_parser("bench", help="sweep sizes and emit CSV of time and move counts")
    bench_p.add_argument("--min", type=int, required=True, dest="min_size")
    bench_p.add_argument("--max", type=int, required=True, dest="max_size")
    bench_p.add_argument("--factor", type=float, required=True,
                         help="size growth per step; sizes are rounded to the nearest "
                              "even value (ties up)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "apply":
        return cmd_apply(args.path, args.record_size, args.kind, args.inverse, args.verify)
    if args.command == "cycles":
        return cmd_cycles(args.order, args.kind)
    if args.command == "order":
        return cmd_order(args.order)
    return cmd_bench(args.min_size, args.max_size, args.factor)


if __name__ == "__main__":
    sys.exit(main())

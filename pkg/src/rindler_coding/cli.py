"""Command-line front end: ``capacity``, ``sweep`` and ``oracle-check``.

Exit codes: 0 success, 1 runtime or tolerance failure, 2 usage/validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .coding import info_report
from .oracle import ORACLE_TOL, TWIRL_TOL, oracle_check, twirl_check
from .sweep import builtin_config, builtin_configs, csv_bytes, load_config, run_sweep
from .unruh import RegionPair, check_rindler_angle, region_channel, rindler_angle_from_accel
from .xstate import XStateParams

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v: float) -> str:
    if abs(v) < 5e-15:
        v = 0.0
    return f"{v:#.10g}"


def _params_from_args(args) -> XStateParams:
    for flag, v in (("--cx", args.cx), ("--cy", args.cy), ("--cz", args.cz)):
        if not -1.0 <= v <= 1.0:
            raise UsageError(f"{flag}: got {v}, need c_{flag[-1]} in [-1, 1]")
    try:
        return XStateParams(args.cx, args.cy, args.cz)
    except ValueError as exc:
        raise UsageError(f"--cx/--cy/--cz: {exc}") from None


def _angles_from_args(args) -> tuple[float, float]:
    if args.accel_ratio is not None:
        if args.ra is not None or args.rb is not None:
            raise UsageError("--accel-ratio cannot be combined with --ra/--rb")
        try:
            r = rindler_angle_from_accel(args.accel_ratio)
        except ValueError as exc:
            raise UsageError(f"--accel-ratio: {exc}") from None
        return r, r
    if args.ra is None or args.rb is None:
        raise UsageError("--ra and --rb are required (or give --accel-ratio)")
    out = []
    for flag, v in (("--ra", args.ra), ("--rb", args.rb)):
        try:
            out.append(check_rindler_angle(v, flag))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out[0], out[1]


def cmd_capacity(args) -> int:
    params = _params_from_args(args)
    ra, rb = _angles_from_args(args)
    try:
        region = RegionPair.from_token(args.region)
    except ValueError as exc:
        raise UsageError(f"--region: {exc}") from None
    rep = info_report(region_channel(params, ra, rb, region))
    print(
        f"region={region.token} capacity_bits={_fmt(rep.capacity_bits)} "
        f"decoded_bits={_fmt(rep.decoded_bits)} negativity={_fmt(rep.negativity)}"
    )
    return EXIT_OK


def _resolve_config(name_or_path: str):
    path = Path(name_or_path)
    if path.is_file():
        return load_config(path)
    if name_or_path in builtin_configs():
        return builtin_config(name_or_path)
    raise FileNotFoundError(f"config {name_or_path!r} not found (built-ins: {', '.join(builtin_configs())})")


def _atomic_write(path: Path, data: bytes) -> None:
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def cmd_sweep(args) -> int:
    try:
        cfg = _resolve_config(args.config)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"--config: {exc}") from None
    records = run_sweep(cfg, verify=args.verify)
    out = Path(args.output)
    try:
        _atomic_write(out, csv_bytes(records))
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"wrote {len(records)} records to {out}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    if args.grid < 2:
        raise UsageError(f"--grid must be >= 2, got {args.grid}")
    if args.random < 0:
        raise UsageError(f"--random must be >= 0, got {args.random}")
    report = oracle_check(args.grid, args.random, args.seed)
    print(f"checked {report.points} (state, r_a, r_b) points, seed={args.seed}")
    for pair, err in report.max_error.items():
        print(f"{pair.token:<6} max_abs_discrepancy={err:.3e}")
    ok = report.passed(ORACLE_TOL)
    if args.twirl:
        gap = twirl_check(args.grid, args.random, args.seed)
        print(f"twirl  max_pairwise_gap={gap:.3e}")
        ok = ok and gap <= TWIRL_TOL
    if not report.passed(ORACLE_TOL):
        pair = max(report.worst, key=lambda p: report.worst[p].error)
        w = report.worst[pair]
        print(
            f"FAIL worst: region={pair.token} c={w.c.as_tuple()} r_a={w.r_a!r} "
            f"r_b={w.r_b!r} coefficient={w.coefficient} error={w.error:.3e}",
            file=sys.stderr,
        )
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rindler-coding",
        description="Dense-coding capacity of X-state channels seen from accelerated frames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cap = sub.add_parser("capacity", help="evaluate one channel")
    cap.add_argument("--cx", type=float, required=True)
    cap.add_argument("--cy", type=float, required=True)
    cap.add_argument("--cz", type=float, required=True)
    cap.add_argument("--ra", type=float, help="Alice's Rindler angle in radians, [0, pi/4]")
    cap.add_argument("--rb", type=float, help="Bob's Rindler angle in radians, [0, pi/4]")
    cap.add_argument(
        "--accel-ratio",
        type=float,
        help="omega*c/a for both qubits, converted via tan r = exp(-pi x)",
    )
    cap.add_argument("--region", required=True, help="I-I, II-II, I-II or II-I")
    cap.set_defaults(func=cmd_capacity)

    sw = sub.add_parser("sweep", help="run an acceleration sweep and write CSV")
    sw.add_argument("--config", required=True, help="JSON config path or built-in name (fig1-mes, fig1-pes)")
    sw.add_argument("--output", "-o", required=True)
    sw.add_argument("--verify", action="store_true", help="cross-check every point against the dilation")
    sw.set_defaults(func=cmd_sweep)

    oc = sub.add_parser("oracle-check", help="closed-form vs dilation comparison")
    oc.add_argument("--grid", type=int, default=9)
    oc.add_argument("--random", type=int, default=20, help="number of seeded random c-triples")
    oc.add_argument("--seed", type=int, default=0)
    oc.add_argument("--twirl", action="store_true", help="also check capacity = decoded = Holevo")
    oc.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``dubins-interval {solve,compare,check}``.

Exit status is 0 on success, 1 when a record fails validation (bad
instance fields or a failed path check) and 2 on unreadable input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from .geometry import Pose
from .interval import solve_fixed_departure, solve_interval, validate_path
from .oracle import oracle_grid
from .plotting import SvgOptions, write_svg
from .records import (
    InstanceRecord,
    ParseError,
    RecordValidationError,
    SolutionRecord,
    dumps_solutions,
    parse_instances,
    parse_solutions,
)

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


def solve_record(rec: InstanceRecord):
    if rec.is_fixed:
        start = Pose(rec.p1[0], rec.p1[1], rec.fixed_departure)
        return solve_fixed_departure(start, rec.p2, rec.to_instance().theta2, rec.rho)
    return solve_interval(rec.to_instance())


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    # write-then-rename so a failure never leaves a partial file behind
    folder = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _load_instances(args) -> List[InstanceRecord]:
    unit = "degrees" if args.degrees else "radians"
    return parse_instances(_read(args.file), args.format, default_unit=unit)


def cmd_solve(args) -> int:
    records = _load_instances(args)

    def run(rec):
        t0 = time.perf_counter()
        path = solve_record(rec)
        wall = time.perf_counter() - t0 if args.timing else None
        return SolutionRecord.from_path(rec, path, wall), path

    results = _map(run, records, args.jobs)
    _emit(dumps_solutions(sol for sol, _ in results), args.out)
    if args.svg:
        opts = SvgOptions(step=args.step, scale=args.scale)
        write_svg(args.svg, [r.to_instance() for r in records], [p for _, p in results], opts)
    return EXIT_OK


def cmd_compare(args) -> int:
    records = _load_instances(args)

    def run(rec):
        path = solve_record(rec)
        orc = oracle_grid(rec.to_instance(), args.grid)
        return {
            "id": rec.id,
            "solver_length": path.length,
            "oracle_length": orc.length,
            "gap": orc.length - path.length,
            "argmin_depart": orc.argmin_depart,
            "argmin_arrive": orc.argmin_arrive,
            "samples_per_axis": orc.samples_per_axis,
        }

    rows = _map(run, records, args.jobs)
    _emit("".join(json.dumps(r) + "\n" for r in rows), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    solutions = parse_solutions(_read(args.file), args.format)
    failed = 0
    lines = []
    for i, sol in enumerate(solutions):
        rep = validate_path(sol.to_path(), sol.instance.to_instance())
        label = sol.id if sol.id is not None else f"#{i}"
        for name in rep.failures:
            print(f"record {label}: {name}: {rep.messages.get(name, 'failed')}", file=sys.stderr)
        failed += not rep.ok
        lines.append(json.dumps({"id": sol.id, "ok": rep.ok, "failures": rep.failures}))
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_INVALID if failed else EXIT_OK


def _power_of_two(text: str) -> int:
    n = int(text)
    if n < 1 or n & (n - 1):
        raise argparse.ArgumentTypeError("must be a positive power of two")
    return n


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dubins-interval",
                                description="Shortest Dubins paths with heading intervals.")
    p.add_argument("--degrees", action="store_true",
                   help="read angles in degrees unless a record sets angle_unit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="input file, or - for stdin")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=["auto", "json-lines", "json-array"], default="auto")

    s = sub.add_parser("solve", help="solve every instance record")
    common(s)
    s.add_argument("--svg", help="also draw the solutions into this SVG file")
    s.add_argument("--step", type=_positive, default=0.05, help="SVG sampling step")
    s.add_argument("--scale", type=_positive, default=None, help="SVG units per pixel")
    s.add_argument("--timing", action="store_true", help="record wall_time per record")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("compare", help="compare the solver against the grid oracle")
    common(c)
    c.add_argument("--grid", type=_power_of_two, required=True, help="samples per axis")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_compare)

    k = sub.add_parser("check", help="validate solution records")
    common(k)
    k.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RecordValidationError as exc:
        print(f"invalid record: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

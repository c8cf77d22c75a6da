"""``sepcert`` command line.

Exit codes: 0 ok, 1 usage, 2 invalid input / generation failure / hash
mismatch, 3 I/O, 4 verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from pathlib import Path

from .certificates import certificate_json, cover_json, parse_certificate
from .errors import (
    GenerationFailedError,
    HashMismatchError,
    InvalidInputError,
    ParseError,
    ValidationError,
)
from .geometry import ConvexPolygon, rational
from .instances import parse_instance, random_disjoint_polygons, serialize_instance
from .oracle import verify_certificate
from .pipeline import solve

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_IO, EXIT_FAILED = 0, 1, 2, 3, 4

log = logging.getLogger("sepcert")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _write_atomic(path: Path, data: bytes) -> None:
    path = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot write {path}: {exc}") from None


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot read {path}: {exc}") from None


def _load_instance(path):
    try:
        return parse_instance(_read(path))
    except (ParseError, ValidationError) as exc:
        raise _Exit(EXIT_INVALID, f"{path}: {exc}") from None


def cmd_generate(args) -> int:
    try:
        inst = random_disjoint_polygons(
            args.n,
            args.seed,
            k_min=args.k_min,
            k_max=args.k_max,
            spread=args.spread,
            min_gap=rational(args.min_gap),
            shape=args.shape,
        )
    except GenerationFailedError as exc:
        raise _Exit(EXIT_INVALID, f"generation failed: {exc}") from None
    except ValueError as exc:
        raise _Exit(EXIT_USAGE, str(exc)) from None
    _write_atomic(args.output, serialize_instance(inst))
    log.info("wrote %d sets to %s", inst.n, args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    try:
        cert = solve(inst.sets)
    except InvalidInputError as exc:
        raise _Exit(EXIT_INVALID, f"{args.instance}: {exc}") from None
    _write_atomic(args.output, certificate_json(inst, cert))
    if args.emit_cover:
        _write_atomic(_cover_path(args.output), cover_json(inst, cert))
    a, b = cert.pair
    log.info("pair (%d, %d), guarantee %d (n = %d)", a + 1, b + 1, cert.guarantee, inst.n)
    return EXIT_OK


def _cover_path(cert_path) -> Path:
    p = Path(cert_path)
    return p.with_name(p.stem + ".cover.json")


def cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    try:
        record = parse_certificate(_read(args.certificate))
    except ParseError as exc:
        raise _Exit(EXIT_INVALID, f"{args.certificate}: {exc}") from None
    try:
        report = verify_certificate(inst, record, threads=args.threads)
    except HashMismatchError as exc:
        raise _Exit(EXIT_INVALID, str(exc)) from None
    if not args.quiet or not report.passed:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILED


def _polys(doc_list):
    return [ConvexPolygon(tuple((rational(x), rational(y)) for x, y in d["vertices"])) for d in doc_list or []]


def cmd_render(args) -> int:
    from .render import render_svg

    inst = _load_instance(args.instance)
    kwargs = {}
    if args.certificate:
        try:
            rec = parse_certificate(_read(args.certificate))
        except ParseError as exc:
            raise _Exit(EXIT_INVALID, f"{args.certificate}: {exc}") from None
        kwargs.update(witness=rec.witness_line, pair=rec.pair, separated=rec.separated)
    if args.cover:
        try:
            doc = json.loads(_read(args.cover))
            kwargs.update(cover=_polys(doc.get("cover")), clipped=_polys(doc.get("clipped")))
        except (ValueError, KeyError, TypeError) as exc:
            raise _Exit(EXIT_INVALID, f"{args.cover}: malformed cover file ({exc})") from None
    _write_atomic(args.output, render_svg(inst.sets, **kwargs))
    return EXIT_OK


def cmd_report(args) -> int:
    from .report import run_batch, write_report

    seeds = range(args.seed_start, args.seed_start + args.seeds)
    rows = run_batch(args.n, seeds, verify=not args.no_verify, threads=args.threads)
    try:
        paths = write_report(rows, args.output)
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot write report: {exc}") from None
    for p in paths:
        log.info("wrote %s", p)
    return EXIT_OK if all(r.verified is not False for r in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepcert", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="only print errors")
    parser.add_argument("--threads", type=_positive, default=1, help="worker processes for the oracle")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write a seeded random instance")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--k-min", type=int, default=3)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--spread", type=float, default=1.5, help="grid cells per set")
    p.add_argument("--min-gap", default="10", help="exact rational, e.g. 10 or 25/2")
    p.add_argument("--shape", choices=("random", "square"), default="random")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="compute a certificate for an instance")
    p.add_argument("instance")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--emit-cover", action="store_true", help="also write <output>.cover.json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a certificate by brute force")
    p.add_argument("instance")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an instance (and certificate) as SVG")
    p.add_argument("instance")
    p.add_argument("--certificate")
    p.add_argument("--cover")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("report", help="batch statistics as CSV plus figures")
    p.add_argument("--n", type=_positive, nargs="+", default=[3, 6, 12, 19, 30])
    p.add_argument("--seeds", type=_positive, default=5)
    p.add_argument("--seed-start", type=int, default=0)
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"sepcert: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

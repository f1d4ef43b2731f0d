"""Command-line driver.

Exit status: 0 success (warnings allowed), 1 input errors (lexical,
syntax, scope, arithmetic, unknown layer), 2 consistency warnings under
``--strict``, 3 I/O failures. Diagnostics go to stderr, results to stdout
or files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import pipeline
from .arith import ArchConfig
from .codegen import EXTENSIONS
from .diagnostics import Diagnostic, FloorplanError
from .model import count_layouts, enumerate_layer, to_text
from .model.deadcode import DEFAULT_CAP

EXIT_OK, EXIT_INPUT, EXIT_STRICT, EXIT_IO = 0, 1, 2, 3


def _binding(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected formal=value, got {text!r}")
    try:
        return name.strip(), int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"binding value must be an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floorplan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", type=Path)
        p.add_argument("--word-bytes", type=int, default=8)
        p.add_argument("--page-bytes", type=int, default=4096)

    p = sub.add_parser("compile", help="generate the address library")
    common(p)
    p.add_argument("-o", "--output", type=Path,
                   help="output file ('-' for stdout); defaults to the input stem")
    p.add_argument("--emit", choices=["rust", "dump", "all"], default="all",
                   help="backend source, interface dump, or both (default)")
    p.add_argument("--strict", action="store_true", help="exit 2 on any warning")

    p = sub.add_parser("check", help="run the consistency checks")
    common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_CAP,
                   help="largest magnitude in bytes analysed for dead branches")
    p.add_argument("--strict", action="store_true", help="exit 2 on any warning")

    for name, help_ in (("enumerate", "print every layout of a layer"),
                        ("count", "print the number of layouts of a layer")):
        p = sub.add_parser(name, help=help_)
        common(p)
        p.add_argument("--layer", required=True)
        p.add_argument("--size", type=int, required=True, help="budget in bytes")
        p.add_argument("--addr", type=lambda s: int(s, 0), default=0, help="start address")
        p.add_argument("--bind", type=_binding, action="append", default=[],
                       metavar="FORMAL=N", help="fix a formal of the layer (repeatable)")
    return parser


class _Reporter:
    def __init__(self, filename: str):
        self.filename = filename

    def emit(self, diags: Sequence[Diagnostic]) -> None:
        for d in diags:
            print(d.format(self.filename), file=sys.stderr)


def _write(path: Optional[Path], text: str) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _compile(args, arch: ArchConfig, text: str, rep: _Reporter) -> int:
    result = pipeline.build(text, arch)
    rep.emit(result.diagnostics)
    if args.emit == "all":
        if args.output is not None and str(args.output) == "-":
            raise ValueError("--emit all writes two files; choose --emit rust or dump for stdout")
        base = args.output or args.input.with_suffix(EXTENSIONS["rust"])
        _write(base, result.rust)
        _write(base.with_suffix(EXTENSIONS["dump"]), result.dump)
    else:
        text_out = result.rust if args.emit == "rust" else result.dump
        out = args.output or args.input.with_suffix(EXTENSIONS[args.emit])
        _write(out, text_out)
    return EXIT_STRICT if args.strict and any(
        d.severity == "warning" for d in result.diagnostics) else EXIT_OK


def _check(args, arch: ArchConfig, text: str, rep: _Reporter) -> int:
    fe = pipeline.check(text, arch, args.budget)
    rep.emit(fe.sink.items)
    return EXIT_STRICT if args.strict and fe.sink.warnings else EXIT_OK


def _oracle(args, arch: ArchConfig, text: str) -> int:
    fe = pipeline.load(text)
    bindings = dict(args.bind)
    if args.command == "count":
        print(count_layouts(fe.expanded, args.layer, args.size, args.addr, bindings, arch))
    else:
        trees = enumerate_layer(fe.expanded, args.layer, args.size, args.addr, bindings, arch)
        for line in sorted(to_text(t) for t in trees):
            print(line)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    rep = _Reporter(str(args.input))
    try:
        arch = ArchConfig.from_bytes(args.word_bytes, args.page_bytes)
    except ValueError as exc:
        print(f"floorplan: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        text = args.input.read_text()
    except OSError as exc:
        print(f"{args.input}:0:0: error: cannot read input: {exc.strerror or exc}",
              file=sys.stderr)
        return EXIT_IO
    try:
        if args.command == "compile":
            return _compile(args, arch, text, rep)
        if args.command == "check":
            return _check(args, arch, text, rep)
        return _oracle(args, arch, text)
    except FloorplanError as exc:
        errors = getattr(exc, "errors", [exc])
        rep.emit([e.diagnostic() for e in errors])
        return EXIT_INPUT
    except OSError as exc:
        print(f"{getattr(exc, 'filename', None) or args.input}:0:0: error: "
              f"cannot write output: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"floorplan: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

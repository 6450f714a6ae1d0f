"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 consistency failure.
Every failure also writes one JSON object to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ConsistencyFailure, DimensionMismatch, DomainError
from .kummer import KummerClass, KummerLattice, SurveyRow, bb_square, fibration_check_principal, survey_principal
from .lattice import GramMatrix, isotropic_search
from .mukai import MukaiVector, fm_transform
from .surface import PolarizedSurface

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONSISTENCY = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _gram_rows(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(x) for x in row.split(",")) for row in text.strip().split(";"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected GRAM like '2,1;1,-2', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kummerfib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        return p

    p = add("fm", help="Fourier-Mukai transform of a Mukai vector")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c1", type=_csv, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--wit", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--gram", type=_gram_rows, default=((2,),))

    p = add("bb", help="Beauville-Bogomolov square on NS(K^n A)")
    p.add_argument("--gram", type=_gram_rows, default=((2,),))
    p.add_argument("--h", type=_csv, default=None, help="polarization coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", type=_csv, required=True,
                   help="divisor coordinates followed by the eps coefficient")

    p = add("check", help="fibration verdict for a principal Picard-rank-one surface")
    p.add_argument("--n", type=int, required=True)

    p = add("survey", help="verdict table for n = 3..max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--cross-check-bound", type=int, default=1000)
    p.add_argument("--cross-check-limit", type=int, default=500)

    p = sub.add_parser("lattice", help="lattice utilities")
    lsub = p.add_subparsers(dest="lattice_command", required=True, parser_class=_Parser)
    p = lsub.add_parser("isotropic", help="bounded search for a square-zero vector")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--gram", type=_gram_rows, required=True)
    p.add_argument("--bound", type=int, required=True)
    return parser


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(x) for x in value)
    return str(value)


def _render(objs: list[dict], fmt: str, columns: Optional[Sequence[str]] = None) -> str:
    if fmt == "json":
        return "".join(json.dumps(o, separators=(",", ":")) + "\n" for o in objs)
    columns = list(columns or (objs[0].keys() if objs else ()))
    lines = ["\t".join(columns)]
    lines += ["\t".join(_cell(o[c]) for c in columns) for o in objs]
    return "\n".join(lines) + "\n"


def _cmd_fm(args) -> list[dict]:
    g = GramMatrix(args.gram)
    v = MukaiVector(args.r, args.c1, args.chi)
    if len(v.c1) != g.rank:
        raise DimensionMismatch(f"c1 has {len(v.c1)} coordinates but the lattice has rank {g.rank}")
    return [fm_transform(v, args.wit).to_json()]


def _cmd_bb(args) -> list[dict]:
    ns = GramMatrix(args.gram)
    surface = PolarizedSurface(ns, args.h) if args.h is not None else PolarizedSurface.from_gram(ns)
    k = KummerLattice(surface, args.n)
    x = KummerClass.from_coords(args.klass)
    out = {"q": bb_square(k, x)}
    if k.n == 2:
        out["warning"] = "n=2 is outside the fibration theorem's hypothesis n>2"
    return [out]


def _cmd_check(args) -> list[dict]:
    return [fibration_check_principal(args.n).to_json()]


def _cmd_survey(args) -> list[dict]:
    rows = survey_principal(args.max_n, args.cross_check_bound, args.cross_check_limit)
    return [row.to_json() for row in rows]


def _cmd_lattice(args) -> list[dict]:
    return [isotropic_search(GramMatrix(args.gram), args.bound).to_json()]


COMMANDS = {"fm": _cmd_fm, "bb": _cmd_bb, "check": _cmd_check, "survey": _cmd_survey, "lattice": _cmd_lattice}


def _fail(code: int, kind: str, message: str) -> tuple[int, str]:
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}, separators=(",", ":")) + "\n")
    return code, ""


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one invocation and return ``(exit_code, stdout_text)``."""
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return _fail(EXIT_USAGE, "UsageError", str(exc))
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    try:
        objs = COMMANDS[args.command](args)
    except DomainError as exc:
        return _fail(EXIT_DOMAIN, type(exc).__name__, str(exc))
    except ConsistencyFailure as exc:
        return _fail(EXIT_CONSISTENCY, "ConsistencyFailure", str(exc))
    columns = SurveyRow.COLUMNS if args.command == "survey" else None
    return EXIT_OK, _render(objs, args.format, columns)


def main(argv: Optional[Sequence[str]] = None) -> None:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.exit(code)

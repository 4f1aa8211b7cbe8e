"""
Command handlers - compose, marginalize, extend, check, convert, project
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from credal_compose.config.settings import settings
from credal_compose.core.exceptions import InvariantViolation, ParseError, ScopeMismatch
from credal_compose.models.credal import CredalSet, Distribution, Scope, Variable
from credal_compose.services import compose_service, credal_service, io_service, polytope_service
from credal_compose.services.projection_service import euclidean_project

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1


# ---------- helpers ----------

def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _write(path: Optional[str], data: bytes):
    """Запись в файл или в stdout, если путь не задан или равен "-" """
    if path is None or path == "-":
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return
    Path(path).write_bytes(data)
    logger.info(f"Wrote {len(data)} bytes to {path}")


def _load(path: str) -> CredalSet:
    return io_service.load_credal_set(_read(path))


def _digits(args: argparse.Namespace) -> Optional[int]:
    return args.digits if args.digits is not None else settings.DISPLAY_DIGITS


def _names(text: str) -> List[str]:
    names = [n.strip() for n in text.split(",")]
    if any(not n for n in names):
        raise ParseError(f"empty variable name in {text!r}")
    return names


def _definitions(items: Optional[List[str]]) -> Dict[str, Variable]:
    """--define NAME=l1,l2,..."""
    variables: Dict[str, Variable] = {}
    for item in items or []:
        name, sep, levels = item.partition("=")
        if not sep or not name.strip():
            raise ParseError(f"definition must look like NAME=level1,level2: {item!r}")
        variables[name.strip()] = Variable(name.strip(), tuple(_names(levels)))
    return variables


def _distribution(m: CredalSet, path: str) -> Distribution:
    if not m.is_singleton():
        raise InvariantViolation(f"{path} holds {len(m)} extreme points, expected a single distribution")
    return m.vertices[0]


def _answer(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


# ---------- commands ----------

def cmd_compose(args: argparse.Namespace) -> int:
    """compose A B -o OUT [--trace TRACEFILE]"""
    m1, m2 = _load(args.first), _load(args.second)
    result, trace = compose_service.compose_with_trace(m1, m2)
    digits = _digits(args)
    _write(args.output, io_service.emit_credal(result, digits))
    if args.trace:
        _write(args.trace, io_service.emit_trace(trace, digits))
    return 0


def cmd_marginalize(args: argparse.Namespace) -> int:
    """marginalize A --onto V1,V2 -o OUT"""
    m = _load(args.source)
    result = credal_service.marginalize(m, m.scope.select(_names(args.onto)))
    _write(args.output, io_service.emit_credal(result, _digits(args)))
    return 0


def cmd_extend(args: argparse.Namespace) -> int:
    """extend A --onto V1,V2,V3 [--define NAME=l1,l2] -o OUT"""
    m = _load(args.source)
    known = {v.name: v for v in m.scope.variables}
    for name, variable in _definitions(args.define).items():
        if name in known and known[name] != variable:
            raise ScopeMismatch(f"variable {name} is already defined with levels {list(known[name].levels)}")
        known[name] = variable
    names = _names(args.onto)
    undefined = [n for n in names if n not in known]
    if undefined:
        raise ScopeMismatch(f"variables {undefined} need a --define NAME=levels")
    result = credal_service.vacuous_extend(m, Scope(tuple(known[n] for n in names)))
    _write(args.output, io_service.emit_credal(result, _digits(args)))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    """check projective|equal|abscont|subset A B; печатает true/false"""
    a, b = _load(args.first), _load(args.second)
    if args.predicate == "projective":
        return _answer(credal_service.is_projective(a, b))
    if args.predicate == "equal":
        if not a.scope.same_variables(b.scope):
            return _answer(False)
        return _answer(polytope_service.equal(credal_service.reorder(b, a.scope).hull, a.hull))
    if args.predicate == "subset":
        return _answer(credal_service.is_subset(a, b))
    # abscont: каждый файл содержит одно распределение
    return _answer(credal_service.abs_continuous(
        _distribution(a, args.first), _distribution(b, args.second)
    ))


def cmd_convert(args: argparse.Namespace) -> int:
    """convert A --to h|v -o OUT"""
    m = _load(args.source)
    target = io_service.to_hrep(m) if args.to == "h" else m
    _write(args.output, io_service.emit_credal(target, _digits(args)))
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    """project POINTFILE A -o OUT"""
    point = io_service.parse_point(_read(args.point))
    m = _load(args.target)
    projection = euclidean_project(point, m.hull)
    _write(args.output, io_service.emit_point(projection, _digits(args)))
    return 0


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("-o", "--output", help="output file (default: stdout)")
    parser.add_argument("--digits", type=_non_negative, help="round emitted numbers for display")


def register_commands(subparsers):
    """Register all CLI subcommands"""
    p = subparsers.add_parser("compose", help="composition M1 ▷ M2")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--trace", help="write intermediate results to this file")
    _common(p)
    p.set_defaults(handler=cmd_compose)

    p = subparsers.add_parser("marginalize", help="marginal credal set")
    p.add_argument("source")
    p.add_argument("--onto", required=True, help="comma-separated variable names")
    _common(p)
    p.set_defaults(handler=cmd_marginalize)

    p = subparsers.add_parser("extend", help="vacuous extension")
    p.add_argument("source")
    p.add_argument("--onto", required=True, help="comma-separated variable names")
    p.add_argument("--define", action="append", metavar="NAME=L1,L2", help="levels of a new variable")
    _common(p)
    p.set_defaults(handler=cmd_extend)

    p = subparsers.add_parser("check", help="print true/false, exit 0/1")
    p.add_argument("predicate", choices=["projective", "equal", "abscont", "subset"])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_check)

    p = subparsers.add_parser("convert", help="switch between V- and H-representation")
    p.add_argument("source")
    p.add_argument("--to", required=True, choices=["h", "v"])
    _common(p)
    p.set_defaults(handler=cmd_convert)

    p = subparsers.add_parser("project", help="Euclidean projection of a point onto a credal set")
    p.add_argument("point")
    p.add_argument("target")
    _common(p)
    p.set_defaults(handler=cmd_project)

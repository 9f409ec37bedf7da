"""
Command line front end: every verb loads documents, runs one kernel operation and prints
a JSON (or plain text) result. Exit codes: 0 ok, 1 violations found, 2 error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum, unique
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .adjoint1 import (
    MutualLeftAdjunction,
    NotAdjointException,
    adjoint_search,
    verify_mutual_left,
)
from .catalog import random_universe
from .const import (
    ARITY_BOUND_DEFAULT,
    EXIT_ERROR,
    EXIT_OK,
    EXIT_VIOLATIONS,
    SCHEMA_FINCAT,
)
from .cyclic_mcat import Universe, build_madj, check_universe
from .documents import DocumentLoader, document, tuplify
from .fincat import (
    FinCategory,
    Functor,
    InvalidCategoryException,
    NoColimitException,
    size_limit,
)
from .leibniz import hat_morphism
from .mates_n import InvalidAnchorException, TwoCell, mate_n, validate_two_cell
from .multiadjoint import MultiAdjunction, compose_multi, verify_cycle
from .report import MadjException, Report

LOG = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(name)s](%(levelname)s) %(message)s"


@unique
class Status(Enum):
    OK = "ok"
    VIOLATIONS = "violations"
    ERROR = "error"

    @property
    def exit_code(self) -> int:
        return {
            Status.OK: EXIT_OK,
            Status.VIOLATIONS: EXIT_VIOLATIONS,
            Status.ERROR: EXIT_ERROR,
        }[self]


@dataclass(frozen=True)
class CommandResult:
    status: Status
    payload: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_json(self) -> str:
        return json.dumps(
            {"status": self.status.value, **self.payload}, ensure_ascii=False
        )

    def to_text(self) -> str:
        lines = [self.status.value]
        for key, value in self.payload.items():
            if key == "report":
                lines.extend(_report_lines(value))
            elif isinstance(value, (dict, list)):
                lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)

    def render(self, out: str) -> str:
        return self.to_text() if out == "text" else self.to_json()


def _report_lines(report: Dict[str, Any]) -> List[str]:
    lines = [f"{report['title']}: {'ok' if report['ok'] else 'FAILED'}"]
    for law, count in report["checked"].items():
        lines.append(f"  {law}: {count} checked")
    for v in report["violations"]:
        witness = json.dumps(v["witness"], ensure_ascii=False)
        lines.append(f"  violation {v['law']} at {witness}")
    for reason in report["skipped"]:
        lines.append(f"  skipped: {reason}")
    return lines


def from_report(report: Report, **extra: Any) -> CommandResult:
    status = Status.OK if report.ok else Status.VIOLATIONS
    return CommandResult(status, {**extra, "report": report.to_json()})


def _validate(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    try:
        schema, obj = loader.load(args.file)
    except InvalidCategoryException as e:
        return from_report(e.report, schema=SCHEMA_FINCAT)
    if isinstance(obj, FinCategory):
        return CommandResult(
            Status.OK,
            {
                "schema": schema,
                "name": obj.name,
                "objects": len(obj.objects),
                "morphisms": len(obj.morphisms),
            },
        )
    if isinstance(obj, Functor):
        return from_report(obj.violations(), schema=schema)
    if isinstance(obj, MutualLeftAdjunction):
        return from_report(verify_mutual_left(obj), schema=schema)
    if isinstance(obj, MultiAdjunction):
        return from_report(verify_cycle(obj), schema=schema)
    if isinstance(obj, TwoCell):
        return from_report(validate_two_cell(obj), schema=schema)
    if isinstance(obj, Universe):
        d = build_madj(obj)
        return CommandResult(
            Status.OK,
            {
                "schema": schema,
                "categories": len(d.vertical.objects),
                "adjunctions": len(d.vertical.multimaps),
                "functors": len(d.cells.objects),
                "cells": len(d.cells.multimaps),
            },
        )
    return CommandResult(Status.ERROR, {"error": f"cannot validate {schema!r}"})


def _expect(obj: Any, kind: type, path: str) -> Any:
    if not isinstance(obj, kind):
        raise InvalidDocumentKindException(f"{path} is not a {kind.__name__} document")
    return obj


class InvalidDocumentKindException(MadjException):
    pass


def _adjoint_search(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    f = _expect(loader.load(args.functor)[1], Functor, args.functor)
    try:
        adj = adjoint_search(f)
    except NotAdjointException as e:
        return CommandResult(Status.VIOLATIONS, {"not_adjoint": e.witness})
    return CommandResult(Status.OK, {"adjunction": document(adj)})


def _mate(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    t = _expect(loader.load(args.twocell)[1], TwoCell, args.twocell)
    if t.anchor != args.from_slot:
        raise InvalidAnchorException(
            f"{args.twocell} is anchored at {t.anchor}, not {args.from_slot}"
        )
    mate = mate_n(t, args.to_slot)
    return from_report(validate_two_cell(mate), twocell=document(mate))


def _compose(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    g = _expect(loader.load(args.g)[1], MultiAdjunction, args.g)
    fs = [_expect(loader.load(p)[1], MultiAdjunction, p) for p in args.fs]
    composite = compose_multi(g, fs)
    return from_report(verify_cycle(composite), madj=document(composite))


def _cyclic_check(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    universe = _expect(loader.load(args.universe)[1], Universe, args.universe)
    d = build_madj(universe)
    return from_report(check_universe(d, args.arity_bound))


def _parse_id(text: str) -> Any:
    try:
        return tuplify(json.loads(text))
    except json.JSONDecodeError:
        return text


def _leibniz(loader: DocumentLoader, args: argparse.Namespace) -> CommandResult:
    f = _expect(loader.load(args.functor)[1], Functor, args.functor)
    try:
        hat = hat_morphism(f, [_parse_id(m) for m in args.morphisms], args.full)
    except NoColimitException as e:
        return CommandResult(Status.VIOLATIONS, {"no_colimit": str(e)})
    return CommandResult(
        Status.OK,
        {"morphism": hat.morphism, "domain": hat.domain, "codomain": hat.codomain},
    )


def _generate_universe(
    loader: DocumentLoader, args: argparse.Namespace
) -> CommandResult:
    return CommandResult(Status.OK, {"universe": document(random_universe(args.seed))})


Handler = Callable[[DocumentLoader, argparse.Namespace], CommandResult]


def init_argparse() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-mates",
        description="Checks multivariable adjunctions and their mates.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--out", choices=("json", "text"), default="json")
    parser.add_argument(
        "--seed", type=int, default=0, help="Seed for generated universes."
    )
    parser.add_argument(
        "--max-size",
        type=int,
        default=None,
        help="Bound on the morphisms of constructed categories.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    validate = verbs.add_parser("validate", help="Validate a document of any schema.")
    validate.add_argument("file")
    validate.set_defaults(handler=_validate)

    search = verbs.add_parser(
        "adjoint-search", help="Find the mutual left adjoint of a functor."
    )
    search.add_argument("functor")
    search.set_defaults(handler=_adjoint_search)

    mate = verbs.add_parser("mate", help="Move the anchor of a 2-cell.")
    mate.add_argument("twocell")
    mate.add_argument("--from", dest="from_slot", type=int, required=True)
    mate.add_argument("--to", dest="to_slot", type=int, required=True)
    mate.set_defaults(handler=_mate)

    compose = verbs.add_parser("compose", help="Compose multivariable adjunctions.")
    compose.add_argument("g")
    compose.add_argument("fs", nargs="+")
    compose.set_defaults(handler=_compose)

    check = verbs.add_parser("cyclic-check", help="Run every law over a universe.")
    check.add_argument("universe")
    check.add_argument("--arity-bound", type=int, default=ARITY_BOUND_DEFAULT)
    check.set_defaults(handler=_cyclic_check)

    leibniz = verbs.add_parser(
        "leibniz", help="The obstruction map of a functor at some arrows."
    )
    leibniz.add_argument("functor")
    leibniz.add_argument("morphisms", nargs="*")
    leibniz.add_argument(
        "--full", action="store_true", help="Use every vertex of the cube."
    )
    leibniz.set_defaults(handler=_leibniz)

    generate = verbs.add_parser(
        "generate-universe", help="Print a seeded random universe."
    )
    generate.set_defaults(handler=_generate_universe)
    return parser


def run(args: argparse.Namespace, base: Optional[Path] = None) -> CommandResult:
    handler: Handler = args.handler
    LOG.info("Running %s", args.verb)
    try:
        with size_limit(args.max_size):
            result = handler(DocumentLoader(base), args)
    except MadjException as e:
        LOG.info("%s failed: %s", args.verb, e)
        return CommandResult(
            Status.ERROR, {"error": type(e).__name__, "message": str(e)}
        )
    LOG.info("%s finished: %s", args.verb, result.status.value)
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = init_argparse().parse_args(argv)
    if args.verbose:
        logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=logging.DEBUG)
    result = run(args)
    print(result.render(args.out))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: check, construct, report, fixtures.

Exit codes: 0 everything passes, 1 an axiom fails or a construction is
refused, 2 the input cannot be read, 3 a construction failed its own checker.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import braided, duality, lie
from .braided import AlgebraModule, BraidedBialgebra, CoalgebraComodule, YBAlgebra, YBCoalgebra
from .duality import MichaelisPair, TakeuchiPair
from .errors import (
    DescentFailure,
    FieldMismatch,
    InvalidInput,
    MissingRootOfUnity,
    NotStrong,
    NotSymmetricContext,
    ParseError,
    ShapeError,
    SnakeFailure,
    SoundnessError,
)
from .fixtures import FIXTURES, fixture_path
from .io import StrongMichaelisPair, digest, dumps, dumps_report, loads
from .lie import LieComodule, LieHomSpace, LieModule, YBLieAlgebra, YBLieCoalgebra, YBOperator
from .report import CheckReport

__all__ = ["main", "check_structure", "extended_report", "construct", "CONSTRUCTIONS"]

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
_REFUSED = (InvalidInput, DescentFailure, NotStrong, SnakeFailure, NotSymmetricContext)
_UNREADABLE = (ParseError, ShapeError, FieldMismatch, MissingRootOfUnity, OSError, UnicodeDecodeError)


def check_structure(s) -> CheckReport:
    """Run the checker matching the structure's type."""
    if isinstance(s, YBOperator):
        return lie.check_yb_operator(s)
    if isinstance(s, YBLieAlgebra):
        return lie.check_yb_lie_algebra(s)
    if isinstance(s, YBLieCoalgebra):
        return lie.check_yb_lie_coalgebra(s)
    if isinstance(s, BraidedBialgebra):
        return braided.check_braided_bialgebra(s)
    if isinstance(s, YBAlgebra):
        return braided.check_yb_algebra(s)
    if isinstance(s, YBCoalgebra):
        return braided.check_yb_coalgebra(s)
    if isinstance(s, LieModule):
        return lie.check_lie_module(s)
    if isinstance(s, LieComodule):
        return lie.check_lie_comodule(s)
    if isinstance(s, AlgebraModule):
        return braided.check_algebra_module(s)
    if isinstance(s, CoalgebraComodule):
        return braided.check_coalgebra_comodule(s)
    if isinstance(s, StrongMichaelisPair):
        report = duality.check_michaelis_pair(s.pair)
        report.extend(duality._snakes(s.pair.ev, s.witness.coev, s.pair.L.obj, s.pair.C.obj, s.pair.ctx))
        return report
    if isinstance(s, MichaelisPair):
        return duality.check_michaelis_pair(s)
    if isinstance(s, TakeuchiPair):
        return duality.check_takeuchi(s)
    if isinstance(s, LieHomSpace):
        return lie.check_lie_hom_space(s)
    raise TypeError(f"no checker for {type(s).__name__}")


def extended_report(s) -> CheckReport:
    """The checker entries plus the derived identities relevant to the kind."""
    report = check_structure(s)
    if not report.passed:
        return report
    if isinstance(s, YBLieAlgebra):
        report.extend(lie.left_jacobi(s))
    elif isinstance(s, BraidedBialgebra):
        report.extend(braided.descent_report(s, braided.primitives(s), braided.indecomposables(s)))
    elif isinstance(s, (MichaelisPair, StrongMichaelisPair)):
        pair = s.pair if isinstance(s, StrongMichaelisPair) else s
        report.extend(duality.duality_report(pair))
        for X in duality.TEST_OBJECTS:
            report.extend(duality.check_hom_monad(pair.C, X), f"hom_monad[{duality.object_tag(X)}]:")
        try:
            witness = duality.strengthen(pair)
        except NotStrong as exc:
            report.add_flag("strong", True, f"not strong: {exc}")
        else:
            for X in duality.TEST_OBJECTS:
                report.extend(duality.check_zeta_inverse(pair, witness, X), f"zeta_inverse[{duality.object_tag(X)}]:")
    elif isinstance(s, TakeuchiPair):
        H = s.K
        regular = CoalgebraComodule(H.coalgebra, H.obj, H.comul)
        report.extend(duality.check_square(s, regular), "square:")
    return report


# --------------------------------------------------------------- constructions

def _one(kind, inputs, *types):
    if len(inputs) != len(types):
        raise InvalidInput(f"{kind} takes {len(types)} input file(s), got {len(inputs)}")
    for value, typ in zip(inputs, types):
        if not isinstance(value, typ):
            names = " or ".join(t.__name__ for t in (typ if isinstance(typ, tuple) else (typ,)))
            raise InvalidInput(f"{kind} expects {names}, got {type(value).__name__}")
    return inputs


def _require(report: CheckReport, what: str):
    if not report.passed:
        raise InvalidInput(f"{what} fails: {', '.join(report.failures())}", report)


def _pair_and_witness(s):
    if isinstance(s, StrongMichaelisPair):
        return s.pair, s.witness
    return s, None


def _construct_commutator(inputs):
    (B,) = _one("commutator", inputs, (YBAlgebra, BraidedBialgebra))
    return braided.commutator_lie(B)


def _construct_cocommutator(inputs):
    (C,) = _one("cocommutator", inputs, (YBCoalgebra, BraidedBialgebra))
    return braided.cocommutator_lie(C)


def _construct_opposite(inputs):
    (L,) = _one("opposite", inputs, YBLieAlgebra)
    _require(lie.check_yb_lie_algebra(L), "YB-Lie algebra")
    return lie.opposite(L)


def _construct_dual_pair(inputs):
    (L,) = _one("dual-pair", inputs, YBLieAlgebra)
    _require(lie.check_yb_lie_algebra(L), "YB-Lie algebra")
    return duality.dual_pair(L)


def _construct_primitives(inputs):
    (H,) = _one("primitives", inputs, BraidedBialgebra)
    return braided.primitives(H).lie


def _construct_indecomposables(inputs):
    (H,) = _one("indecomposables", inputs, BraidedBialgebra)
    return braided.indecomposables(H).lie


def _construct_michaelis(inputs):
    (t,) = _one("michaelis-from-takeuchi", inputs, TakeuchiPair)
    return duality.michaelis_from_takeuchi(t)


def _construct_strengthen(inputs):
    (p,) = _one("strengthen", inputs, (MichaelisPair, StrongMichaelisPair))
    pair, _ = _pair_and_witness(p)
    return StrongMichaelisPair(pair, duality.strengthen(pair))


def _construct_lie_hom(inputs):
    m, n = _one("lie-hom", inputs, LieModule, LieModule)
    _require(lie.check_lie_module(m), "first module")
    _require(lie.check_lie_module(n), "second module")
    return lie.lie_hom(m, n)


def _construct_comodule_to_module(inputs):
    p, m = _one("comodule-to-module", inputs, (MichaelisPair, StrongMichaelisPair), LieComodule)
    pair, _ = _pair_and_witness(p)
    _require(duality.check_michaelis_pair(pair), "Michaelis pair")
    return duality.comodule_to_module(pair, m)


def _construct_module_to_comodule(inputs):
    p, m = _one("module-to-comodule", inputs, (MichaelisPair, StrongMichaelisPair), LieModule)
    pair, witness = _pair_and_witness(p)
    _require(duality.check_michaelis_pair(pair), "Michaelis pair")
    if witness is None:
        witness = duality.strengthen(pair)
    return duality.module_to_comodule(pair, witness, m)


CONSTRUCTIONS = {
    "commutator": _construct_commutator,
    "cocommutator": _construct_cocommutator,
    "opposite": _construct_opposite,
    "dual-pair": _construct_dual_pair,
    "primitives": _construct_primitives,
    "indecomposables": _construct_indecomposables,
    "michaelis-from-takeuchi": _construct_michaelis,
    "strengthen": _construct_strengthen,
    "lie-hom": _construct_lie_hom,
    "comodule-to-module": _construct_comodule_to_module,
    "module-to-comodule": _construct_module_to_comodule,
}


def construct(kind: str, inputs: list):
    """Run a construction and re-check its serialized output."""
    if kind not in CONSTRUCTIONS:
        raise InvalidInput(f"unknown construction {kind!r}")
    result = CONSTRUCTIONS[kind](list(inputs))
    text = dumps(result)
    report = check_structure(loads(text))
    if not report.passed:
        raise SoundnessError(f"{kind} output fails its checker: {', '.join(report.failures())}", report)
    return result, text


# --------------------------------------------------------------- plumbing

def _read(source: str) -> tuple[object, str]:
    """Load a structure from a path, or from a fixture name if no such file exists."""
    path = Path(source)
    if not path.exists():
        name = path.name[:-5] if path.name.endswith(".json") else path.name
        if name in FIXTURES:
            path = fixture_path(name)
    text = path.read_text(encoding="utf-8")
    return loads(text), text


def _emit(report: CheckReport, fmt: str, input_digest: str | None, out) -> None:
    if fmt == "text":
        out.write(report.to_text() + "\n")
    else:
        out.write(dumps_report(report, input_digest))


def _cmd_check(args, extended: bool) -> int:
    s, text = _read(args.file)
    report = extended_report(s) if extended else check_structure(s)
    _emit(report, args.format, digest(text), sys.stdout)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_construct(args) -> int:
    inputs = [_read(p)[0] for p in args.inputs]
    _, text = construct(args.kind, inputs)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_PASS


def _cmd_fixtures(args) -> int:
    if args.action == "list":
        for f in FIXTURES.values():
            expect = ", ".join(f.expected_failures) if f.expected_failures else "pass"
            sys.stdout.write(f"{f.name}\t{f.kind}\t{expect}\t{f.description}\n")
    else:
        if args.name not in FIXTURES:
            raise InvalidInput(f"unknown fixture {args.name!r}")
        path = fixture_path(args.name)
        sys.stdout.write(str(path) + "\n" if args.action == "path" else path.read_text(encoding="utf-8"))
    return EXIT_PASS


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yblie", description="Exact checks for YB-Lie structures and their dualities.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("check", "run the checker for a structure file"),
        ("report", "checker plus derived identities (descent, duality round trips, ...)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="structure file, or a fixture name")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("construct", help="build a new structure and write it")
    p.add_argument("kind", choices=sorted(CONSTRUCTIONS))
    p.add_argument("inputs", nargs="+", help="input files or fixture names")
    p.add_argument("-o", "--output", help="output path (default: standard output)")

    p = sub.add_parser("fixtures", help="list or show the shipped fixtures")
    p.add_argument("action", choices=("list", "show", "path"))
    p.add_argument("name", nargs="?")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args, extended=False)
        if args.command == "report":
            return _cmd_check(args, extended=True)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.action != "list" and not args.name:
            raise InvalidInput(f"fixtures {args.action} needs a fixture name")
        return _cmd_fixtures(args)
    except SoundnessError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except _REFUSED as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    except _UNREADABLE as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""
UniLattice Command Line

Entry point behind ``python -m unilattice``. Results go to stdout in one
buffered write; logs go to stderr.

Exit status: 0 success or property holds, 1 property fails, 2 input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from dotenv import load_dotenv

from ..algebra.norms import canonical_norm, drastic_norm, enumerate_norms
from ..algebra.optable import OpTable
from ..axioms import is_uninorm
from ..characterizations import evaluate_conditions
from ..config import get_settings
from ..constructions import construct
from ..core.lattice import BoundedLattice
from ..errors import ConstructionConflict, LatticeError, MissingNeutralParam, RoleMismatch
from ..lab.enumeration import enumerate_bounded_lattices
from ..lab.search import search_counterexample
from ..lab.sweep import legacy_checks, sweep
from ..models.condition import ConditionId
from ..models.construction import ConstructionKind
from ..models.operation import Axiom, NormRole
from ..models.sweep import TheoremId
from .lattice_file import LatticeFile, load_lattice, serialize_lattice
from .render import export_dot, render_cayley_table

logger = logging.getLogger(__name__)

Result = Tuple[int, str]


def resolve_sub_op(L: BoundedLattice, e: int, role: NormRole, spec: Optional[str]) -> OpTable:
    """
    Sub-operation named by ``--subop``: ``meet``, ``join``, ``drastic`` or
    ``index:<k>`` (k-th table in enumeration order). Defaults to the canonical norm.
    """
    if spec is None:
        return canonical_norm(L, e, role)
    if spec in ("meet", "join"):
        wanted = NormRole.TNORM if spec == "meet" else NormRole.TCONORM
        if wanted != role:
            raise RoleMismatch(role.value, wanted.value)
        return canonical_norm(L, e, role)
    if spec == "drastic":
        return drastic_norm(L, e, role)
    if spec.startswith("index:"):
        k = int(spec.split(":", 1)[1])
        for i, table in enumerate(enumerate_norms(L, e, role)):
            if i == k:
                return table
        raise ValueError(f"No {role.value} with index {k} at e={L.label(e)}")
    raise ValueError(f"Unknown sub-operation {spec!r}; use meet, join, drastic or index:<k>")


class UniLatticeCLI:
    """Command controller; every command returns an exit status and its output text."""

    def __init__(self):
        self.settings = get_settings()

    def _load(self, path: str) -> Tuple[BoundedLattice, LatticeFile]:
        L, parsed = load_lattice(path)
        logger.info(f"Loaded {L!r} from {path}")
        return L, parsed

    def _neutral(self, L: BoundedLattice, parsed: LatticeFile, label: Optional[str]) -> int:
        label = label or parsed.neutral
        if label is None:
            raise MissingNeutralParam()
        return L.check_neutral(L.index_of(label))

    def _build(self, args) -> Tuple[BoundedLattice, int, ConstructionKind, OpTable]:
        L, parsed = self._load(args.file)
        e = self._neutral(L, parsed, args.e)
        kind = ConstructionKind(args.kind)
        return L, e, kind, resolve_sub_op(L, e, kind.role, args.subop)

    def validate(self, args) -> Result:
        L, _ = self._load(args.file)
        lines = [
            f"lattice: {L.n} elements",
            f"bottom: {L.label(L.bottom)}",
            f"top: {L.label(L.top)}",
        ]
        return 0, "\n".join(lines) + "\n"

    def table(self, args) -> Result:
        L, e, kind, sub_op = self._build(args)
        U = construct(L, e, kind, sub_op)
        order = args.order.split() if args.order else None
        return 0, render_cayley_table(L, U, order)

    def check(self, args) -> Result:
        L, e, kind, sub_op = self._build(args)
        report = is_uninorm(L, construct(L, e, kind, sub_op), e)
        lines = [f"{kind.value} with {sub_op.name} at e={L.label(e)}: "
                 f"{'uninorm' if report.is_uninorm else 'not a uninorm'}"]
        lines += [f"{w.axiom.value}: {w.describe()}" for w in report.witnesses()]
        return (0 if report.is_uninorm else 1), "\n".join(lines) + "\n"

    def conditions(self, args) -> Result:
        L, parsed = self._load(args.file)
        e = self._neutral(L, parsed, args.e)
        T = resolve_sub_op(L, e, NormRole.TNORM, args.subop) if args.subop else None
        results = evaluate_conditions(L, e, T)
        return 0, "".join(f"{result.describe()}\n" for result in results.values())

    def sweep(self, args) -> Result:
        theorems = None if args.theorems == "all" else [TheoremId(t) for t in args.theorems.split(",")]
        report = sweep(args.max_n, theorems, jobs=args.jobs or self.settings.jobs)
        if args.out:
            Path(args.out).write_text(report.to_tsv(), encoding="utf-8")
            logger.info(f"Wrote {len(report.records)} case records to {args.out}")
        lines = report.summary_lines()
        for item in report.inconsistencies:
            lines.append(f"inconsistent: {item.theorem.value} e={item.e} predicted={item.predicted} "
                         f"observed={item.observed} {item.witness or ''}".rstrip())
        return (0 if report.consistent else 1), "\n".join(lines) + "\n"

    def hunt(self, args) -> Result:
        restrict = [ConditionId(c) for c in args.restrict.split(",")] if args.restrict else None
        found = search_counterexample(args.max_n, ConstructionKind(args.kind), Axiom(args.axiom), restrict)
        if found is None:
            return 0, f"no counterexample up to n={args.max_n}\n"
        lines = [f"counterexample ({found.outcome}) at n={found.n}, e={found.e}", found.lattice.rstrip(),
                 f"sub-operation: {found.sub_op}"]
        if found.witness is not None:
            lines.append(f"{found.witness.axiom.value}: {found.witness.describe()}")
        lines += [conflict.describe() for conflict in found.conflicts]
        return 1, "\n".join(lines) + "\n"

    def export_dot(self, args) -> Result:
        L, _ = self._load(args.file)
        return 0, export_dot(L)

    def lattices(self, args) -> Result:
        blocks = [serialize_lattice(L) for L in enumerate_bounded_lattices(args.n)]
        return 0, "\n".join(blocks)

    def legacy(self, args) -> Result:
        census = legacy_checks(args.max_n)
        return 0, census.to_csv(sep="\t", index=False, lineterminator="\n")

    def run(self, args) -> Result:
        handler = getattr(self, args.command.replace("-", "_"))
        try:
            return handler(args)
        except LatticeError as exc:
            if isinstance(exc, ConstructionConflict):
                lines = [str(exc)] + [conflict.describe() for conflict in exc.conflicts]
                return 1, "\n".join(lines) + "\n"
            logger.error(f"{type(exc).__name__}: {exc}")
            return 2, f"error: {exc}\n"
        except (OSError, ValueError) as exc:
            logger.error(f"{type(exc).__name__}: {exc}")
            return 2, f"error: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unilattice", description="Uninorms on finite bounded lattices")
    commands = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", help="Path to a .lat file")
        return sub

    def with_construction(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--e", help="Neutral element label (defaults to the file's neutral key)")
        sub.add_argument("--kind", required=True, choices=[k.value for k in ConstructionKind])
        sub.add_argument("--subop", help="meet, join, drastic or index:<k>")

    with_file("validate", "Parse and validate a lattice file")
    table = with_file("table", "Render the Cayley table of a construction")
    with_construction(table)
    table.add_argument("--order", help="Space-separated row/column order")
    with_construction(with_file("check", "Check the uninorm axioms of a construction"))
    conditions = with_file("conditions", "Evaluate the six structural conditions")
    conditions.add_argument("--e", help="Neutral element label")
    conditions.add_argument("--subop", help="t-norm used for the annihilation condition")
    with_file("export-dot", "Hasse diagram in DOT")

    sweep_cmd = commands.add_parser("sweep", help="Verify theorems over all small lattices")
    sweep_cmd.add_argument("--max-n", type=int, required=True)
    sweep_cmd.add_argument("--theorems", default="all", help="Comma-separated TheoremIds or 'all'")
    sweep_cmd.add_argument("--jobs", type=int, help="Worker processes")
    sweep_cmd.add_argument("--out", help="Write per-case records as TSV")

    hunt = commands.add_parser("hunt", help="Search for the smallest counterexample")
    hunt.add_argument("--kind", required=True, choices=[k.value for k in ConstructionKind])
    hunt.add_argument("--axiom", required=True,
                      choices=[a.value for a in Axiom if a != Axiom.CLOSURE])
    hunt.add_argument("--max-n", type=int, required=True)
    hunt.add_argument("--restrict", help="Comma-separated ConditionIds that must hold")

    lattices = commands.add_parser("lattices", help="List all bounded lattices of a size as .lat text")
    lattices.add_argument("--n", type=int, required=True)

    legacy = commands.add_parser("legacy", help="Census of the legacy constructions")
    legacy.add_argument("--max-n", type=int, required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    load_dotenv()
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    status, output = UniLatticeCLI().run(args)
    sys.stdout.write(output)
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())

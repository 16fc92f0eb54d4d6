"""
Command-line front end.

    conflab verify-catalog [--family TAG]
    conflab check FILE
    conflab series TARGET [--params k=v,...]
    conflab ann FAMILY [--level N]
    conflab aut FAMILY [--samples K] [--seed S]
    conflab solve {shift,shift-parametric,fgh,odd} [--degree D]
    conflab modules TAG [--probe-degree D]

Exit status is 0 when every check passes, 1 when one fails and 2 for
unusable input.
"""

import argparse
import sys
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from pydantic import ValidationError

from conflab import __version__
from conflab.cli.stream import ReportStream
from conflab.config import configuration
from conflab.core.annih import (
    build_annihilation,
    check_antisymmetry,
    check_super_jacobi_filtered,
    match_closed_form,
    read_shape,
)
from conflab.core.autgrp import (
    AUTOMORPHISM_CASES,
    group_axiom_sample,
    run_necessity_probes,
    soundness_sample,
)
from conflab.core.catalog import FAMILIES, FNICM_TABLE, build, family_tags
from conflab.core.classify import (
    derive_odd_structure,
    derived_families,
    solve_fgh,
    solve_shift,
    solve_shift_parametric,
)
from conflab.core.classify.shift import SHIFT_PARAMETERS
from conflab.core.exceptions import DomainError, LabException
from conflab.core.functions import timed
from conflab.core.lcsa import (
    ConformalSuperAlgebra,
    check_jacobi,
    check_skew,
    derived_series,
    even_part,
    is_perfect,
    is_solvable,
    lower_central_series,
)
from conflab.core.polyring import MultiPoly, parse
from conflab.core.repmod import (
    MODULE_FAMILIES,
    ConformalModule,
    build_module,
    check_module,
    irreducibility_probe,
    module_cases,
)
from conflab.core.structures import Report, Status
from conflab.models import AlgebraFile
from conflab.util.logging import get_logger, log_exceptions

SOLVE_TEMPLATES = ("shift", "shift-parametric", "fgh", "odd")

Params = dict[str, str]


def parse_params(text: Optional[str]) -> Params:
    """
    ``"a=1,b=0,Q=d+2*l"`` to ``{"a": "1", "b": "0", "Q": "d+2*l"}``.

    :raises ValueError: for an item without ``=`` or a repeated key.
    """
    params: Params = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ValueError(f"parameter '{item}' must read key=value")
        if key in params:
            raise ValueError(f"parameter '{key}' given twice")
        params[key] = value
    return params


def perturb(alg: ConformalSuperAlgebra) -> ConformalSuperAlgebra:
    """Add the first even generator to its own self-bracket."""
    first = next(b.name for b in alg.basis if not b.is_odd)
    table = {key: dict(row) for key, row in alg.structure.items()}
    row = table.setdefault((first, first), {})
    row[first] = row.get(first, MultiPoly()) + 1
    return ConformalSuperAlgebra(alg.basis, table, f"{alg.name}[fault]")


@timed
def run_skew(alg: ConformalSuperAlgebra) -> Report:
    return check_skew(alg)


@timed
def run_jacobi(alg: ConformalSuperAlgebra) -> Report:
    return check_jacobi(alg)


@timed
def run_module(mod: ConformalModule) -> Report:
    return check_module(mod)


def skipped(check: str, target: str, reason: str) -> Report:
    return Report(check, target, Status.SKIPPED, detail={"reason": reason})


@configuration("settings", "conflab.config.settings")
class CommandRunner:
    """
    Runs one subcommand against a :class:`ReportStream`. Flags left unset fall
    back to the attached :class:`~conflab.config.Settings`.
    """

    logger = get_logger("conflab.cli")

    def __init__(self, args: argparse.Namespace, stream: ReportStream):
        self.args = args
        self.stream = stream
        self.params = parse_params(getattr(args, "params", None))

    def setting(self, flag: str, key: str):
        value = getattr(self.args, flag, None)
        return self._config[key] if value is None else value

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self.args.command.replace('-', '_')}")
        handler()
        return self.stream.summarize()

    @log_exceptions
    def cmd_verify_catalog(self) -> None:
        wanted = self.args.family
        if wanted is not None and wanted not in FAMILIES:
            build(wanted)
        tags = [t for t in family_tags() if wanted in (None, t)]
        for i, tag in enumerate(tags):
            alg = build(tag)
            if self.args.inject_fault and i == 0:
                alg = perturb(alg)
            self.stream.emit(run_skew(alg))
            self.stream.emit(run_jacobi(alg))
        for module_spec, family_spec in module_cases():
            if wanted not in (None, family_spec.tag):
                continue
            mod = build_module(module_spec, family_spec)
            self.stream.emit(run_module(mod))

    @log_exceptions
    def cmd_check(self) -> None:
        alg = AlgebraFile.load(self.args.file).to_algebra()
        self.stream.emit(run_skew(alg))
        self.stream.emit(run_jacobi(alg))

    def _algebra(self, target: str) -> ConformalSuperAlgebra:
        path = Path(target)
        if target not in FAMILIES and path.suffix == ".json":
            return AlgebraFile.load(path).to_algebra()
        return build(target, **self.params)

    @log_exceptions
    def cmd_series(self) -> None:
        alg = self._algebra(self.args.target)
        cap = self.setting("cap", "series_cap")
        derived = derived_series(alg, cap)
        central = lower_central_series(alg, cap)
        self.stream.emit(
            Report.verdict(
                "series",
                alg.name,
                not (derived.capped or central.capped),
                solvable=derived.terminates_at_zero,
                nilpotent=central.terminates_at_zero,
                perfect=is_perfect(alg),
                derived_ranks=[len(t.hnf_basis) for t in derived.terms],
                lower_central_ranks=[len(t.hnf_basis) for t in central.terms],
            )
        )
        even = even_part(alg)
        self.stream.emit(
            Report.verdict(
                "solvable_even_part",
                alg.name,
                is_solvable(alg, cap) == is_solvable(even, cap),
                even_part=even.name,
            )
        )

    @log_exceptions
    def cmd_ann(self) -> None:
        alg = build(self.args.family, **self.params)
        level = self.setting("level", "annihilation_level")
        lie = build_annihilation(alg, level)
        self.stream.emit(timed(check_antisymmetry)(lie))
        self.stream.emit(timed(check_super_jacobi_filtered)(lie))
        try:
            read_shape(alg)
        except DomainError as e:
            self.stream.emit(skipped("closed_form", f"Lie({alg.name})", e.info))
            return
        self.stream.emit(timed(match_closed_form)(lie))

    def _aut_cases(self) -> Iterable[tuple[str, Mapping]]:
        tag = self.args.family
        if self.params:
            return [(tag, self.params)]
        cases = [(t, p) for t, p in AUTOMORPHISM_CASES if t == tag]
        if not cases:
            return [(tag, {})]
        return cases

    @log_exceptions
    def cmd_aut(self) -> None:
        count = self.setting("samples", "samples")
        seed = self.setting("seed", "seed")
        for tag, params in self._aut_cases():
            self.stream.emit(timed(group_axiom_sample)(tag, params, count, seed))
            self.stream.emit(timed(soundness_sample)(tag, params, count, seed))
            self.stream.emit_all(run_necessity_probes(tag, params))

    @log_exceptions
    def cmd_solve(self) -> None:
        degree = self.setting("degree", "degree_bound")
        template = self.args.template
        if template == "shift":
            self._solve_shift(degree)
        elif template == "fgh":
            if set(self.params) != {"f"}:
                raise DomainError("fgh takes exactly the parameter f")
            space = solve_fgh(parse(self.params["f"]), degree)
            self._emit_space("solve_fgh", f"fgh(f={self.params['f']})", space)
        elif template == "shift-parametric":
            branches = solve_shift_parametric(degree)
            for branch in branches:
                self.stream.emit(
                    Report.verdict(
                        "shift_branch",
                        f"deg f = {branch.degree}",
                        True,
                        branch=branch.describe(),
                    )
                )
        else:
            self._solve_odd(degree)

    def _solve_shift(self, degree: int) -> None:
        unknown = set(self.params) - set(SHIFT_PARAMETERS)
        if unknown:
            raise DomainError(f"shift takes a, b, alpha, beta; got {sorted(unknown)}")
        values = {k: self.params.get(k, "0") for k in SHIFT_PARAMETERS}
        target = ",".join(f"{k}={v}" for k, v in values.items())
        space = solve_shift(degree=degree, **values)
        self._emit_space("solve_shift", f"shift({target})", space)

    def _emit_space(self, check: str, target: str, space) -> None:
        self.stream.emit(
            Report.verdict(
                check,
                target,
                space.verify(),
                dimension=space.dimension,
                basis=space.describe(),
            )
        )

    def _solve_odd(self, degree: int) -> None:
        tag = self.args.family
        if tag is None:
            raise DomainError("solve odd needs --family O, A, B, C or D")
        structures = derive_odd_structure(tag, self.params, degree)
        for structure in structures:
            self.stream.emit(
                Report.verdict(
                    "odd_structure_in_catalog",
                    structure.algebra.name,
                    bool(structure.tags),
                    structure=structure.describe(),
                )
            )
        self.logger.info(
            f"families reached from type {tag}: "
            f"{', '.join(derived_families(structures)) or 'none'}"
        )

    @log_exceptions
    def cmd_modules(self) -> None:
        tag = self.args.tag
        bound = self.setting("probe_degree", "probe_degree")
        if tag in FAMILIES:
            alg = build(tag, **self.params)
            mods = [build_module(m, alg) for m in FNICM_TABLE.get(tag, ())]
        elif tag in MODULE_FAMILIES:
            mods = [build_module(tag, **self.params)]
        else:
            build_module(tag)
            return
        if not mods:
            self.stream.emit(skipped("module", tag, "no irreducible modules listed"))
        for mod in mods:
            self.stream.emit(run_module(mod))
            if not mod.is_instantiated():
                reason = "parameters must be numeric for the probe"
                self.stream.emit(skipped("irreducibility", mod.name, reason))
                continue
            result = irreducibility_probe(mod, bound)
            self.stream.emit(
                Report.verdict(
                    "irreducibility",
                    mod.name,
                    True,
                    reducible=result.reducible,
                    witness=result.witness.label if result.witness else None,
                    tried=result.tried,
                )
            )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="slot values, e.g. a=1,b=0,Q=d+2*l")
    common.add_argument("--degree", type=int, help="unknown polynomial degree bound")
    common.add_argument("--level", type=int, help="annihilation truncation cap")
    common.add_argument("--samples", type=int, help="automorphism samples")
    common.add_argument("--seed", type=int, help="sampling seed")
    common.add_argument("--cap", type=int, help="series iteration limit")
    common.add_argument("--probe-degree", type=int, help="probe candidate degree")
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    common.add_argument("--timings", action="store_true", help="report wall times")

    parser = argparse.ArgumentParser(
        prog="conflab",
        description="Verify rank (2+1) Lie conformal superalgebras and their modules.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify-catalog", parents=[common])
    verify.add_argument("--family", help="only this catalog family")
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    check = commands.add_parser("check", parents=[common])
    check.add_argument("file", help="algebra JSON file")

    series = commands.add_parser("series", parents=[common])
    series.add_argument("target", help="catalog family or algebra JSON file")

    ann = commands.add_parser("ann", parents=[common])
    ann.add_argument("family")

    aut = commands.add_parser("aut", parents=[common])
    aut.add_argument("family")

    solve = commands.add_parser("solve", parents=[common])
    solve.add_argument("template", choices=SOLVE_TEMPLATES)
    solve.add_argument("--family", help="even type for the odd template")

    modules = commands.add_parser("modules", parents=[common])
    modules.add_argument("tag", help="catalog family or module family")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    stream = ReportStream(as_json=args.json, timings=args.timings)
    try:
        return CommandRunner(args, stream).run()
    except (LabException, ValidationError, ValueError, OSError) as e:
        CommandRunner.logger.error(f"{args.command}: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status is 0 when every verdict passes, 1 when a check fails and 2 when
the instance file cannot be read or has the wrong shape.
"""

from __future__ import annotations

import json
import sys

import click

from .arith import BULLET, CIRC
from .bialg import check_classical_qt, is_cocommutative, star_inverse_check, validate_bialgebra
from .duoidal_core import (DEFAULT_OBJECTS, DuoidalStructure, check_bimonoid,
                           check_double_opmonoidal, check_duoidal_axioms,
                           check_em_duoidal_lift, derived_iota)
from .duoidal_core import INTERCHANGE_SQUARE, LIFT as EM_LIFT
from .errors import MalformedInstance, PrerequisiteFailed
from .instance import Instance, load, scalar_out
from .lindist import (IMPLIES, b0_conjugation_report, check_lindist_lift_nonplanar,
                      check_lindist_lift_planar, distributors_from_normal)
from .monad_em import check_bimonad_laws, probe_modules
from .report import CheckReport, merge
from .rmatrix import (DEFAULT_CONVENTION, EMBEDDING, FIRST_ON_C, SECOND_ON_C, STAR,
                      DuoidalRMatrix, check_braiding, check_rmatrix_axioms, check_xi,
                      embed_classical, r_from_xi, roundtrip_check, roundtrip_check_xi, xi_rule)

EXIT_PASS, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2

NORMAL = "def:normal-duoidal-category"
BRAIDED_IS_DUOIDAL = "ex:braided-cat-is-duoidal"
DOUBLE_OPMONOIDAL = "def:duoidal-bimonad"
COCOMMUTATIVE = "ex:cocommutative-bimonad"
THEOREM = "thm:r-matrices-iff-duoidal-structure"
R_FROM_XI = "prop:duoidal-structure-r-matrix"
NONPLANAR = "prop:linearly-distributive-monad"
PLANAR = "prop:planar-linearly-distributive-monad"
SUITES = ("duoidal", "double-opmonoidal", "rmatrix", "lindist-nonplanar", "lindist-planar", "all")


class Context:
    def __init__(self, inst: Instance):
        self.inst = inst
        self.S = inst.S
        self.D = DuoidalStructure.symmetric_vect(inst.field)
        extra = [s for s in inst.test_spaces if s not in DEFAULT_OBJECTS]
        self.objects = DEFAULT_OBJECTS + tuple(extra)
        self.modules = probe_modules(self.S) + list(inst.test_modules)
        self._double = None

    @property
    def double(self) -> CheckReport:
        if self._double is None:
            self._double = check_double_opmonoidal(self.S, self.D, self.objects)
        return self._double

    def rmatrix(self) -> tuple[DuoidalRMatrix, str]:
        """The instance's R-matrix, or the trivial one when the file has none."""
        if self.inst.has_rmatrix:
            return self.inst.rmatrix(), ""
        return DuoidalRMatrix.trivial(self.S), "no R-matrix in file: trivial r4 = 1⊗1⊗1⊗1"


def _r4_text(f, Rm: DuoidalRMatrix) -> str:
    terms = " + ".join(f"{scalar_out(f, c)}·e{list(k)}" for k, c in sorted(Rm.r4.items()))
    return terms or "0"


# suites


def validation(inst: Instance) -> CheckReport:
    out = validate_bialgebra(inst.circ)
    if inst.bullet is not inst.circ:
        second = validate_bialgebra(inst.bullet)
        for v in second.verdicts:
            v.note = (v.note + "; " if v.note else "") + "second comultiplication"
        out.extend(second)
    return out


def suite_duoidal(ctx: Context) -> CheckReport:
    D = ctx.D
    report = check_duoidal_axioms(D, ctx.objects, ctx.objects[:2])
    got = derived_iota(D)
    report.add(NORMAL, ctx.inst.field.eq(got, D.iota), None, "",
               f"derived ι = {scalar_out(ctx.inst.field, got)}, stored ι = "
               f"{scalar_out(ctx.inst.field, D.iota)}")
    report.add(BRAIDED_IS_DUOIDAL, all(v.passed for v in report.verdicts), None, "",
               "ζ = id⊗σ⊗id with σ the symmetry of Vect")
    report.extend(check_bimonoid(D, ctx.inst.circ))
    report.suite = "duoidal"
    return report


def suite_double_opmonoidal(ctx: Context) -> CheckReport:
    S, inst = ctx.S, ctx.inst
    report = merge("double-opmonoidal", check_bimonad_laws(S, CIRC), check_bimonad_laws(S, BULLET))
    double = ctx.double
    report.extend(double)
    report.add(DOUBLE_OPMONOIDAL, double.passed, None, "", "all unit and interchange squares")
    square = double.diagram_passed(INTERCHANGE_SQUARE)
    if inst.bullet is inst.circ:
        cocomm, label = is_cocommutative(inst.circ)
        note = "cocommutative" if cocomm else f"not cocommutative at {label}"
        report.add(COCOMMUTATIVE, square == cocomm, None, "",
                   f"interchange square {'holds' if square else 'fails'}; {note}")
    else:
        report.add(COCOMMUTATIVE, True, None, "", "two comultiplications: not applicable")
    if double.passed:
        report.extend(check_em_duoidal_lift(S, ctx.D, ctx.modules, ctx.modules[:2],
                                            strict=False, objects=ctx.objects))
    else:
        report.add(EM_LIFT, True, None, "", "hypothesis fails: the monad is not double opmonoidal")
    return report


def suite_rmatrix(ctx: Context) -> CheckReport:
    inst = ctx.inst
    Rm, note = ctx.rmatrix()
    report = CheckReport("rmatrix")
    if inst.r_classical is not None:
        qt = check_classical_qt(inst.circ, inst.r_classical)
        report.extend(qt)
        report.add(EMBEDDING, qt.passed, None, "", f"embedded r4 = {_r4_text(inst.field, Rm)}")
        if inst.r_inverse is not None and qt.passed:
            report.add(STAR, star_inverse_check(inst.circ, inst.r_classical, inst.r_inverse),
                       None, "", "r * r̄ = 1⊗1 = r̄ * r")
            report.extend(check_braiding(inst.circ, inst.r_classical, ctx.modules[:2],
                                         inst.r_inverse, strict=False))
    axioms = check_rmatrix_axioms(ctx.S, Rm, ctx.modules, ctx.objects[:2])
    if note:
        for v in axioms.verdicts:
            v.note = (v.note + "; " if v.note else "") + note
    return report.extend(axioms)


def suite_xi(ctx: Context) -> CheckReport:
    Rm, _ = ctx.rmatrix()
    return check_xi(ctx.S, Rm, ctx.modules, ctx.modules[:2])


def suite_roundtrip(ctx: Context) -> CheckReport:
    S, f = ctx.S, ctx.inst.field
    Rm, note = ctx.rmatrix()
    report = CheckReport("roundtrip")
    back = r_from_xi(S, xi_rule(S, Rm))
    same = roundtrip_check(S, Rm)
    text = "reconstructed identically" if same else f"reconstructed as {_r4_text(f, back)}"
    report.add(THEOREM, same, None, "",
               f"r4 = {_r4_text(f, Rm)} {text}" + (f"; {note}" if note else ""))
    report.add(R_FROM_XI, roundtrip_check_xi(S, xi_rule(S, Rm), ctx.modules), None,
               ", ".join(M.name for M in ctx.modules), "ξ rebuilt from its R-matrix agrees")
    return report


def suite_lindist(ctx: Context, planar: bool) -> CheckReport:
    S = ctx.S
    dist, report = distributors_from_normal(ctx.D, ctx.objects, planar=planar, strict=False)
    report.extend(b0_conjugation_report(S))
    nonplanar = check_lindist_lift_nonplanar(S, dist, ctx.objects)
    report.extend(nonplanar)
    report.add(NONPLANAR, nonplanar.passed, None, "",
               "the module category is non-planar linearly distributive")
    if planar:
        lifted = check_lindist_lift_planar(S, dist, ctx.objects)
        report.extend(lifted)
        report.add(PLANAR, lifted.passed and nonplanar.passed, None, "",
                   "the module category is linearly distributive")
    report.suite = "lindist-planar" if planar else "lindist-nonplanar"
    return report


def suite_implies(ctx: Context, planar_report: CheckReport) -> CheckReport:
    report = CheckReport("double opmonoidal ⇒ linearly distributive")
    if ctx.double.passed:
        report.add(IMPLIES, planar_report.passed, None, "", "all four lift squares hold")
    else:
        report.add(IMPLIES, True, None, "", "hypothesis fails: the monad is not double opmonoidal")
    return report


def run_suite(ctx: Context, suite: str) -> CheckReport:
    if suite == "duoidal":
        return suite_duoidal(ctx)
    if suite == "double-opmonoidal":
        return suite_double_opmonoidal(ctx)
    if suite == "rmatrix":
        return suite_rmatrix(ctx)
    if suite == "lindist-nonplanar":
        return suite_lindist(ctx, planar=False)
    if suite == "lindist-planar":
        return suite_lindist(ctx, planar=True)
    if suite == "all":
        planar = suite_lindist(ctx, planar=True)
        return merge("all", validation(ctx.inst), suite_duoidal(ctx), suite_double_opmonoidal(ctx),
                     suite_rmatrix(ctx), suite_xi(ctx), suite_roundtrip(ctx), planar,
                     suite_implies(ctx, planar))
    raise ValueError(f"unknown suite {suite!r}")


# plumbing


def _emit(report: CheckReport, as_json: bool, verbose: bool) -> int:
    click.echo(report.to_json(indent=1) if as_json else report.render(verbose))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _fail_malformed(exc: MalformedInstance, as_json: bool) -> int:
    if as_json:
        click.echo(json.dumps({"error": "malformed", "location": exc.location,
                               "message": exc.message}, ensure_ascii=False))
    else:
        click.echo(f"malformed instance at {exc.location or '<file>'}: {exc.message}", err=True)
    return EXIT_MALFORMED


def _prepare(path: str, as_json: bool, verbose: bool):
    """Load and validate; returns a context or an exit status."""
    try:
        inst = load(path)
        ctx = Context(inst)
    except MalformedInstance as exc:
        return _fail_malformed(exc, as_json)
    except FileNotFoundError as exc:
        click.echo(str(exc), err=True)
        return EXIT_MALFORMED
    valid = validation(inst)
    if not valid.passed:
        _emit(valid, as_json, verbose)
        return EXIT_FAIL
    return ctx


def _guarded(action, as_json: bool, verbose: bool) -> int:
    try:
        return _emit(action(), as_json, verbose)
    except MalformedInstance as exc:
        return _fail_malformed(exc, as_json)
    except PrerequisiteFailed as exc:
        if exc.report is not None:
            _emit(exc.report, as_json, verbose)
        click.echo(f"prerequisite failed: {exc}", err=True)
        return EXIT_FAIL


json_option = click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
verbose_option = click.option("-v", "--verbose", is_flag=True, help="List every verdict.")


@click.group()
def main():
    """Exact checks of duoidal structures and R-matrices on bialgebra instances.

    FILE is a path to an instance file or the name of a bundled instance.
    """


@main.command()
@click.argument("file")
@json_option
@verbose_option
def validate(file, as_json, verbose):
    """Check the bialgebra axioms."""
    try:
        inst = load(file)
    except MalformedInstance as exc:
        sys.exit(_fail_malformed(exc, as_json))
    except FileNotFoundError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MALFORMED)
    sys.exit(_emit(validation(inst), as_json, verbose))


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.argument("file")
@json_option
@verbose_option
def check(suite, file, as_json, verbose):
    """Run a named check suite."""
    ctx = _prepare(file, as_json, verbose)
    if isinstance(ctx, int):
        sys.exit(ctx)

    def action():
        report = run_suite(ctx, suite)
        if suite != "all":
            report.suite = suite
        return report

    sys.exit(_guarded(action, as_json, verbose))


@main.command()
@click.argument("file")
@json_option
@verbose_option
def roundtrip(file, as_json, verbose):
    """Rebuild r4 from the interchange law it induces, and ξ from that r4."""
    ctx = _prepare(file, as_json, verbose)
    if isinstance(ctx, int):
        sys.exit(ctx)
    # two verdicts only, so always show their notes
    sys.exit(_guarded(lambda: suite_roundtrip(ctx), as_json, True))


@main.command("embed-classical")
@click.argument("file")
@click.option("--convention", type=click.Choice([SECOND_ON_C, FIRST_ON_C]),
              default=DEFAULT_CONVENTION, show_default=True,
              help="Which classical leg lands on the c slot.")
@json_option
@verbose_option
def embed_classical_cmd(file, convention, as_json, verbose):
    """Embed a two-leg R-matrix as a duoidal one and check the five diagrams."""
    ctx = _prepare(file, as_json, verbose)
    if isinstance(ctx, int):
        sys.exit(ctx)
    inst = ctx.inst
    if inst.r_classical is None:
        sys.exit(_fail_malformed(MalformedInstance("a two-leg rmatrix block is required",
                                                   "rmatrix"), as_json))

    def action():
        Rm = embed_classical(inst.circ, inst.r_classical, convention)
        report = CheckReport("embed-classical")
        report.add(EMBEDDING, True, None, "", f"{convention}: r4 = {_r4_text(inst.field, Rm)}")
        return report.extend(check_rmatrix_axioms(ctx.S, Rm, ctx.modules, ctx.objects[:2]))

    sys.exit(_guarded(action, as_json, verbose))


__all__ = ["EXIT_FAIL", "EXIT_MALFORMED", "EXIT_PASS", "SUITES", "main", "run_suite"]

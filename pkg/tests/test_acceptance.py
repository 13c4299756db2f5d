"""The nine acceptance criteria, one test each, all with exact equality.

Each test prints a single ``criterion N: PASS`` or ``criterion N: FAIL`` line.
Run ``pytest tests/test_acceptance.py -v`` to see them.
"""

import functools
import json
import time

import pytest
from click.testing import CliRunner

import oracle
from duoidal.arith import QQ, FieldSpec
from duoidal.bialg import ClassicalRElement, is_cocommutative, star_inverse_check, validate_bialgebra
from duoidal.cli import main
from duoidal.corpus import cyclic_group_algebra, sweedler, sweedler_r0
from duoidal.duoidal_core import (ASSOC1, ASSOC2, DEFAULT_OBJECTS, INTERCHANGE_SQUARE, UNITALITY,
                                  DuoidalStructure, check_double_opmonoidal, check_duoidal_axioms,
                                  derived_iota)
from duoidal.instance import bundled_path, load
from duoidal.lindist import (LIFT3, check_double_opmonoidal_implies_lindist,
                             check_lindist_lift_nonplanar, check_lindist_lift_planar)
from duoidal.monad_em import SeparatelyOpmonoidalData, probe_modules
from duoidal.report import CheckReport
from duoidal.rmatrix import (FIVE_DIAGRAMS, LIFT, DuoidalRMatrix, check_braiding,
                             check_rmatrix_axioms, check_xi, embed_classical, roundtrip_check,
                             roundtrip_check_xi, xi_rule)

F3 = FieldSpec.prime(3)
GOOD = ["qc2", "f3c2", "f5c2", "sweedler"]
CORRUPTED = ["bad_nonassociative", "bad_qc2_coassoc", "bad_qc2_grouplike", "bad_sweedler_comul",
             "bad_sweedler_counit"]
VALID = ["c2_functions_twisted", "f3c2", "f5c2", "qc2", "qc2_classical_trivial", "qc2_trivial",
         "sweedler", "sweedler_r0", "sweedler_r4_mutant", "sweedler_r_lambda1"]
WITH_R = ["qc2_classical_trivial", "qc2_trivial", "sweedler_r0", "sweedler_r4_mutant",
          "sweedler_r_lambda1"]


MODULE_MAP = "prop:r-matrices-preduoidal-structure"
_outcome = {}


@pytest.fixture
def verdict(capsys, request):
    """Print one line for the criterion whether the body passes or raises.

    A criterion split over several tests prints once, after its last part.
    """
    number = request.node.name.split("_")[1]
    state = {"ok": False}
    yield state
    _outcome[number] = _outcome.get(number, True) and state["ok"]
    if not request.node.get_closest_marker("more_parts"):
        line = f"criterion {number}: {'PASS' if _outcome[number] else 'FAIL'}"
        known = request.node.get_closest_marker("xfail")
        if known and not _outcome[number]:
            line += f" (known: {known.kwargs['reason']})"
        with capsys.disabled():
            print("\n" + line)


@functools.cache
def rmatrix_report(name):
    inst = load(name)
    Rm = inst.rmatrix()
    return inst.S, Rm, check_rmatrix_axioms(inst.S, Rm)


@functools.cache
def double_report(name):
    inst = load(name)
    return check_double_opmonoidal(inst.S, DuoidalStructure.symmetric_vect(inst.field))


def _passing_rmatrices():
    return [(name, *rmatrix_report(name)[:2]) for name in WITH_R if rmatrix_report(name)[2].passed]


def test_1_bialgebra_corpus(verdict):
    for name in GOOD:
        start = time.perf_counter()
        assert validate_bialgebra(load(name).circ).passed, name
        assert time.perf_counter() - start < 1
    for name in CORRUPTED:
        start = time.perf_counter()
        report = validate_bialgebra(load(name).circ)
        assert time.perf_counter() - start < 1
        want = oracle.axiom_failures(oracle.from_json(json.loads(bundled_path(name).read_text())))
        got = {v.diagram: v.witness.index for v in report.failures()}
        assert want and got == want, name
    verdict["ok"] = True


def test_2_cocommutativity_equivalence(verdict):
    seen = set()
    for name in VALID:
        inst = load(name)
        if inst.bullet is not inst.circ or inst.circ.name in seen:
            continue
        seen.add(inst.circ.name)
        cocomm, _ = is_cocommutative(inst.circ)
        assert double_report(name).diagram_passed(INTERCHANGE_SQUARE) == cocomm, name
    assert double_report("qc2").passed
    bad = double_report("sweedler")
    assert "x" in bad.first_failure(INTERCHANGE_SQUARE).witness.label.split("⊗")
    verdict["ok"] = True


@pytest.mark.more_parts
def test_3_duoidal_axioms(verdict):
    sym = DuoidalStructure.symmetric_vect(QQ)
    report = check_duoidal_axioms(sym, DEFAULT_OBJECTS)
    for diagram in (ASSOC1, ASSOC2, UNITALITY):
        assert report.diagram_passed(diagram) and report.for_diagram(diagram)
    assert report.passed
    assert QQ.eq(derived_iota(sym), sym.iota)
    verdict["ok"] = True


@pytest.mark.xfail(strict=True, reason="the no-swap mutant agrees on both associativity "
                   "composites, which are the identity on flattened indices; only "
                   "naturality of ζ catches it")
def test_3_no_swap_mutant_fails_assoc1(verdict):
    mutant = check_duoidal_axioms(DuoidalStructure.no_swap_mutant(QQ), DEFAULT_OBJECTS[:2])
    assert not mutant.passed
    assert not mutant.diagram_passed(ASSOC1)
    verdict["ok"] = True


def test_4_classical_embedding(verdict):
    inst = load("sweedler_r0")
    S = inst.S
    for name in ("sweedler_r0", "sweedler_r_lambda1"):
        start = time.perf_counter()
        report = rmatrix_report(name)[2]
        assert time.perf_counter() - start < 10
        for diagram in FIVE_DIAGRAMS:
            assert report.diagram_passed(diagram) and report.for_diagram(diagram), (name, diagram)
    mutant = load("sweedler_r4_mutant").r4
    assert mutant.same_as(DuoidalRMatrix(QQ, 4, {(0, 0, 1, 0): 1}))
    bad = check_rmatrix_axioms(S, mutant).first_failure(LIFT)
    assert bad is not None and bad.witness is not None
    assert bad.witness.label in inst.circ.basis_names
    verdict["ok"] = True


def test_5_roundtrip(verdict):
    cases = _passing_rmatrices()
    assert [name for name, _, _ in cases] == ["qc2_classical_trivial", "qc2_trivial",
                                             "sweedler_r0", "sweedler_r_lambda1"]
    for field in (QQ, F3):
        c2 = SeparatelyOpmonoidalData.from_bialgebra(cyclic_group_algebra(2, field))
        h4 = sweedler(field)
        S = SeparatelyOpmonoidalData.from_bialgebra(h4)
        more = [(f"c2/{field}", c2, DuoidalRMatrix.trivial(c2)),
                (f"h4/{field}", S, embed_classical(h4, sweedler_r0(h4)))]
        for name, S, Rm in more:
            assert check_rmatrix_axioms(S, Rm).passed, name
        cases += more
    for name, S, Rm in cases:
        assert roundtrip_check(S, Rm), name
        assert roundtrip_check_xi(S, xi_rule(S, Rm)), name
    verdict["ok"] = True


def test_6_xi_is_a_module_morphism(verdict):
    for name, S, Rm in _passing_rmatrices():
        assert [M.name for M in probe_modules(S)] == ["⊥", "free", "(free∘free)"]
        report = check_xi(S, Rm)
        # one module-map verdict per probe quadruple, plus the structure maps
        quads = [v for v in report.for_diagram(MODULE_MAP) if v.where.count(",") == 3]
        assert len(quads) == 3 ** 4, name
        assert report.passed, name
    verdict["ok"] = True


def test_7_linear_distributive_lifts(verdict):
    for name in ("qc2", "sweedler"):
        assert check_lindist_lift_nonplanar(load(name).S).passed
    for name in ("qc2", "f3c2", "f5c2"):
        assert check_lindist_lift_planar(load(name).S).passed
    bad = check_lindist_lift_planar(load("sweedler").S).first_failure(LIFT3)
    assert bad.witness.label == "x"
    for name in VALID:
        if double_report(name).passed:
            inst = load(name)
            D = DuoidalStructure.symmetric_vect(inst.field)
            assert check_double_opmonoidal_implies_lindist(inst.S, D).passed, name
    verdict["ok"] = True


def test_8_star_inverse(verdict):
    h4 = sweedler()
    r0 = sweedler_r0(h4)
    assert star_inverse_check(h4, r0, r0)
    assert not star_inverse_check(h4, r0, ClassicalRElement.unit(h4))
    report = check_braiding(h4, r0, r_inv=r0)
    hexagons = [v for v in report.verdicts if v.note in ("σ_{m⊗n,p}", "σ_{m,n⊗p}")]
    assert len(hexagons) == 2 * 3 ** 3
    assert report.passed
    verdict["ok"] = True


def test_9_cli_contract(verdict):
    runner = CliRunner()
    res = runner.invoke(main, ["check", "rmatrix", "sweedler_r0.json", "--json"])
    assert res.exit_code == 0
    report = CheckReport.from_json(res.stdout)
    assert report.to_json(indent=1) == res.stdout.rstrip("\n")
    assert report.passed and all(report.for_diagram(d) for d in FIVE_DIAGRAMS)
    res = runner.invoke(main, ["check", "lindist-planar", "sweedler.json"])
    assert res.exit_code == 1
    lines = res.output.splitlines()
    at = lines.index("  [FAIL] eq:linearly-distributive-monad-3 (27 checked)")
    assert lines[at + 2].startswith("           witness at x: ")
    res = runner.invoke(main, ["roundtrip", "qc2_trivial.json"])
    assert res.exit_code == 0
    assert "r4 = 1·e[0, 0, 0, 0] reconstructed identically" in res.output
    for args in (["check", "lindist-planar", "sweedler.json"], ["roundtrip", "qc2_trivial.json"]):
        res = runner.invoke(main, args + ["--json"])
        assert CheckReport.from_json(res.stdout).to_json(indent=1) == res.stdout.rstrip("\n")
    verdict["ok"] = True

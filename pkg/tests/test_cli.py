import json

import pytest
from click.testing import CliRunner

from duoidal.cli import EXIT_FAIL, EXIT_MALFORMED, EXIT_PASS, main
from duoidal.report import CheckReport

# every diagram id a report may carry besides the plain axiom names
LABELS = {
    "def:bimonad", "def:duoidal-bimonad", "def:duoidal-bimonoid", "def:duoidal-category",
    "def:normal-duoidal-category", "def:r-matrix-preduoidal", "eq:cocomm-trialg-unit-automatic",
    "eq:cocommutative-duoidal-bimonad", "eq:duoidal-cat-unitality",
    "eq:linearly-distributive-monad-1", "eq:linearly-distributive-monad-2",
    "eq:linearly-distributive-monad-3", "eq:linearly-distributive-monad-4",
    "eq:middle-interchange-assoc1", "eq:middle-interchange-assoc2", "eq:normal-B0-conjugate",
    "eq:normal-duoidal-to-linear-dist", "eq:pi-nu-morphisms-of-algebras", "eq:r-matrix-1",
    "eq:r-matrix-2", "eq:r-matrix-lift", "eq:r-matrix-unitality1", "eq:r-matrix-unitality2",
    "ex:braided-cat-is-duoidal", "ex:cocommutative-bimonad",
    "ex:traditional-r-matrix-to-duoidal-r-matrix",
    "prop:cocommutative-bimonad-lifts-duoidal-structure",
    "prop:cocommutative-trimonads-are-pastro-monads", "prop:duoidal-structure-r-matrix",
    "prop:linearly-distributive-monad", "prop:planar-linearly-distributive-monad",
    "prop:r-matrices-preduoidal-structure", "rmk:star-invertability",
    "thm:r-matrices-iff-duoidal-structure",
}
PLUMBING = {
    "associativity", "unit-left", "unit-right", "coassociativity", "counit-left", "counit-right",
    "comultiplication-multiplicative", "counit-multiplicative", "comultiplication-unit",
    "counit-unit", "qt-comultiply-first-leg", "qt-comultiply-second-leg", "qt-quasicocommutative",
}
FIVE = ["eq:r-matrix-unitality1", "eq:r-matrix-unitality2", "eq:r-matrix-lift",
        "eq:r-matrix-1", "eq:r-matrix-2"]


def run(*args):
    return CliRunner().invoke(main, list(args))


# the three documented invocations are covered by the acceptance tests
@pytest.mark.parametrize("args", [("validate", "bad_sweedler_counit"),
                                  ("check", "lindist-nonplanar", "f3c2"),
                                  ("embed-classical", "qc2_classical_trivial")])
def test_json_reparses(args):
    res = run(*args, "--json")
    report = CheckReport.from_json(res.stdout)
    assert report.to_json(indent=1) == res.stdout.rstrip("\n")
    assert (res.exit_code == EXIT_PASS) == report.passed


def test_validate_exit_codes():
    assert run("validate", "qc2").exit_code == EXIT_PASS
    res = run("validate", "bad_sweedler_counit")
    assert res.exit_code == EXIT_FAIL
    assert "witness at g: left = 0; right = 1·[1]" in res.output


def test_checks_refuse_invalid_bialgebras():
    res = run("check", "duoidal", "bad_qc2_coassoc")
    assert res.exit_code == EXIT_FAIL
    assert res.output.startswith("suite bialgebra: FAIL")


def test_malformed_file(tmp_path):
    data = {"field": {"kind": "rationals"}, "bialgebra": {"dim": 2}}
    p = tmp_path / "short.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    res = run("check", "all", str(p))
    assert res.exit_code == EXIT_MALFORMED
    assert "malformed instance at bialgebra:" in res.output
    res = run("check", "all", str(p), "--json")
    assert res.exit_code == EXIT_MALFORMED
    assert json.loads(res.stdout)["location"] == "bialgebra"


def test_invalid_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    res = run("validate", str(p))
    assert res.exit_code == EXIT_MALFORMED
    assert "malformed instance at line 1: invalid JSON" in res.output


def test_missing_file():
    assert run("validate", "/nonexistent/x.json").exit_code == EXIT_MALFORMED


def test_check_all_covers_every_label():
    res = run("check", "all", "qc2_classical_trivial", "--json")
    assert res.exit_code == EXIT_PASS
    ids = {v.diagram for v in CheckReport.from_json(res.stdout).verdicts}
    assert ids == LABELS | PLUMBING


def test_embed_classical_conventions():
    # both conventions agree on a symmetric element
    for convention in ("second-on-c", "first-on-c"):
        res = run("embed-classical", "qc2_classical_trivial", "--convention", convention, "-v")
        assert res.exit_code == EXIT_PASS
        assert f"({convention}: r4 = 1·e[0, 0, 0, 0])" in res.output
        assert all(f"[PASS] {d} (" in res.output for d in FIVE)


def test_embed_classical_needs_two_legs():
    assert run("embed-classical", "qc2_trivial").exit_code == EXIT_MALFORMED


def test_module_entry_point():
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-m", "duoidal", "validate", "f3c2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("suite bialgebra: PASS")

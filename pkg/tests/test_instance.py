import copy
import json
from fractions import Fraction

import pytest

import oracle
from duoidal.bundle import bundled_instances
from duoidal.errors import MalformedInstance
from duoidal.instance import (bundled_names, bundled_path, dumps, from_dict, load, schema,
                              to_dict)

VALID = ["c2_functions_twisted", "f3c2", "f5c2", "qc2", "qc2_classical_trivial", "qc2_trivial",
         "sweedler", "sweedler_r0", "sweedler_r4_mutant", "sweedler_r_lambda1"]
BAD = ["bad_nonassociative", "bad_qc2_coassoc", "bad_qc2_grouplike", "bad_sweedler_comul",
       "bad_sweedler_counit"]


def raw(name):
    return json.loads(bundled_path(name).read_text(encoding="utf-8"))


def test_bundle_contents():
    assert sorted(VALID + BAD) == bundled_names()


@pytest.mark.parametrize("name", VALID + BAD)
def test_bundled_files_round_trip(name):
    assert dumps(load(name)) == bundled_path(name).read_text(encoding="utf-8")


def test_shipped_files_match_builders():
    built = bundled_instances()
    assert sorted(built) == bundled_names()
    for name, inst in built.items():
        assert dumps(inst) == bundled_path(name).read_text(encoding="utf-8"), name


def test_sweedler_constants_match_presentation():
    data = raw("sweedler")["bialgebra"]
    for i in range(4):
        for j in range(4):
            want = [0] * 4
            for k, c in oracle.h4_mul_basis(i, j).items():
                want[k] = c
            assert [Fraction(v) for v in data["mul"][i][j]] == want
        want = [[0] * 4 for _ in range(4)]
        for (p, q), c in oracle.h4_delta_basis(i).items():
            want[p][q] = c
        assert [[Fraction(v) for v in row] for row in data["comul"][i]] == want
        assert data["counit"][i] == oracle.h4_eps_basis(i)


def test_load_by_name_and_path():
    assert load("qc2").name == "qc2"
    assert load(str(bundled_path("qc2"))).circ.dim == 2


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        load("/nonexistent/instance.json")


def test_invalid_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"field": ', encoding="utf-8")
    with pytest.raises(MalformedInstance) as err:
        load(p)
    assert err.value.location.startswith("line")


@pytest.mark.parametrize("path, value, location", [
    (("bialgebra", "dim"), 0, "bialgebra.dim"),
    (("field", "kind"), "reals", "field.kind"),
    (("bialgebra", "counit"), "one", "bialgebra.counit"),
])
def test_schema_errors_carry_location(path, value, location):
    data = raw("qc2")
    data[path[0]][path[1]] = value
    with pytest.raises(MalformedInstance) as err:
        from_dict(data)
    assert err.value.location == location


def test_shape_errors_carry_location():
    data = raw("qc2")
    data["bialgebra"]["mul"][1] = [[0, 1]]
    with pytest.raises(MalformedInstance) as err:
        from_dict(data)
    assert err.value.location.startswith("bialgebra")


def test_rmatrix_index_out_of_range():
    data = raw("qc2_trivial")
    data["rmatrix"]["terms"] = [[0, 0, 0, 2, 1]]
    with pytest.raises(MalformedInstance) as err:
        from_dict(data)
    assert err.value.location == "rmatrix.terms[0]"


def test_classical_rmatrix_must_have_unit_scalars():
    data = raw("qc2_classical_trivial")
    data["rmatrix"]["w"] = 2
    with pytest.raises(MalformedInstance) as err:
        from_dict(data)
    assert err.value.location == "rmatrix.w"


def test_to_dict_validates_against_schema():
    import jsonschema
    for name in VALID:
        jsonschema.validate(to_dict(load(name)), schema())


def test_module_action_dimension_checked():
    data = copy.deepcopy(raw("qc2"))
    data["test_objects"] = [{"dim": 3, "action": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]}]
    with pytest.raises(MalformedInstance) as err:
        from_dict(data)
    assert err.value.location == "test_objects[0].action"

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracle
from duoidal.arith import QQ, FieldSpec, LinMap, TensorSpace
from duoidal.bialg import ClassicalRElement
from duoidal.corpus import (cyclic_group_algebra, sweedler_r_lambda_flipped)
from duoidal.duoidal_core import (DuoidalStructure, InterchangeOnEM, lifted_interchange,
                                  zeta_symmetric)
from duoidal.errors import MalformedInstance, PrerequisiteFailed
from duoidal.monad_em import (SeparatelyOpmonoidalData, check_module_morphism, free_module,
                              mbullet, mcirc, mleaf, trivial_module)
from duoidal.rmatrix import (EMBEDDING, FIRST_ON_C, FIVE_DIAGRAMS, LIFT, RMATRIX1, RMATRIX2,
                             SECOND_ON_C, STAR, DuoidalRMatrix, braiding_from_classical,
                             check_braiding, check_rmatrix_axioms, embed_classical, r_from_xi,
                             rmatrix_component, roundtrip_check, roundtrip_check_xi, xi_from_r,
                             xi_rule)

K, K2, K3 = (TensorSpace(d) for d in ((), (2,), (3,)))


def frac(f, d):
    return {k: f.to_fraction(v) for k, v in d.items()}


def test_trivial_component_at_units(S_qc2):
    comp = rmatrix_component(S_qc2, DuoidalRMatrix.trivial(S_qc2), K, K, K, K)
    assert comp.image(()) == {(0, 0, 0, 0): 1}


def test_trivial_component_inserts_units_and_swaps(S_qc2):
    comp = rmatrix_component(S_qc2, DuoidalRMatrix.trivial(S_qc2), K2, K2, K2, K2)
    for idx in itertools.product(range(2), repeat=4):
        xa, xb, xc, xd = ((i,) for i in idx)
        assert comp.image(idx) == oracle.r_component_image({(0, 0, 0, 0): 1}, xa, xb, xc, xd)


def test_component_on_sweedler_expands_r_legs(S_h4, r0):
    Rm = embed_classical(S_h4.algebra, r0)
    comp = rmatrix_component(S_h4, Rm, K2, K, K2, K)
    r4 = {(0, q, p, 0): c for (p, q), c in oracle.h4_r0().items()}
    for xa, xc in itertools.product(range(2), repeat=2):
        assert frac(QQ, comp.image((xa, xc))) == oracle.r_component_image(r4, (xa,), (), (xc,), ())


@st.composite
def r4_elements(draw, dim=2):
    keys = draw(st.lists(st.tuples(*[st.integers(0, dim - 1)] * 4), min_size=1, max_size=4))
    return {k: draw(st.integers(-2, 2)) for k in keys}


@settings(max_examples=15)
@given(r4_elements(), st.sampled_from([(K, K2, K3, K), (K2, K, K, K3), (K2, K2, K2, K2)]))
def test_component_matches_element_formula(S_qc2, r4, spaces):
    Rm = DuoidalRMatrix(QQ, 2, r4)
    comp = rmatrix_component(S_qc2, Rm, *spaces)
    clean = {k: Fraction(v) for k, v in Rm.r4.items()}
    for idx in itertools.product(*(range(s.dim) for s in spaces)):
        blocks, pos = [], 0
        for s in spaces:
            blocks.append(idx[pos:pos + s.legs])
            pos += s.legs
        assert frac(QQ, comp.image(idx)) == oracle.r_component_image(clean, *blocks)


@settings(max_examples=15)
@given(r4_elements())
def test_components_are_determined_by_the_unit_component(S_qc2, r4):
    # read r4 back from the component at k and rebuild it at larger objects
    Rm = DuoidalRMatrix(QQ, 2, r4)
    read = rmatrix_component(S_qc2, Rm, K, K, K, K).image(())
    again = DuoidalRMatrix(QQ, 2, read)
    assert again.same_as(Rm)
    for spaces in ((K2, K2, K2, K2), (K3, K2, K, K3)):
        assert rmatrix_component(S_qc2, again, *spaces) == rmatrix_component(S_qc2, Rm, *spaces)


def test_scalar_laws_enforced():
    with pytest.raises(MalformedInstance) as err:
        DuoidalRMatrix(QQ, 2, {(0, 0, 0, 0): 1}, 1, 2, 1)
    assert err.value.location == "rmatrix.w"
    with pytest.raises(MalformedInstance) as err:
        DuoidalRMatrix(QQ, 2, {(0, 0, 0, 0): 1}, 2, 1, 1)
    assert err.value.location == "rmatrix.n"


def test_embed_trivial(qc2, S_qc2):
    Rm = embed_classical(qc2, ClassicalRElement.unit(qc2))
    assert Rm.same_as(DuoidalRMatrix.trivial(S_qc2))
    report = check_rmatrix_axioms(S_qc2, Rm)
    assert report.passed
    for d in FIVE_DIAGRAMS:
        assert report.for_diagram(d)


def test_embed_refuses_non_quasitriangular(h4):
    with pytest.raises(PrerequisiteFailed):
        embed_classical(h4, ClassicalRElement.unit(h4))


def test_embed_leg_placement(h4, r1):
    Rm = embed_classical(h4, r1)
    want = {(0, q, p, 0): c for (p, q), c in oracle.h4_r_lambda(1).items()}
    assert frac(QQ, Rm.r4) == want
    first = embed_classical(h4, r1, FIRST_ON_C)
    assert frac(QQ, first.r4) == {(0, p, q, 0): c for (p, q), c in oracle.h4_r_lambda(1).items()}


def test_flipped_family_under_first_on_c_is_the_same_r4(h4, r1):
    flipped = sweedler_r_lambda_flipped(h4, 1)
    a = embed_classical(h4, flipped, FIRST_ON_C, check=False)
    b = embed_classical(h4, r1, SECOND_ON_C)
    assert a.same_as(b)


def test_other_convention_fails_on_r_lambda(S_h4, h4, r1):
    Rm = embed_classical(h4, r1, FIRST_ON_C)
    report = check_rmatrix_axioms(S_h4, Rm)
    assert not report.diagram_passed(RMATRIX1) or not report.diagram_passed(RMATRIX2)


def test_mutant_fails_the_lift_square(S_h4):
    Rm = DuoidalRMatrix(QQ, 4, {(0, 0, 1, 0): 1})
    report = check_rmatrix_axioms(S_h4, Rm)
    bad = report.first_failure(LIFT)
    assert bad is not None
    assert bad.witness is not None and bad.witness.left != bad.witness.right


def test_one_dimensional_bialgebra():
    k = cyclic_group_algebra(1, QQ)
    S = SeparatelyOpmonoidalData.from_bialgebra(k)
    assert check_rmatrix_axioms(S, DuoidalRMatrix(QQ, 1, {(0, 0, 0, 0): 1})).passed


def test_trivial_r_axioms_iff_cocommutative(S_qc2, S_h4):
    assert check_rmatrix_axioms(S_qc2, DuoidalRMatrix.trivial(S_qc2)).passed
    assert not check_rmatrix_axioms(S_h4, DuoidalRMatrix.trivial(S_h4)).passed


def test_xi_trivial_on_trivial_modules_is_identity(S_qc2):
    T = trivial_module(S_qc2)
    xi = xi_from_r(S_qc2, DuoidalRMatrix.trivial(S_qc2), T, T, T, T)
    assert xi.to_linmap().matrix.tolist() == [[1]]


def test_xi_trivial_on_free_modules_is_the_symmetry(S_qc2):
    F = free_module(S_qc2)
    xi = xi_from_r(S_qc2, DuoidalRMatrix.trivial(S_qc2), F, F, F, F)
    want = zeta_symmetric(K2, K2, K2, K2, QQ)
    assert np.array_equal(xi.to_linmap().matrix, want.matrix)


def test_xi_from_r0_is_a_module_map(S_h4, h4, r0):
    F = free_module(S_h4)
    a, b, c, d = (mleaf(F, lab) for lab in "abcd")
    xi = xi_from_r(S_h4, embed_classical(h4, r0), a, b, c, d)
    ok, w = check_module_morphism(S_h4, xi, mcirc(mbullet(a, b), mbullet(c, d)),
                                  mbullet(mcirc(a, c), mcirc(b, d)))
    assert ok, w


def test_r_from_lifted_symmetry(S_qc2):
    xi = lifted_interchange(S_qc2, DuoidalStructure.symmetric_vect(QQ))
    assert r_from_xi(S_qc2, xi).same_as(DuoidalRMatrix.trivial(S_qc2))


def test_r_from_xi_recovers_embedded_r0(S_h4, h4, r0):
    Rm = embed_classical(h4, r0)
    back = r_from_xi(S_h4, xi_rule(S_h4, Rm))
    assert frac(QQ, back.r4) == {(0, q, p, 0): c for (p, q), c in oracle.h4_r0().items()}


def test_unnatural_xi_is_caught(S_qc2):
    good = xi_rule(S_qc2, DuoidalRMatrix.trivial(S_qc2))

    def corrupted(a, b, c, d):
        comp = good(a, b, c, d)
        free = all(x.module.name == "free" for x in (a, b, c, d) if x.kind == "leaf")
        return comp if free else comp.scale(2)

    bad = InterchangeOnEM(corrupted, 1, 1, 1, "corrupted")
    assert not roundtrip_check_xi(S_qc2, bad)


@pytest.mark.parametrize("field", [QQ, FieldSpec.prime(3)])
def test_roundtrip_trivial(field):
    S = SeparatelyOpmonoidalData.from_bialgebra(cyclic_group_algebra(2, field))
    Rm = DuoidalRMatrix.trivial(S)
    assert roundtrip_check(S, Rm)
    assert roundtrip_check_xi(S, xi_rule(S, Rm))


def test_roundtrip_r0(S_h4, h4, r0):
    Rm = embed_classical(h4, r0)
    assert roundtrip_check(S_h4, Rm)


@settings(max_examples=10)
@given(r4_elements())
def test_roundtrip_is_exact_for_any_element(S_qc2, r4):
    assert roundtrip_check(S_qc2, DuoidalRMatrix(QQ, 2, r4))


def test_braiding_trivial_is_the_swap(S_qc2, qc2):
    F = free_module(S_qc2)
    sigma = braiding_from_classical(qc2, ClassicalRElement.unit(qc2), F, F)
    assert np.array_equal(sigma.to_linmap().matrix,
                          LinMap.identity(QQ, TensorSpace((2, 2))).matrix[[0, 2, 1, 3]])


def test_braiding_r0_hexagons_and_inverse(h4, r0):
    report = check_braiding(h4, r0, r_inv=r0)
    assert report.passed
    assert report.for_diagram(EMBEDDING) and report.for_diagram(STAR)


def test_braiding_refuses_non_quasitriangular(h4):
    with pytest.raises(PrerequisiteFailed):
        check_braiding(h4, ClassicalRElement.unit(h4))

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from duoidal.arith import (QQ, FieldSpec, LinMap, TensorSpace, compose, leg_permutation,
                           maps_equal, tensor, tensor_all)
from duoidal.errors import DimensionMismatch, InvalidPermutation

F5 = FieldSpec.prime(5)


def lm(field, src, tgt, rows):
    return LinMap(field, TensorSpace(tuple(src)), TensorSpace(tuple(tgt)), rows)


def swap22():
    return leg_permutation(QQ, TensorSpace((2, 2)), (1, 0))


def test_swap_twice_is_identity():
    assert compose(swap22(), swap22()) == LinMap.identity(QQ, TensorSpace((2, 2)))


def test_identity_is_left_unit():
    f = lm(QQ, [2], [3], [[1, 2], [3, 4], [5, "1/2"]])
    assert compose(LinMap.identity(QQ, TensorSpace((3,))), f) == f


def test_prime_field_product():
    assert compose(lm(F5, [], [], [[3]]), lm(F5, [], [], [[4]])).matrix[0, 0] == 2


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(LinMap.identity(QQ, TensorSpace((2,))), LinMap.identity(QQ, TensorSpace((3,))))


def test_tensor_scalars():
    assert tensor(lm(QQ, [], [], [[2]]), lm(QQ, [], [], [[3]])).matrix[0, 0] == 6


def test_tensor_identities():
    two = LinMap.identity(QQ, TensorSpace((2,)))
    out = tensor(two, two)
    assert out.source.factors == (2, 2)
    assert out == LinMap.identity(QQ, TensorSpace((2, 2)))


def test_tensor_on_pure_tensors():
    f = lm(QQ, [2], [2], [[1, 2], [0, 3]])
    g = lm(QQ, [2], [2], [[5, 0], [7, 1]])
    fg = tensor(f, g)
    for i, j in itertools.product(range(2), repeat=2):
        want = {}
        for (a,), c in f.image((i,)).items():
            for (b,), d in g.image((j,)).items():
                want[(a, b)] = c * d
        assert fg.image((i, j)) == want


def test_swap_on_2x3_moves_every_basis_vector():
    sw = leg_permutation(QQ, TensorSpace((2, 3)), (1, 0))
    assert sw.target.factors == (3, 2)
    for i, j in itertools.product(range(2), range(3)):
        assert sw.image((i, j)) == {(j, i): 1}


def test_identity_permutation():
    sp = TensorSpace((2, 3, 2))
    assert leg_permutation(QQ, sp, (0, 1, 2)) == LinMap.identity(QQ, sp)


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        leg_permutation(QQ, TensorSpace((2, 2)), (0, 0))


def test_maps_equal_witness():
    ok, w = maps_equal(swap22(), LinMap.identity(QQ, TensorSpace((2, 2))))
    assert not ok
    assert w.index == (0, 1)
    assert w.left == {(1, 0): 1} and w.right == {(0, 1): 1}


def test_maps_equal_identity():
    ident = LinMap.identity(QQ, TensorSpace((2,)))
    assert maps_equal(ident, ident) == (True, None)


def test_maps_equal_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        maps_equal(LinMap.identity(QQ, TensorSpace((2,))), LinMap.identity(QQ, TensorSpace((3,))))


def test_exact_rationals():
    third = QQ.coerce("1/3")
    assert QQ.eq(third * 3, 1)
    assert QQ.to_fraction(third) == Fraction(1, 3)


# properties

small = st.integers(-3, 3)


@st.composite
def maps(draw, field=QQ, src=None, tgt=None):
    if src is None:
        src = draw(st.sampled_from([(), (2,), (3,), (2, 2)]))
    if tgt is None:
        tgt = draw(st.sampled_from([(), (2,), (3,)]))
    s, t = TensorSpace(src), TensorSpace(tgt)
    rows = [[draw(small) for _ in range(s.dim)] for _ in range(t.dim)]
    return LinMap(field, s, t, rows)


@st.composite
def composable_quads(draw):
    a, b, c, d, e, f = (draw(st.sampled_from([(), (2,), (3,)])) for _ in range(6))
    return (draw(maps(src=a, tgt=b)), draw(maps(src=b, tgt=c)),
            draw(maps(src=d, tgt=e)), draw(maps(src=e, tgt=f)))


@given(composable_quads())
def test_interchange_of_compose_and_tensor(quad):
    f1, g1, f2, g2 = quad
    assert compose(tensor(g1, g2), tensor(f1, f2)) == tensor(compose(g1, f1), compose(g2, f2))


@given(maps(), maps(), maps())
def test_tensor_is_strictly_associative(f, g, h):
    left, right = tensor(tensor(f, g), h), tensor(f, tensor(g, h))
    assert left.source == right.source and left.target == right.target
    assert left == right
    assert left == tensor_all([f, g, h])


@given(st.permutations(range(4)), st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_permutation_then_inverse(perm, dims):
    sp = TensorSpace(tuple(dims))
    p = leg_permutation(QQ, sp, perm)
    inverse = [perm.index(i) for i in range(4)]
    back = leg_permutation(QQ, p.target, inverse)
    assert compose(back, p) == LinMap.identity(QQ, sp)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 4))
def test_prime_field_matches_modular_arithmetic(a, b, c):
    x = compose(lm(F5, [], [], [[a]]), lm(F5, [], [], [[b]]))
    assert x.matrix[0, 0] == (a * b) % 5
    assert F5.eq(F5.div(c, c), 1)

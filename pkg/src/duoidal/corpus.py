"""Builders for the standard small bialgebras and R-elements."""

from __future__ import annotations

from .arith import QQ, FieldSpec
from .bialg import BialgebraData, ClassicalRElement


def _zeros3(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def monoid_algebra(table, field: FieldSpec = QQ, names=None, name="") -> BialgebraData:
    """The algebra of a finite multiplication table with grouplike basis.

    ``table[i][j]`` is the index of ``e_i · e_j``; ``e_0`` is the unit.
    """
    n = len(table)
    mul = _zeros3(n)
    comul = _zeros3(n)
    for i in range(n):
        for j in range(n):
            mul[i][j][table[i][j]] = 1
        comul[i][i][i] = 1
    unit = [1] + [0] * (n - 1)
    return BialgebraData.build(field, n, unit, mul, comul, [1] * n, names, name)


def cyclic_group_algebra(order: int, field: FieldSpec = QQ, name="") -> BialgebraData:
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    names = ["e"] + [f"g{i}" if order > 2 else "g" for i in range(1, order)]
    return monoid_algebra(table, field, names, name or f"{field}[C{order}]")


# Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
_H4_PRODUCTS = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, 1), (1, 2): (3, 1), (1, 3): (2, 1),
    (2, 0): (2, 1), (2, 1): (3, -1),
    (3, 0): (3, 1), (3, 1): (2, -1),
}
_H4_COPRODUCTS = {
    0: {(0, 0): 1},
    1: {(1, 1): 1},
    2: {(2, 0): 1, (1, 2): 1},
    3: {(3, 1): 1, (0, 3): 1},
}
H4_NAMES = ("1", "g", "x", "gx")


def sweedler(field: FieldSpec = QQ, name="H4") -> BialgebraData:
    """``g² = 1``, ``x² = 0``, ``xg = -gx``, ``Δg = g⊗g``, ``Δx = x⊗1 + g⊗x``."""
    mul = _zeros3(4)
    for (i, j), (k, c) in _H4_PRODUCTS.items():
        mul[i][j][k] = c
    comul = _zeros3(4)
    for i, terms in _H4_COPRODUCTS.items():
        for (j, k), c in terms.items():
            comul[i][j][k] = c
    return BialgebraData.build(field, 4, [1, 0, 0, 0], mul, comul, [1, 1, 0, 0], H4_NAMES, name)


def sweedler_r0(B: BialgebraData) -> ClassicalRElement:
    """``½(1⊗1 + 1⊗g + g⊗1 − g⊗g)``."""
    h = B.field.coerce("1/2")
    return ClassicalRElement.from_terms(B, {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): -h})


def sweedler_r_lambda(B: BialgebraData, lam) -> ClassicalRElement:
    """The one-parameter family through ``r0`` for ``Δx = x⊗1 + g⊗x``.

    ``r0 + (λ/2)(x⊗x + gx⊗x + gx⊗gx − x⊗gx)``. With this coproduct the
    nilpotent part must carry ``gx`` on the first leg of the mixed terms;
    the opposite placement fails the coproduct axioms.
    """
    f = B.field
    h = f.coerce("1/2")
    c = f.reduce(h * f.coerce(lam))
    terms = dict(sweedler_r0(B).r2)
    for key, s in {(2, 2): 1, (3, 2): 1, (3, 3): 1, (2, 3): -1}.items():
        terms[key] = f.reduce(terms.get(key, 0) + s * c)
    return ClassicalRElement.from_terms(B, terms)


def sweedler_r_lambda_flipped(B: BialgebraData, lam) -> ClassicalRElement:
    """The same family with legs exchanged: ``... + (λ/2)(x⊗x + x⊗gx + gx⊗gx − gx⊗x)``."""
    return sweedler_r_lambda(B, lam).flipped()


def c2_functions(field: FieldSpec = QQ, identity: int = 0, name="") -> BialgebraData:
    """Functions on a two-element group, basis ``δ_p, δ_q``.

    The algebra is ``k × k`` (unit ``δ_p + δ_q``). ``identity`` picks which
    point is the neutral element of the group law that defines ``Δ`` and
    ``ε``. Both choices give bialgebras on the same algebra with different
    counits.
    """
    mul = _zeros3(2)
    mul[0][0][0] = 1
    mul[1][1][1] = 1
    comul = _zeros3(2)

    def point_product(a, b):
        return a if b == identity else b if a == identity else identity

    for a in range(2):
        for b in range(2):
            comul[point_product(a, b)][a][b] = 1
    counit = [0, 0]
    counit[identity] = 1
    return BialgebraData.build(field, 2, [1, 1], mul, comul, counit, ("δp", "δq"),
                               name or f"functions on C2 (neutral {'pq'[identity]})")

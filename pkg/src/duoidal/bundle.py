"""The bundled instance corpus, built from code and written to ``data/``.

``python -m duoidal.bundle`` regenerates the JSON files; the test suite
checks that the shipped files match these builders.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .arith import QQ, FieldSpec
from .bialg import ClassicalRElement
from .corpus import (c2_functions, cyclic_group_algebra, monoid_algebra, sweedler, sweedler_r0,
                     sweedler_r_lambda)
from .instance import Instance, dumps, instance_from_bialgebra
from .rmatrix import DuoidalRMatrix

# basis indices of Sweedler's algebra
_ONE, _G, _X, _GX = range(4)


def _with(B, name, **changes):
    """A copy of ``B`` with some structure constants replaced (no validation)."""
    data = {"unit": B.unit, "mul": B.mul, "comul": B.comul, "counit": B.counit}
    data.update(changes)
    return type(B).build(B.field, B.dim, data["unit"], data["mul"], data["comul"],
                         data["counit"], B.basis_names, name)


def bundled_instances() -> dict[str, Instance]:
    out = {}
    qc2 = cyclic_group_algebra(2, QQ, "qc2")
    out["qc2"] = instance_from_bialgebra(qc2, "qc2", description="the group algebra of C2 over Q")
    for p in (3, 5):
        B = cyclic_group_algebra(2, FieldSpec.prime(p), f"f{p}c2")
        out[f"f{p}c2"] = instance_from_bialgebra(B, f"f{p}c2",
                                                 description=f"the group algebra of C2 over GF({p})")
    H = sweedler(QQ, "sweedler")
    out["sweedler"] = instance_from_bialgebra(H, "sweedler", description="Sweedler's algebra H4")
    r0 = sweedler_r0(H)
    out["sweedler_r0"] = instance_from_bialgebra(
        H, "sweedler_r0", r=r0, r_inverse=r0,
        description="H4 with r0 = (1⊗1 + 1⊗g + g⊗1 - g⊗g)/2, its own star inverse")
    out["sweedler_r_lambda1"] = instance_from_bialgebra(
        H, "sweedler_r_lambda1", r=sweedler_r_lambda(H, 1),
        description="H4 with r0 + (x⊗x + gx⊗x + gx⊗gx - x⊗gx)/2")
    out["qc2_trivial"] = instance_from_bialgebra(
        qc2, "qc2_trivial", r4=DuoidalRMatrix(QQ, 2, {(0, 0, 0, 0): 1}),
        description="Q[C2] with the trivial duoidal R-matrix 1⊗1⊗1⊗1")
    out["qc2_classical_trivial"] = instance_from_bialgebra(
        qc2, "qc2_classical_trivial", r=ClassicalRElement.unit(qc2),
        r_inverse=ClassicalRElement.unit(qc2), description="Q[C2] with r = 1⊗1")
    out["sweedler_r4_mutant"] = instance_from_bialgebra(
        H, "sweedler_r4_mutant", r4=DuoidalRMatrix(QQ, 4, {(_ONE, _ONE, _G, _ONE): 1}),
        description="H4 with r4 = 1⊗1⊗g⊗1, which is not an R-matrix")
    twisted = c2_functions(QQ, 0, "c2_functions")
    out["c2_functions_twisted"] = instance_from_bialgebra(
        twisted, "c2_functions_twisted", bullet=c2_functions(QQ, 1),
        description="functions on C2 with the two group laws of neutral p and q; the counits differ")

    # corrupted negatives
    counit = H.counit.copy()
    counit[_G] = 0
    out["bad_sweedler_counit"] = instance_from_bialgebra(
        _with(H, "bad_sweedler_counit", counit=counit), "bad_sweedler_counit",
        description="H4 with ε(g) = 0")
    comul = H.comul.copy()
    comul[_G] = 0
    comul[_G][_G][_ONE] = 1
    out["bad_sweedler_comul"] = instance_from_bialgebra(
        _with(H, "bad_sweedler_comul", comul=comul), "bad_sweedler_comul",
        description="H4 with Δ(g) = g⊗1")
    counit = qc2.counit.copy()
    counit[1] = 0
    out["bad_qc2_grouplike"] = instance_from_bialgebra(
        _with(qc2, "bad_qc2_grouplike", counit=counit), "bad_qc2_grouplike",
        description="Q[C2] with g grouplike but ε(g) = 0")
    comul = qc2.comul.copy()
    comul[1][0][0] = 1
    out["bad_qc2_coassoc"] = instance_from_bialgebra(
        _with(qc2, "bad_qc2_coassoc", comul=comul), "bad_qc2_coassoc",
        description="Q[C2] with Δ(g) = g⊗g + e⊗e, which is not coassociative")
    table = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
    nonassoc = monoid_algebra(table, QQ, ("e", "a", "b"), "bad_nonassociative")
    out["bad_nonassociative"] = instance_from_bialgebra(
        nonassoc, "bad_nonassociative",
        description="a unital but non-associative table: (a·a)·b = b, a·(a·b) = a")
    return out


def write_bundle(directory) -> list[Path]:
    directory = Path(directory)
    paths = []
    for name, inst in bundled_instances().items():
        path = directory / f"{name}.json"
        path.write_text(dumps(inst), encoding="utf-8")
        paths.append(path)
    return paths


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data"
    for p in write_bundle(target):
        print(p)

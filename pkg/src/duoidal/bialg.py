"""Finite-dimensional bialgebras given by structure constants.

Index conventions (fixed, and used by the instance file format):

* ``mul[i][j][k]``   coefficient of ``e_k`` in ``e_i · e_j``
* ``comul[i][j][k]`` coefficient of ``e_j ⊗ e_k`` in ``Δ(e_i)``
* ``unit[i]``        coefficient of ``e_i`` in ``1``
* ``counit[i]``      ``ε(e_i)``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .arith import (UNIT, Arrow, FieldSpec, LinMap, TensorSpace, Witness, compose, leaf,
                    leg_permutation, maps_equal, tapp, tensor, tensor_all)
from .arith.typed import CIRC, prod
from .errors import MalformedInstance
from .report import CheckReport


def _tensor3(field, data, n, location):
    arr = np.empty((n, n, n), dtype=object)
    if len(data) != n:
        raise MalformedInstance(f"expected {n} entries, got {len(data)}", location)
    for i, plane in enumerate(data):
        if len(plane) != n:
            raise MalformedInstance(f"expected {n} entries, got {len(plane)}", f"{location}[{i}]")
        for j, row in enumerate(plane):
            if len(row) != n:
                raise MalformedInstance(f"expected {n} entries, got {len(row)}",
                                        f"{location}[{i}][{j}]")
            for k, c in enumerate(row):
                try:
                    arr[i, j, k] = field.coerce(c)
                except (TypeError, ValueError) as exc:
                    raise MalformedInstance(str(exc), f"{location}[{i}][{j}][{k}]") from None
    return arr


def _vector(field, data, n, location):
    if len(data) != n:
        raise MalformedInstance(f"expected {n} entries, got {len(data)}", location)
    out = []
    for i, c in enumerate(data):
        try:
            out.append(field.coerce(c))
        except (TypeError, ValueError) as exc:
            raise MalformedInstance(str(exc), f"{location}[{i}]") from None
    return np.array(out, dtype=object)


@dataclass(frozen=True, eq=False)
class BialgebraData:
    field: FieldSpec
    dim: int
    unit: np.ndarray
    mul: np.ndarray
    comul: np.ndarray
    counit: np.ndarray
    basis_names: tuple[str, ...] = ()
    name: str = ""

    @classmethod
    def build(cls, field: FieldSpec, dim: int, unit, mul, comul, counit,
              basis_names=None, name="") -> BialgebraData:
        """Coerce nested lists into the field, checking every shape."""
        if not isinstance(dim, int) or dim < 1:
            raise MalformedInstance(f"dimension must be a positive integer, got {dim!r}", "dim")
        names = tuple(basis_names) if basis_names else tuple(f"e{i}" for i in range(dim))
        if len(names) != dim:
            raise MalformedInstance(f"expected {dim} basis names, got {len(names)}", "basis")
        return cls(field, dim,
                   _vector(field, unit, dim, "unit"),
                   _tensor3(field, mul, dim, "mul"),
                   _tensor3(field, comul, dim, "comul"),
                   _vector(field, counit, dim, "counit"),
                   names, name)

    def with_coalgebra(self, comul, counit, name="") -> BialgebraData:
        return BialgebraData.build(self.field, self.dim, self.unit, self.mul, comul, counit,
                                   self.basis_names, name or self.name)

    @property
    def space(self) -> TensorSpace:
        return TensorSpace((self.dim,))

    # structure maps as LinMaps

    @property
    def m(self) -> LinMap:
        n = self.dim
        mat = self.mul.reshape(n * n, n).T
        return LinMap(self.field, TensorSpace((n, n)), self.space, mat)

    @property
    def u(self) -> LinMap:
        return LinMap(self.field, UNIT, self.space, self.unit.reshape(self.dim, 1))

    @property
    def delta(self) -> LinMap:
        n = self.dim
        mat = self.comul.reshape(n, n * n).T
        return LinMap(self.field, self.space, TensorSpace((n, n)), mat)

    @property
    def eps(self) -> LinMap:
        return LinMap(self.field, self.space, UNIT, self.counit.reshape(1, self.dim))

    @property
    def id(self) -> LinMap:
        return LinMap.identity(self.field, self.space)

    # element arithmetic; elements of B^{⊗k} are dicts multi-index -> scalar

    def label(self, index) -> str:
        return "⊗".join(self.basis_names[i] for i in index) if index else "1_k"

    def element(self, coeffs: dict) -> dict:
        f = self.field
        return {tuple(k): f.coerce(v) for k, v in coeffs.items() if not f.is_zero(f.coerce(v))}

    def unit_element(self, legs: int = 1) -> dict:
        out = {(): self.field.one}
        for _ in range(legs):
            out = {k + (i,): c * u for k, c in out.items()
                   for i, u in enumerate(self.unit) if not self.field.is_zero(u)}
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        """Leg-wise product in ``B^{⊗k}``."""
        f = self.field
        out = {}
        for ix, cx in x.items():
            for iy, cy in y.items():
                partial = {(): cx * cy}
                for a, b in zip(ix, iy):
                    row = self.mul[a, b]
                    partial = {k + (c,): v * e for k, v in partial.items()
                               for c, e in enumerate(row) if not f.is_zero(e)}
                    if not partial:
                        break
                for k, v in partial.items():
                    out[k] = out.get(k, 0) + v
        return {k: f.reduce(v) for k, v in out.items() if not f.is_zero(v)}

    def comultiply_leg(self, x: dict, leg: int, comul=None) -> dict:
        comul = self.comul if comul is None else comul
        f = self.field
        out = {}
        for idx, c in x.items():
            for j in range(self.dim):
                for k in range(self.dim):
                    e = comul[idx[leg], j, k]
                    if not f.is_zero(e):
                        key = idx[:leg] + (j, k) + idx[leg + 1:]
                        out[key] = out.get(key, 0) + c * e
        return {k: f.reduce(v) for k, v in out.items() if not f.is_zero(v)}

    def coproduct(self, i: int, comul=None) -> dict:
        return self.comultiply_leg({(i,): self.field.one}, 0, comul)


def validate_bialgebra(B: BialgebraData) -> CheckReport:
    """Check the bialgebra axioms by composing the structure maps."""
    f = B.field
    n = B.dim
    m, u, d, e, i = B.m, B.u, B.delta, B.eps, B.id
    report = CheckReport("bialgebra")

    def check(name, left, right):
        ok, w = maps_equal(left, right)
        if w is not None:
            w = type(w)(w.index, w.left, w.right, B.label(w.index))
        report.add(name, ok, w)

    check("associativity", compose(m, tensor(m, i)), compose(m, tensor(i, m)))
    check("unit-left", compose(m, tensor(u, i)), i)
    check("unit-right", compose(m, tensor(i, u)), i)
    check("coassociativity", compose(tensor(d, i), d), compose(tensor(i, d), d))
    check("counit-left", compose(tensor(e, i), d), i)
    check("counit-right", compose(tensor(i, e), d), i)
    shuffle = leg_permutation(f, TensorSpace((n, n, n, n)), (0, 2, 1, 3))
    check("comultiplication-multiplicative", compose(d, m),
          compose(tensor(m, m), compose(shuffle, tensor(d, d))))
    check("counit-multiplicative", compose(e, m), tensor(e, e))
    check("comultiplication-unit", compose(d, u), tensor(u, u))
    check("counit-unit", compose(e, u), LinMap.identity(f, UNIT))
    return report


def is_cocommutative(B: BialgebraData):
    """Compare structure constants of Δ and its flip directly.

    Returns ``(True, None)`` or ``(False, basis label)``.
    """
    f = B.field
    for i in range(B.dim):
        for j, k in itertools.product(range(B.dim), repeat=2):
            if not f.eq(B.comul[i, j, k], B.comul[i, k, j]):
                return False, B.basis_names[i]
    return True, None


def cocommutativity_by_maps(B: BialgebraData):
    """The same test phrased as ``maps_equal(Δ, swap ∘ Δ)``."""
    swap = leg_permutation(B.field, TensorSpace((B.dim, B.dim)), (1, 0))
    return maps_equal(B.delta, compose(swap, B.delta))


@dataclass(frozen=True, eq=False)
class ClassicalRElement:
    """An element ``r = sum r[j,k] e_j ⊗ e_k`` of ``B ⊗ B``."""

    r2: dict

    @classmethod
    def from_terms(cls, B: BialgebraData, terms: dict) -> ClassicalRElement:
        return cls(B.element(terms))

    @classmethod
    def from_vector(cls, B: BialgebraData, vec) -> ClassicalRElement:
        n = B.dim
        return cls(B.element({divmod(j, n): c for j, c in enumerate(vec)}))

    @classmethod
    def unit(cls, B: BialgebraData) -> ClassicalRElement:
        return cls(B.unit_element(2))

    def flipped(self) -> ClassicalRElement:
        return ClassicalRElement({(b, a): c for (a, b), c in self.r2.items()})

    def vector(self, B: BialgebraData) -> list:
        out = [B.field.zero] * (B.dim ** 2)
        for (a, b), c in self.r2.items():
            out[a * B.dim + b] = c
        return out


def _embed(r: dict, positions, legs, B):
    """Place the legs of ``r`` at ``positions`` of a ``legs``-fold tensor, unit elsewhere."""
    out = {}
    ones = B.unit_element(legs - len(positions)) if legs > len(positions) else {(): B.field.one}
    others = [p for p in range(legs) if p not in positions]
    for idx, c in r.items():
        for oidx, oc in ones.items():
            key = [0] * legs
            for p, v in zip(positions, idx):
                key[p] = v
            for p, v in zip(others, oidx):
                key[p] = v
            out[tuple(key)] = out.get(tuple(key), 0) + c * oc
    return out


def check_classical_qt(B: BialgebraData, r: ClassicalRElement) -> CheckReport:
    """The quasitriangularity axioms for ``r``.

    * ``(Δ⊗id)(r) = r13 r23``
    * ``(id⊗Δ)(r) = r13 r12``
    * ``r Δ(b) = Δ^op(b) r`` for every basis element ``b``
    """
    report = CheckReport("classical-r-matrix")
    r13 = _embed(r.r2, (0, 2), 3, B)
    r23 = _embed(r.r2, (1, 2), 3, B)
    r12 = _embed(r.r2, (0, 1), 3, B)
    for name, leg, right in (("qt-comultiply-first-leg", 0, B.multiply(r13, r23)),
                             ("qt-comultiply-second-leg", 1, B.multiply(r13, r12))):
        left = B.comultiply_leg(r.r2, leg)
        ok = left == right
        report.add(name, ok, None if ok else Witness((), left, right, "r"))
    failure = None
    for b in range(B.dim):
        db = B.coproduct(b)
        dop = {(k, j): c for (j, k), c in db.items()}
        left, right = B.multiply(r.r2, db), B.multiply(dop, r.r2)
        if left != right:
            failure = Witness((b,), left, right, B.basis_names[b])
            break
    report.add("qt-quasicocommutative", failure is None, failure)
    return report


def _r_arrow(B: BialgebraData, r2: dict, x, y):
    """``R_{X,Y}: X ⊗ Y -> TY ⊗ TX``, ``x ⊗ y ↦ r² y ⊗ r¹ x``."""
    f, n = B.field, B.dim
    ins = LinMap.from_columns(f, UNIT, TensorSpace((n, n)), lambda idx: dict(r2))
    src = prod(CIRC, x, y)
    lx, ly = len(x.legs), len(y.legs)
    step1 = Arrow(f, src, leaf("_r", (n, n) + x.legs + y.legs), (("apply", ins, 0),))
    # legs: r1, r2, x.., y.. -> r2, y.., r1, x..
    perm = (1,) + tuple(2 + lx + i for i in range(ly)) + (0,) + tuple(2 + i for i in range(lx))
    tgt = prod(CIRC, tapp(y, n), tapp(x, n))
    step2 = Arrow.from_linmap(leg_permutation(f, step1.target.space, perm), step1.target, tgt)
    return step1.then(step2)


def _mu_pair(B: BialgebraData, x, y):
    """``μ_X ⊗ μ_Y : TTX ⊗ TTY -> TX ⊗ TY``."""
    n = B.dim
    mu_x = Arrow.from_linmap(tensor_all([B.m, LinMap.identity(B.field, x.space)]),
                             tapp(tapp(x, n), n), tapp(x, n))
    mu_y = Arrow.from_linmap(tensor_all([B.m, LinMap.identity(B.field, y.space)]),
                             tapp(tapp(y, n), n), tapp(y, n))
    from .arith.typed import par
    return par(CIRC, mu_x, mu_y)


def star_product_element(B: BialgebraData, first: dict, second: dict, probe=(1,)) -> dict:
    """Run ``(μ⊗μ) ∘ R'_{TY,TX} ∘ R_{X,Y}`` with ``R`` from ``first`` and
    ``R'`` from ``second``, and read off the element it multiplies by.

    The composite is evaluated on the unit input at ``X = Y = k``; the
    result lies in ``TX ⊗ TY = B ⊗ B``.
    """
    n = B.dim
    x, y = leaf("x", TensorSpace(())), leaf("y", TensorSpace(()))
    step1 = _r_arrow(B, first, x, y)
    step2 = _r_arrow(B, second, tapp(y, n), tapp(x, n))
    composite = step1.then(step2, _mu_pair(B, x, y))
    return composite.evaluate(()).data


def star_inverse_check(B: BialgebraData, r: ClassicalRElement, r_inv: ClassicalRElement) -> bool:
    """Whether both star composites of ``r`` and ``r_inv`` equal ``η ⊗ η``."""
    one = B.unit_element(2)
    return (star_product_element(B, r.r2, r_inv.r2) == one
            and star_product_element(B, r_inv.r2, r.r2) == one)


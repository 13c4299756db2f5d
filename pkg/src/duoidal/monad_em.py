"""The monad ``T = B ⊗ -`` on finite-dimensional vector spaces and its modules.

One algebra carries two comultiplications, one per monoidal product. Each
gives ``T`` an opmonoidal structure

    T₂(b ⊗ x ⊗ y) = b₍₁₎ ⊗ x ⊗ b₍₂₎ ⊗ y,        T₀ = ε.

Structure maps are exposed both as dense :class:`LinMap` values (for small
spaces) and as typed :class:`Arrow` values for the leg-by-leg evaluator.

Eilenberg–Moore categories are probed rather than built. A
:class:`ModuleObject` is a finite-dimensional module given by its action
map. A :class:`ModExpr` is a product of modules under either tensor product,
and its action is computed as a factored :class:`BlockOp`, so products of
several 16-dimensional modules never need a dense matrix.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from .arith import (BULLET, CIRC, UNIT, UNIT_OBJ, Arrow, BlockOp, LinMap, Obj, TensorSpace,
                    Witness, compare, compose, difference, leaf, maps_equal, par, prod,
                    tapp, tensor)
from .bialg import BialgebraData
from .errors import DimensionMismatch, MalformedInstance
from .report import CheckReport

FLAVORS = (CIRC, BULLET)


def _flavor(flavor: str) -> str:
    aliases = {"circ": CIRC, "o": CIRC, CIRC: CIRC, "bullet": BULLET, "*": BULLET, BULLET: BULLET}
    try:
        return aliases[flavor]
    except KeyError:
        raise ValueError(f"unknown monoidal product {flavor!r}") from None


@dataclass(frozen=True, eq=False)
class SeparatelyOpmonoidalData:
    """An algebra with one bialgebra structure per monoidal product."""

    circ: BialgebraData
    bullet: BialgebraData

    def __post_init__(self):
        a, b = self.circ, self.bullet
        if a.field != b.field or a.dim != b.dim:
            raise MalformedInstance("the two bialgebras live over different spaces")
        same = all(np.array_equal(x, y) for x, y in ((a.unit, b.unit), (a.mul, b.mul)))
        if not same:
            raise MalformedInstance("the two bialgebras must share their algebra structure")

    @classmethod
    def from_bialgebra(cls, B: BialgebraData) -> SeparatelyOpmonoidalData:
        return cls(B, B)

    @property
    def field(self):
        return self.circ.field

    @property
    def dim(self) -> int:
        return self.circ.dim

    @property
    def algebra(self) -> BialgebraData:
        return self.circ

    @property
    def basis_names(self):
        return self.circ.basis_names

    @property
    def same_coalgebras(self) -> bool:
        return (np.array_equal(self.circ.comul, self.bullet.comul)
                and np.array_equal(self.circ.counit, self.bullet.counit))

    def coalgebra(self, flavor: str) -> BialgebraData:
        return self.circ if _flavor(flavor) == CIRC else self.bullet

    # typed structure maps

    def T(self, x: Obj) -> Obj:
        return tapp(x, self.dim)

    def Tf(self, f: Arrow) -> Arrow:
        return Arrow(self.field, self.T(f.source), self.T(f.target), f.shifted(1), f"T{f.name}")

    def T2(self, flavor: str, x: Obj, y: Obj) -> Arrow:
        """``T(x op y) -> Tx op Ty``."""
        op = _flavor(flavor)
        f, n = self.field, self.dim
        lx, ly = len(x.legs), len(y.legs)
        src = self.T(prod(op, x, y))
        mid = leaf("_", (n, n) + x.legs + y.legs)
        perm = (0,) + tuple(range(2, 2 + lx)) + (1,) + tuple(range(2 + lx, 2 + lx + ly))
        tgt = prod(op, self.T(x), self.T(y))
        split = Arrow(f, src, mid, (("apply", self.coalgebra(op).delta, 0),))
        return split.then(Arrow.permutation(f, mid, tgt, perm)).named(f"T{op}₂")

    def T0(self, flavor: str) -> Arrow:
        op = _flavor(flavor)
        return Arrow.from_linmap(self.coalgebra(op).eps, self.T(UNIT_OBJ), UNIT_OBJ, f"T{op}₀")

    def mu(self, x: Obj) -> Arrow:
        lm = tensor(self.algebra.m, LinMap.identity(self.field, x.space))
        return Arrow.from_linmap(lm, self.T(self.T(x)), self.T(x), "μ")

    def eta(self, x: Obj) -> Arrow:
        lm = tensor(self.algebra.u, LinMap.identity(self.field, x.space))
        return Arrow.from_linmap(lm, x, self.T(x), "η")

    def identity(self, x: Obj) -> Arrow:
        return Arrow.identity(self.field, x)

    def scalar(self, c, x: Obj = UNIT_OBJ, name="") -> Arrow:
        return Arrow.scalar(self.field, c, x, name)

    def compare(self, left: Arrow, right: Arrow):
        return compare(left, right, self.leg_labeller(left.source))

    def leg_labeller(self, obj: Obj):
        """Label a basis multi-index, naming algebra legs by their basis names."""
        kinds = _leg_kinds(obj)
        names = self.basis_names

        def label(idx):
            parts = []
            for kind, i in zip(kinds, idx):
                parts.append(names[i] if kind == "T" else f"{kind}{i}")
            return "⊗".join(parts) if parts else "1_k"

        return label


def _leg_kinds(obj: Obj) -> list[str]:
    if obj.kind == "leaf":
        return [obj.name] * len(obj.dims)
    if obj.kind == "T":
        return ["T"] + _leg_kinds(obj.parts[0])
    out = []
    for p in obj.parts:
        out += _leg_kinds(p)
    return out


def monad_components(S: SeparatelyOpmonoidalData, flavor: str, x: TensorSpace, y: TensorSpace):
    """Dense ``T₂`` at ``(x, y)`` and ``T₀`` for the chosen product."""
    t2 = S.T2(flavor, leaf("x", x), leaf("y", y)).to_linmap()
    t0 = S.coalgebra(flavor).eps
    return {"T2": t2, "T0": t0}


def _where(*objs) -> str:
    return "(" + ", ".join(str(o) for o in objs) + ")"


DEFAULT_OBJECTS = (TensorSpace(()), TensorSpace((2,)))


def check_bimonad_laws(S: SeparatelyOpmonoidalData, flavor: str,
                       objects=DEFAULT_OBJECTS) -> CheckReport:
    """Opmonoidality of ``T``, ``μ`` and ``η`` for one monoidal product."""
    op = _flavor(flavor)
    report = CheckReport(f"bimonad-{op}")
    T, T2, T0 = S.T, S.T2, S.T0(op)
    names = "xyz"
    objs = [[leaf(names[i], sp) for sp in objects] for i in range(3)]

    def add(square, left, right, where):
        ok, w = S.compare(left, right)
        report.add("def:bimonad", ok, w, where, square)

    for x in objs[0]:
        for y in objs[1]:
            xy = prod(op, x, y)
            where = _where(x.space, y.space)
            add("μ-T₂", S.mu(xy).then(T2(op, x, y)),
                S.Tf(T2(op, x, y)).then(T2(op, T(x), T(y)), par(op, S.mu(x), S.mu(y))), where)
            add("η-T₂", S.eta(xy).then(T2(op, x, y)), par(op, S.eta(x), S.eta(y)), where)
    add("μ-T₀", S.mu(UNIT_OBJ).then(T0), S.Tf(T0).then(T0), "")
    add("η-T₀", S.eta(UNIT_OBJ).then(T0), S.identity(UNIT_OBJ), "")
    for x in objs[0]:
        add("T₂-counit-left", T2(op, UNIT_OBJ, x).then(par(op, T0, S.identity(T(x)))),
            S.identity(T(x)), _where(x.space))
        add("T₂-counit-right", T2(op, x, UNIT_OBJ).then(par(op, S.identity(T(x)), T0)),
            S.identity(T(x)), _where(x.space))
        for y in objs[1]:
            for z in objs[2]:
                left = T2(op, prod(op, x, y), z).then(
                    par(op, T2(op, x, y), S.identity(T(z))))
                right = T2(op, x, prod(op, y, z)).then(
                    par(op, S.identity(T(x)), T2(op, y, z)))
                add("T₂-coassociativity", left, right, _where(x.space, y.space, z.space))
    return report


# modules


@dataclass(eq=False)
class ModuleObject:
    """A left module: ``action: B ⊗ space -> space``."""

    field: object
    dim_algebra: int
    space: TensorSpace
    action: LinMap
    name: str = "M"
    parts: tuple = ()
    _rho: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        expected = TensorSpace((self.dim_algebra,)) @ self.space
        if self.action.source.dim != expected.dim or self.action.target.dim != self.space.dim:
            raise DimensionMismatch(
                f"action of {self.name} must map {expected} -> {self.space}")

    @property
    def dim(self) -> int:
        return self.space.dim

    def rho(self, i: int) -> np.ndarray:
        """The matrix by which basis element ``e_i`` acts."""
        mat = self._rho.get(i)
        if mat is None:
            d = self.dim
            mat = np.array(self.action.matrix[:, i * d:(i + 1) * d], dtype=object)
            self._rho[i] = mat
        return mat

    def obj(self, label: str | None = None) -> Obj:
        return leaf(label or self.name, TensorSpace((self.dim,)) if self.dim > 1 else TensorSpace(()))

    def __repr__(self):
        return f"ModuleObject({self.name}, dim={self.dim})"


def module_from_matrices(S: SeparatelyOpmonoidalData, matrices, name="M") -> ModuleObject:
    """Build a module from the matrices by which the basis elements act."""
    f = S.field
    mats = [np.array([[f.coerce(c) for c in row] for row in m], dtype=object) for m in matrices]
    if len(mats) != S.dim:
        raise MalformedInstance(f"expected {S.dim} action matrices, got {len(mats)}", name)
    d = mats[0].shape[0]
    for m in mats:
        if m.shape != (d, d):
            raise MalformedInstance(f"action matrices must all be {d}x{d}", name)
    action = np.concatenate(mats, axis=1)
    space = TensorSpace((d,)) if d > 1 else TensorSpace(())
    return ModuleObject(f, S.dim, space, LinMap(f, TensorSpace((S.dim,)) @ space, space, action), name)


def free_module(S: SeparatelyOpmonoidalData) -> ModuleObject:
    return ModuleObject(S.field, S.dim, S.algebra.space, S.algebra.m, "free")


def trivial_module(S: SeparatelyOpmonoidalData, flavor: str = CIRC) -> ModuleObject:
    op = _flavor(flavor)
    name = "⊥" if op == CIRC else "1"
    return ModuleObject(S.field, S.dim, UNIT, S.coalgebra(op).eps, name)


def tensor_of_modules(S: SeparatelyOpmonoidalData, flavor: str, M: ModuleObject,
                      N: ModuleObject) -> ModuleObject:
    """The diagonal action ``(action_M ⊗ action_N) ∘ T₂``."""
    op = _flavor(flavor)
    f = S.field
    t2 = S.T2(op, leaf("m", M.space), leaf("n", N.space)).to_linmap()
    action = compose(tensor(M.action, N.action), t2)
    action = LinMap(f, TensorSpace((S.dim,)) @ M.space @ N.space, M.space @ N.space, action.matrix)
    return ModuleObject(f, S.dim, M.space @ N.space, action, f"({M.name}{op}{N.name})",
                        (op, M, N))


def flatten_module(M: ModuleObject) -> ModuleObject:
    """Regard a module on a multi-factor space as a module on one factor."""
    if M.space.legs <= 1:
        return M
    sp = TensorSpace((M.dim,))
    f = M.field
    action = LinMap(f, TensorSpace((M.dim_algebra, M.dim)), sp, M.action.matrix)
    return ModuleObject(f, M.dim_algebra, sp, action, M.name, M.parts)


def check_module(S: SeparatelyOpmonoidalData, M: ModuleObject) -> CheckReport:
    f = S.field
    report = CheckReport(f"module {M.name}")
    idv = LinMap.identity(f, M.space)
    idb = S.algebra.id
    a = M.action

    def add(name, left, right, legs_b):
        ok, w = maps_equal(left, right)
        if w is not None:
            idx = w.index
            label = "⊗".join([S.basis_names[i] for i in idx[:legs_b]] +
                             [f"v{M.space.flat(idx[legs_b:])}"])
            w = Witness(idx, w.left, w.right, label)
        report.add(name, ok, w)

    add("module-unit", compose(a, tensor(S.algebra.u, idv)), idv, 0)
    add("module-associativity", compose(a, tensor(S.algebra.m, idv)),
        compose(a, tensor(idb, a)), 2)
    return report


# module expressions and factored actions


@dataclass(frozen=True, eq=False)
class ModExpr:
    kind: str
    module: ModuleObject | None = None
    label: str = ""
    op: str = ""
    parts: tuple = ()

    def leaves(self) -> tuple[str, ...]:
        if self.kind == "leaf":
            return (self.label,)
        out = ()
        for p in self.parts:
            out += p.leaves()
        return out

    def dims(self) -> dict:
        if self.kind == "leaf":
            return {self.label: self.module.dim}
        out = {}
        for p in self.parts:
            out.update(p.dims())
        return out

    def __str__(self):
        if self.kind == "leaf":
            return f"{self.label}:{self.module.name}"
        if self.kind == "unit":
            return "⊥" if self.op == CIRC else "1"
        return "(" + f" {self.op} ".join(str(p) for p in self.parts) + ")"


def mleaf(module: ModuleObject, label: str) -> ModExpr:
    return ModExpr("leaf", module=module, label=label)


def munit(flavor: str) -> ModExpr:
    return ModExpr("unit", op=_flavor(flavor))


def mprod(op: str, left: ModExpr, right: ModExpr) -> ModExpr:
    return ModExpr("prod", op=_flavor(op), parts=(left, right))


def mcirc(left, right):
    return mprod(CIRC, left, right)


def mbullet(left, right):
    return mprod(BULLET, left, right)


class FactoredActions:
    """Actions of module expressions as :class:`BlockOp` values, memoized."""

    def __init__(self, S: SeparatelyOpmonoidalData):
        self.S = S
        self._cache: dict = {}

    def of(self, expr: ModExpr, i: int) -> BlockOp:
        key = (id(expr), i)
        hit = self._cache.get(key)
        if hit is not None and hit[0] is expr:
            return hit[1]
        out = self._compute(expr, i)
        self._cache[key] = (expr, out)
        return out

    def element(self, expr: ModExpr, h: dict) -> BlockOp:
        """Action of ``sum_i h[i] e_i``."""
        out = None
        for i, c in h.items():
            term = self.of(expr, i).scale(c)
            out = term if out is None else out + term
        if out is None:
            return self.of(expr, 0).scale(0)
        return out

    def _compute(self, expr: ModExpr, i: int) -> BlockOp:
        S, f = self.S, self.S.field
        if expr.kind == "leaf":
            return BlockOp.single(f, expr.label, expr.module.dim, expr.module.rho(i))
        if expr.kind == "unit":
            return BlockOp.scalar(f, S.coalgebra(expr.op).counit[i])
        left, right = expr.parts
        comul = S.coalgebra(expr.op).comul
        terms = []
        src = left.leaves() + right.leaves()
        dims = {**left.dims(), **right.dims()}
        for j, k in itertools.product(range(S.dim), repeat=2):
            c = comul[i, j, k]
            if f.is_zero(c):
                continue
            piece = self.of(left, j).tensor(self.of(right, k))
            terms.extend((f.reduce(c * t), m) for t, m in piece.terms)
        return BlockOp(f, src, src, dims, terms)


def identity_op(S, expr: ModExpr) -> BlockOp:
    return BlockOp.identity(S.field, expr.leaves(), expr.dims())


def _blockop_labeller(S, op: BlockOp, note=""):
    def label(idx):
        body = "⊗".join(f"{lab}[{i}]" for lab, i in zip(op.src, idx)) or "1_k"
        return f"{note} on {body}" if note else body
    return label


def check_module_morphism(S: SeparatelyOpmonoidalData, f, M, N, actions: FactoredActions = None):
    """Whether ``f`` intertwines the actions of ``M`` and ``N``.

    ``f`` is either a :class:`LinMap` between :class:`ModuleObject` spaces
    (compared densely) or a :class:`BlockOp` between :class:`ModExpr`
    products (compared one algebra basis element at a time, in factored
    form). Returns ``(bool, witness)``.
    """
    if isinstance(f, BlockOp):
        if f.src != M.leaves() or f.tgt != N.leaves():
            raise DimensionMismatch(f"{f} does not map {M} to {N}")
        actions = actions or FactoredActions(S)
        for i in range(S.dim):
            left = actions.of(M, i).then(f)
            right = f.then(actions.of(N, i))
            ok, w = difference(left, right, _blockop_labeller(S, f, f"h={S.basis_names[i]}"))
            if not ok:
                return False, w
        return True, None
    if isinstance(M, ModExpr) or isinstance(N, ModExpr):
        raise TypeError("dense morphisms need ModuleObject endpoints")
    if f.source.dim != M.space.dim or f.target.dim != N.space.dim:
        raise DimensionMismatch(f"{f} does not map {M.name} to {N.name}")
    fl = LinMap(f.field, M.space, N.space, f.matrix)
    left = compose(fl, M.action)
    right = compose(N.action, tensor(S.algebra.id, fl))
    ok, w = maps_equal(left, LinMap(f.field, left.source, left.target, right.matrix))
    if w is not None:
        idx = w.index
        w = Witness(idx, w.left, w.right,
                    f"{S.basis_names[idx[0]]}⊗v{M.space.flat(idx[1:])}")
    return ok, w


def expr_to_module(S: SeparatelyOpmonoidalData, expr: ModExpr) -> ModuleObject:
    """Densely realize a small module expression."""
    if expr.kind == "leaf":
        return expr.module
    if expr.kind == "unit":
        return trivial_module(S, expr.op)
    left, right = (expr_to_module(S, p) for p in expr.parts)
    return tensor_of_modules(S, expr.op, left, right)


PROBE_ENV = "DUOIDAL_PROBE_MODULES"
DEFAULT_PROBES = ("trivial", "free", "free2")


def probe_names() -> tuple[str, ...]:
    """Probe module names, overridable by a comma list in ``DUOIDAL_PROBE_MODULES``."""
    raw = os.environ.get(PROBE_ENV, "").strip()
    if not raw:
        return DEFAULT_PROBES
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def probe_modules(S: SeparatelyOpmonoidalData, names=None):
    """The probe modules: by default trivial, free, and free ∘ free."""
    names = probe_names() if names is None else names
    out = []
    for name in names:
        if name == "trivial":
            out.append(trivial_module(S, CIRC))
        elif name == "trivial-bullet":
            out.append(trivial_module(S, BULLET))
        elif name == "free":
            out.append(free_module(S))
        elif name in ("free2", "free-free"):
            F = free_module(S)
            out.append(flatten_module(tensor_of_modules(S, CIRC, F, F)))
        else:
            raise ValueError(f"unknown probe module {name!r}")
    return out


__all__ = [
    "FLAVORS", "FactoredActions", "ModExpr", "ModuleObject", "SeparatelyOpmonoidalData",
    "check_bimonad_laws", "check_module", "check_module_morphism", "expr_to_module",
    "flatten_module", "free_module", "identity_op", "mbullet", "mcirc", "mleaf",
    "module_from_matrices", "monad_components", "mprod", "munit", "probe_modules", "probe_names",
    "tensor_of_modules", "trivial_module",
]

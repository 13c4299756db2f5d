"""Typed composites of structure maps, evaluated leg by leg.

Objects are expression trees over named leaf spaces: two monoidal products
(tagged ``"∘"`` and ``"•"``), the shared unit, and application of the monad
``T`` (one extra leading leg of the algebra's dimension). In the strict
skeleton both products are the tensor product, so an object's legs are the
concatenation of its leaves' legs. Normalization flattens nested products
with the same tag and drops units, so associators and unitors are
identities on the nose.

An :class:`Arrow` carries its source and target objects and a list of
primitive steps (a small linear map applied at a leg offset, or a scalar).
Composition checks types, so a wrongly wired diagram fails loudly instead of
silently comparing the wrong legs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .linmap import LinMap, TensorSpace, Witness, leg_permutation
from .sparse import LegVector

CIRC = "∘"
BULLET = "•"


@dataclass(frozen=True)
class Obj:
    kind: str
    name: str = ""
    dims: tuple[int, ...] = ()
    op: str = ""
    parts: tuple = ()

    @property
    def legs(self) -> tuple[int, ...]:
        if self.kind == "leaf":
            return self.dims
        if self.kind == "T":
            return self.dims + self.parts[0].legs
        out = ()
        for p in self.parts:
            out += p.legs
        return out

    @property
    def space(self) -> TensorSpace:
        return TensorSpace(self.legs)

    def __str__(self):
        if self.kind == "leaf":
            return self.name
        if self.kind == "unit":
            return "I"
        if self.kind == "T":
            inner = str(self.parts[0])
            return f"T{inner}" if self.parts[0].kind in ("leaf", "T", "unit") else f"T({inner})"
        return "(" + f" {self.op} ".join(str(p) for p in self.parts) + ")"


UNIT_OBJ = Obj("unit")


def leaf(name: str, space) -> Obj:
    dims = space.factors if isinstance(space, TensorSpace) else tuple(space)
    return Obj("leaf", name=name, dims=tuple(dims))


def prod(op: str, *parts: Obj) -> Obj:
    flat = []
    for p in parts:
        if p.kind == "unit":
            continue
        if p.kind == "prod" and p.op == op:
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        return UNIT_OBJ
    if len(flat) == 1:
        return flat[0]
    return Obj("prod", op=op, parts=tuple(flat))


def circ(*parts: Obj) -> Obj:
    return prod(CIRC, *parts)


def bullet(*parts: Obj) -> Obj:
    return prod(BULLET, *parts)


def tapp(inner: Obj, n: int) -> Obj:
    return Obj("T", dims=(n,), parts=(inner,))


class Arrow:
    __slots__ = ("field", "source", "target", "steps", "name")

    def __init__(self, field: FieldSpec, source: Obj, target: Obj, steps=(), name=""):
        self.field = field
        self.source = source
        self.target = target
        self.steps = tuple(steps)
        self.name = name

    @classmethod
    def identity(cls, field, obj: Obj) -> Arrow:
        return cls(field, obj, obj, (), "id")

    @classmethod
    def coherence(cls, field, source: Obj, target: Obj) -> Arrow:
        """A strict associator/unitor: the identity on legs, retyped."""
        if source.legs != target.legs:
            raise TypeError(f"no reindexing from {source} to {target}")
        return cls(field, source, target, (), "≅")

    @classmethod
    def from_linmap(cls, lm: LinMap, source: Obj, target: Obj, name="") -> Arrow:
        if lm.source.factors != source.legs or lm.target.factors != target.legs:
            raise TypeError(
                f"map {lm.source} -> {lm.target} cannot be typed {source} -> {target}")
        return cls(lm.field, source, target, (("apply", lm, 0),), name)

    @classmethod
    def permutation(cls, field, source: Obj, target: Obj, perm, name="") -> Arrow:
        lm = leg_permutation(field, source.space, perm)
        return cls.from_linmap(lm, source, target, name)

    @classmethod
    def scalar(cls, field, c, obj: Obj, name="") -> Arrow:
        return cls(field, obj, obj, (("scale", field.coerce(c)),), name)

    def then(self, *others: Arrow) -> Arrow:
        """``other ∘ self``: run this arrow first."""
        out = self
        for g in others:
            if out.target != g.source:
                raise TypeError(f"cannot compose: {out.target} is not {g.source} (before {g.name})")
            out = Arrow(out.field, out.source, g.target, out.steps + g.steps,
                        f"{g.name}·{out.name}" if out.name and g.name else out.name or g.name)
        return out

    def named(self, name: str) -> Arrow:
        return Arrow(self.field, self.source, self.target, self.steps, name)

    def shifted(self, k: int):
        return tuple((s[0], s[1], s[2] + k) if s[0] == "apply" else s for s in self.steps)

    def run(self, vec: LegVector) -> LegVector:
        for step in self.steps:
            if step[0] == "apply":
                vec = vec.apply(step[1], step[2])
            else:
                vec = vec.scale(step[1])
        return vec

    def evaluate(self, index) -> LegVector:
        return self.run(LegVector.basis(self.field, self.source.legs, index))

    def to_linmap(self) -> LinMap:
        src, tgt = self.source.space, self.target.space
        return LinMap.from_columns(self.field, src, tgt, lambda idx: self.evaluate(idx).data)

    def __repr__(self):
        return f"Arrow({self.source} -> {self.target})"


def par(op: str, *arrows: Arrow) -> Arrow:
    """The product of arrows side by side under ``op``."""
    field = arrows[0].field
    steps = []
    offset = 0
    for a in arrows:
        steps.extend(a.shifted(offset))
        offset += len(a.target.legs)
    return Arrow(field, prod(op, *(a.source for a in arrows)),
                 prod(op, *(a.target for a in arrows)), steps,
                 f" {op} ".join(a.name or "?" for a in arrows))


def compare(left: Arrow, right: Arrow, labeller=None):
    """Evaluate two parallel arrows on every source basis vector.

    Returns ``(True, None)`` or ``(False, witness)`` for the first basis
    vector on which they differ.
    """
    if left.source != right.source or left.target != right.target:
        raise TypeError(f"arrows are not parallel: {left} vs {right}")
    field = left.field
    dims = left.source.legs
    for idx in TensorSpace(dims).basis():
        start = LegVector.basis(field, dims, idx)
        lv, rv = left.run(start), right.run(start)
        if lv.data != rv.data:
            label = labeller(idx) if labeller else ""
            return False, Witness(idx, lv.data, rv.data, label)
    return True, None

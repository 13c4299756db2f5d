"""Factored operators on tensor products of labeled blocks.

Module-level checks act on tensor products of up to six modules of
dimension up to 16, where one dense matrix would have billions of entries.
Every map in those checks is a finite sum of pure tensors of small
per-block matrices followed by a reordering of the blocks:

    op = sum_t c_t * (M_t[b1] ⊗ M_t[b2] ⊗ ...)   then reorder src -> tgt

A :class:`BlockOp` keeps exactly that data. Composition and tensor products
work block by block. Equality is decided exactly by :func:`difference`,
which eliminates one block at a time (see :func:`_nonzero_entry`) and
returns a basis witness when the operators differ.
"""

from __future__ import annotations

import itertools
from math import prod

import numpy as np

from .field import FieldSpec
from .linmap import LinMap, TensorSpace, Witness

_MATMUL_CACHE: dict = {}
_IDENTITIES: dict = {}


def identity_matrix(field: FieldSpec, d: int):
    key = (field, d)
    mat = _IDENTITIES.get(key)
    if mat is None:
        mat = np.full((d, d), field.zero, dtype=object)
        for i in range(d):
            mat[i, i] = field.one
        _IDENTITIES[key] = mat
    return mat


def _matmul(field, a, b):
    key = (id(a), id(b))
    hit = _MATMUL_CACHE.get(key)
    if hit is not None and hit[0] is a and hit[1] is b:
        return hit[2]
    out = a.dot(b)
    if field.is_prime:
        out = out % field.p
    if len(_MATMUL_CACHE) > 200_000:
        _MATMUL_CACHE.clear()
    _MATMUL_CACHE[key] = (a, b, out)
    return out


class BlockOp:
    """A linear map between tensor products of labeled blocks.

    ``src`` and ``tgt`` list the block labels in source and target order
    (the same labels, possibly reordered). Each term is ``(coef, mats)``
    where ``mats`` maps a label to a square matrix acting on that block;
    a missing label means the identity.
    """

    __slots__ = ("field", "src", "tgt", "dims", "terms")

    def __init__(self, field: FieldSpec, src, tgt, dims: dict, terms):
        self.field = field
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        if sorted(self.src) != sorted(self.tgt) or len(set(self.src)) != len(self.src):
            raise ValueError(f"target blocks {self.tgt} do not reorder source blocks {self.src}")
        self.dims = {lab: dims[lab] for lab in self.src}
        self.terms = [(c, m) for c, m in terms if not field.is_zero(c)]

    @classmethod
    def identity(cls, field, labels, dims) -> BlockOp:
        return cls(field, labels, labels, dims, [(field.one, {})])

    @classmethod
    def scalar(cls, field, c) -> BlockOp:
        return cls(field, (), (), {}, [(field.coerce(c), {})])

    @classmethod
    def single(cls, field, label, dim, matrix) -> BlockOp:
        return cls(field, (label,), (label,), {label: dim}, [(field.one, {label: matrix})])

    def reordered(self, tgt) -> BlockOp:
        """Same terms with the output blocks listed in order ``tgt``."""
        return BlockOp(self.field, self.src, tgt, self.dims, self.terms)

    def then(self, g: BlockOp) -> BlockOp:
        """``g ∘ self``."""
        if self.tgt != g.src:
            raise TypeError(f"cannot compose: blocks {self.tgt} feed {g.src}")
        f = self.field
        terms = []
        for c1, m1 in self.terms:
            for c2, m2 in g.terms:
                mats = dict(m1)
                for lab, b in m2.items():
                    a = mats.get(lab)
                    mats[lab] = b if a is None else _matmul(f, b, a)
                terms.append((f.reduce(c1 * c2), mats))
        return BlockOp(f, self.src, g.tgt, self.dims, terms)

    def tensor(self, other: BlockOp) -> BlockOp:
        if set(self.src) & set(other.src):
            raise ValueError("tensor factors must use disjoint block labels")
        f = self.field
        terms = [(f.reduce(c1 * c2), {**m1, **m2})
                 for c1, m1 in self.terms for c2, m2 in other.terms]
        return BlockOp(f, self.src + other.src, self.tgt + other.tgt,
                       {**self.dims, **other.dims}, terms)

    def scale(self, c) -> BlockOp:
        f = self.field
        return BlockOp(f, self.src, self.tgt, self.dims,
                       [(f.reduce(c * t), m) for t, m in self.terms])

    def __add__(self, other: BlockOp) -> BlockOp:
        if self.src != other.src or self.tgt != other.tgt:
            raise TypeError("cannot add operators with different block orders")
        return BlockOp(self.field, self.src, self.tgt, self.dims, self.terms + other.terms)

    def __sub__(self, other: BlockOp) -> BlockOp:
        return self + other.scale(-1)

    @property
    def source(self) -> TensorSpace:
        return TensorSpace(tuple(self.dims[lab] for lab in self.src))

    @property
    def target(self) -> TensorSpace:
        return TensorSpace(tuple(self.dims[lab] for lab in self.tgt))

    def image(self, index) -> dict:
        """Image of the source basis vector ``index`` (one entry per source block)."""
        f = self.field
        pos = {lab: i for i, lab in enumerate(self.src)}
        out = {}
        for c, mats in self.terms:
            cols = []
            for lab, i in zip(self.src, index):
                m = mats.get(lab)
                if m is None:
                    cols.append([(i, f.one)])
                else:
                    cols.append([(r, v) for r, v in enumerate(m[:, i]) if not f.is_zero(v)])
            for combo in itertools.product(*cols):
                val = c
                for _, v in combo:
                    val = val * v
                key = tuple(combo[pos[lab]][0] for lab in self.tgt)
                out[key] = out.get(key, 0) + val
        return {k: f.reduce(v) for k, v in out.items() if not f.is_zero(v)}

    def to_linmap(self) -> LinMap:
        return LinMap.from_columns(self.field, self.source, self.target, self.image)

    def __repr__(self):
        return f"BlockOp({'⊗'.join(self.src) or 'k'} -> {'⊗'.join(self.tgt) or 'k'}, {len(self.terms)} terms)"


def _entry(field, m, r, c):
    if m is None:
        return field.one if r == c else field.zero
    return m[r, c]


def _decompose(field, vectors):
    """Express each vector through an independent subset of them.

    Returns ``(pivots, coeffs)`` with ``vectors[k] == sum(a * vectors[pivots[l]]
    for l, a in coeffs[k].items())``.
    """
    rows = []  # (reduced vector, pivot column, combination over pivot slots)
    pivots, coeffs = [], []
    for k, v in enumerate(vectors):
        w = list(v)
        combo = {}
        for row, pc, rcombo in rows:
            if not field.is_zero(w[pc]):
                factor = field.div(w[pc], row[pc])
                w = [field.reduce(a - factor * b) for a, b in zip(w, row)]
                for l, a in rcombo.items():
                    combo[l] = field.reduce(combo.get(l, 0) + factor * a)
        nz = next((i for i, a in enumerate(w) if not field.is_zero(a)), None)
        if nz is None:
            coeffs.append({l: a for l, a in combo.items() if not field.is_zero(a)})
            continue
        slot = len(pivots)
        pivots.append(k)
        rcombo = {l: field.reduce(-a) for l, a in combo.items()}
        rcombo[slot] = field.one
        rows.append((w, nz, rcombo))
        coeffs.append({slot: field.one})
    return pivots, coeffs


def _nonzero_entry(field, dims, terms, depth=0):
    """Find block entries where ``sum_t c_t ⊗_b M_t[b]`` is nonzero.

    ``terms`` is a list of ``(coef, mats)`` with ``mats`` a tuple indexed by
    block position (``None`` for identity). Returns a tuple of
    ``(row, col)`` pairs from block ``depth`` on, or ``None`` if the sum
    vanishes.

    Group the terms by their first matrix, pick an independent set of
    those matrices, and rewrite the sum as ``sum_l V_l ⊗ S_l``. It vanishes
    iff every ``S_l`` does, so recurse on each ``S_l``.
    """
    if depth == len(dims):
        total = field.reduce(sum((c for c, _ in terms), field.zero))
        return None if field.is_zero(total) else ()
    d = dims[depth]
    groups: dict = {}
    for c, mats in terms:
        m = mats[depth]
        key = None if m is None else tuple(m.flat)
        groups.setdefault(key, (m, []))[1].append((c, mats))
    keys = list(groups)
    vecs = []
    for key in keys:
        m = groups[key][0]
        vecs.append(tuple(identity_matrix(field, d).flat) if m is None else key)
    pivots, coeffs = _decompose(field, vecs)
    subs = [[] for _ in pivots]
    for key, combo in zip(keys, coeffs):
        for l, a in combo.items():
            subs[l].extend((field.reduce(c * a), mats) for c, mats in groups[key][1])
    for l, sub in enumerate(subs):
        rest = _nonzero_entry(field, dims, sub, depth + 1)
        if rest is None:
            continue
        total = [field.zero] * (d * d)
        for l2, sub2 in enumerate(subs):
            s = field.zero
            for c, mats in sub2:
                val = c
                for b, (r, cc) in enumerate(rest, start=depth + 1):
                    val = val * _entry(field, mats[b], r, cc)
                s += val
            s = field.reduce(s)
            if not field.is_zero(s):
                vec = vecs[pivots[l2]]
                total = [field.reduce(t + s * v) for t, v in zip(total, vec)]
        e = next(i for i, t in enumerate(total) if not field.is_zero(t))
        return (divmod(e, d),) + rest
    return None


def difference(f: BlockOp, g: BlockOp, labeller=None):
    """Decide ``f == g`` exactly.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is a
    source basis vector (one index per source block) whose images differ.
    """
    if f.src != g.src or f.tgt != g.tgt:
        raise TypeError(f"operators are not parallel: {f} vs {g}")
    field = f.field
    # Blocks of dimension one only contribute scalars.
    live = [lab for lab in f.src if f.dims[lab] > 1]
    terms = []
    for sign, op in ((1, f), (-1, g)):
        for c, mats in op.terms:
            coef = c * sign
            for lab, m in mats.items():
                if op.dims[lab] == 1:
                    coef = coef * m[0, 0]
            terms.append((field.reduce(coef), tuple(mats.get(lab) for lab in live)))
    terms = [t for t in terms if not field.is_zero(t[0])]
    found = _nonzero_entry(field, [f.dims[lab] for lab in live], terms)
    if found is None:
        return True, None
    cols = dict(zip(live, (c for _, c in found)))
    index = tuple(cols.get(lab, 0) for lab in f.src)
    label = labeller(index) if labeller else ""
    return False, Witness(index, f.image(index), g.image(index), label)


def blockops_equal(f: BlockOp, g: BlockOp) -> bool:
    return difference(f, g)[0]


def total_dim(op: BlockOp) -> int:
    return prod(op.dims.values())

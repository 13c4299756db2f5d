"""Exact linear maps between tensor spaces with tracked factor structure.

A :class:`TensorSpace` is an ordered list of factor dimensions; the empty
list is the unit object ``k``. Basis vectors of a tensor space are
multi-indices, flattened in row-major order so that the first factor varies
slowest, which is the order ``numpy.kron`` uses.

A :class:`LinMap` stores a dense object-dtype matrix of shape
``(dim target, dim source)``. Leg permutations keep only their permutation
and build the matrix on demand, since the sparse evaluator in
:mod:`duoidal.arith.sparse` never needs it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import prod

import numpy as np

from ..errors import DimensionMismatch, InvalidPermutation
from .field import FieldSpec


@dataclass(frozen=True)
class TensorSpace:
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        if any(d < 1 for d in factors):
            raise DimensionMismatch(f"factor dimensions must be positive: {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *dims: int) -> TensorSpace:
        return cls(tuple(dims))

    @property
    def dim(self) -> int:
        return prod(self.factors)

    @property
    def legs(self) -> int:
        return len(self.factors)

    def __matmul__(self, other: TensorSpace) -> TensorSpace:
        return TensorSpace(self.factors + other.factors)

    def basis(self):
        """Multi-indices of the basis, in flat order."""
        return itertools.product(*(range(d) for d in self.factors))

    def flat(self, index: tuple[int, ...]) -> int:
        out = 0
        for i, d in zip(index, self.factors):
            out = out * d + i
        return out

    def unflat(self, j: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            j, r = divmod(j, d)
            out.append(r)
        return tuple(reversed(out))

    def __str__(self):
        if not self.factors:
            return "k"
        return "⊗".join(f"k{d}" if d > 1 else "k" for d in self.factors)


UNIT = TensorSpace(())


@dataclass(frozen=True)
class Witness:
    """A basis vector on which two maps disagree, with both images.

    Images are dictionaries from target multi-index to scalar with zero
    entries omitted.
    """

    index: tuple[int, ...]
    left: dict = dc_field(default_factory=dict)
    right: dict = dc_field(default_factory=dict)
    label: str = ""

    def describe(self, fmt=str) -> str:
        def show(vec):
            if not vec:
                return "0"
            return " + ".join(f"{fmt(c)}·{list(k)}" for k, c in sorted(vec.items()))

        head = self.label or str(list(self.index))
        return f"at {head}: left = {show(self.left)}; right = {show(self.right)}"


def _check_perm(perm, n):
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(n)):
        raise InvalidPermutation(f"{perm} is not a permutation of {n} factors")
    return perm


class LinMap:
    """A linear map ``source -> target`` with exact entries."""

    __slots__ = ("field", "source", "target", "_matrix", "perm", "_cols")

    def __init__(self, field: FieldSpec, source: TensorSpace, target: TensorSpace,
                 matrix=None, *, perm=None):
        self.field = field
        self.source = source
        self.target = target
        self.perm = None
        self._cols = {}
        if perm is not None:
            self.perm = _check_perm(perm, source.legs)
            if tuple(source.factors[p] for p in self.perm) != target.factors:
                raise DimensionMismatch("permuted factors do not match the target")
            self._matrix = None
            return
        mat = np.array(matrix, dtype=object)
        if mat.shape != (target.dim, source.dim):
            raise DimensionMismatch(
                f"matrix shape {mat.shape} does not fit {source} -> {target}")
        if field.is_prime:
            mat = mat % field.p
        else:
            mat = np.vectorize(field.coerce, otypes=[object])(mat) if mat.size else mat
        self._matrix = mat

    # construction helpers

    @classmethod
    def identity(cls, field: FieldSpec, space: TensorSpace) -> LinMap:
        return cls(field, space, space, perm=range(space.legs))

    @classmethod
    def reshape(cls, field: FieldSpec, source: TensorSpace, target: TensorSpace) -> LinMap:
        """The identity matrix between two spaces of equal dimension, retyped."""
        if source.dim != target.dim:
            raise DimensionMismatch(f"cannot reshape {source} into {target}")
        return cls(field, source, target, np.identity(source.dim, dtype=object) * field.one)

    @classmethod
    def zero(cls, field: FieldSpec, source: TensorSpace, target: TensorSpace) -> LinMap:
        return cls(field, source, target, np.full((target.dim, source.dim), field.zero, dtype=object))

    @classmethod
    def from_columns(cls, field, source, target, columns) -> LinMap:
        """Build from a function or list giving the image of each source basis index.

        Each image is a dict from target multi-index to scalar.
        """
        mat = np.full((target.dim, source.dim), field.zero, dtype=object)
        for j, idx in enumerate(source.basis()):
            image = columns(idx) if callable(columns) else columns[j]
            for tidx, c in image.items():
                mat[target.flat(tidx), j] += c
        return cls(field, source, target, mat)

    @property
    def matrix(self) -> np.ndarray:
        if self._matrix is None:
            f = self.field
            mat = np.full((self.target.dim, self.source.dim), f.zero, dtype=object)
            for j, idx in enumerate(self.source.basis()):
                mat[self.target.flat(tuple(idx[p] for p in self.perm)), j] = f.one
            self._matrix = mat
        return self._matrix

    @property
    def shape(self):
        return (self.target.dim, self.source.dim)

    def column(self, j: int):
        """Nonzero entries of column ``j`` as ``[(target multi-index, scalar)]``."""
        col = self._cols.get(j)
        if col is None:
            if self.perm is not None:
                idx = self.source.unflat(j)
                col = [(tuple(idx[p] for p in self.perm), self.field.one)]
            else:
                rows = self._matrix[:, j]
                col = [(self.target.unflat(i), c) for i, c in enumerate(rows)
                       if not self.field.is_zero(c)]
            self._cols[j] = col
        return col

    def image(self, index: tuple[int, ...]) -> dict:
        return dict(self.column(self.source.flat(index)))

    def __call__(self, vector: dict) -> dict:
        out = {}
        for idx, c in vector.items():
            for tidx, e in self.column(self.source.flat(idx)):
                out[tidx] = out.get(tidx, 0) + c * e
        f = self.field
        return {k: f.reduce(v) for k, v in out.items() if not f.is_zero(v)}

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and maps_equal(self, other)[0])

    __hash__ = None

    def __repr__(self):
        kind = f"perm={self.perm}" if self.perm is not None else "dense"
        return f"LinMap({self.source} -> {self.target}, {kind}, {self.field})"


def compose(g: LinMap, f: LinMap) -> LinMap:
    """The composite ``g ∘ f``."""
    if f.target.dim != g.source.dim:
        raise DimensionMismatch(
            f"cannot compose {g.source} <- {f.target}: dimensions {g.source.dim} != {f.target.dim}")
    if f.perm is not None and g.perm is not None and f.target == g.source:
        return LinMap(f.field, f.source, g.target, perm=tuple(f.perm[p] for p in g.perm))
    mat = g.matrix.dot(f.matrix)
    return LinMap(f.field, f.source, g.target, mat)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """The Kronecker product; factor lists concatenate."""
    if f.perm is not None and g.perm is not None:
        n = f.source.legs
        return LinMap(f.field, f.source @ g.source, f.target @ g.target,
                      perm=f.perm + tuple(n + p for p in g.perm))
    return LinMap(f.field, f.source @ g.source, f.target @ g.target, np.kron(f.matrix, g.matrix))


def tensor_all(maps) -> LinMap:
    maps = list(maps)
    out = maps[0]
    for m in maps[1:]:
        out = tensor(out, m)
    return out


def leg_permutation(field: FieldSpec, space: TensorSpace, perm) -> LinMap:
    """Reorder legs so that output leg ``i`` is input leg ``perm[i]``."""
    perm = _check_perm(perm, space.legs)
    return LinMap(field, space, TensorSpace(tuple(space.factors[p] for p in perm)), perm=perm)


def maps_equal(f: LinMap, g: LinMap):
    """Compare two maps entrywise.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is
    the first source basis vector whose images differ.
    """
    if f.shape != g.shape:
        raise DimensionMismatch(f"cannot compare maps of shapes {f.shape} and {g.shape}")
    field = f.field
    if f.perm is not None and g.perm is not None and f.perm == g.perm:
        return True, None
    diff = f.matrix - g.matrix
    if field.is_prime:
        diff = diff % field.p
    nonzero = np.nonzero(diff != 0)[1] if diff.size else ()
    if len(nonzero) == 0:
        return True, None
    j = int(min(nonzero))
    idx = f.source.unflat(j)
    return False, Witness(idx, dict(f.column(j)), dict(g.column(j)))

"""Sparse multi-leg vectors and the two primitive leg operations.

Diagram checks push one basis vector at a time through long composites.
Materializing those composites as dense matrices would cost
``dim(source) * dim(target)`` entries per step, while a pure tensor pushed
through a handful of structure maps stays small. A :class:`LegVector` maps
multi-indices to nonzero scalars; :meth:`LegVector.apply` runs a small
:class:`~duoidal.arith.linmap.LinMap` on a contiguous range of legs.
"""

from __future__ import annotations

from operator import itemgetter

from .field import FieldSpec
from .linmap import LinMap


def _picker(positions):
    """``idx -> tuple(idx[p] for p in positions)``, always returning a tuple."""
    if len(positions) == 1:
        p = positions[0]
        return lambda idx: (idx[p],)
    if not positions:
        return lambda idx: ()
    return itemgetter(*positions)


class LegVector:
    __slots__ = ("field", "dims", "data")

    def __init__(self, field: FieldSpec, dims: tuple[int, ...], data: dict):
        self.field = field
        self.dims = tuple(dims)
        self.data = data

    @classmethod
    def basis(cls, field: FieldSpec, dims, index) -> LegVector:
        return cls(field, dims, {tuple(index): field.one})

    def apply(self, lm: LinMap, at: int) -> LegVector:
        k = lm.source.legs
        if self.dims[at:at + k] != lm.source.factors:
            raise ValueError(f"map {lm.source} does not fit legs {self.dims[at:at + k]} at {at}")
        dims = self.dims[:at] + lm.target.factors + self.dims[at + k:]
        out = {}
        perm = lm.perm
        end = at + k
        if perm is not None:
            pick = _picker(tuple(at + p for p in perm))
            for idx, c in self.data.items():
                out[idx[:at] + pick(idx) + idx[end:]] = c
            return LegVector(self.field, dims, out)
        flat, column = lm.source.flat, lm.column
        cols = {}
        get = out.get
        for idx, c in self.data.items():
            key = idx[at:end]
            col = cols.get(key)
            if col is None:
                col = cols[key] = column(flat(key))
            head, tail = idx[:at], idx[end:]
            for tidx, e in col:
                new = head + tidx + tail
                out[new] = get(new, 0) + c * e
        return LegVector(self.field, dims, self._clean(out))

    def permute(self, perm) -> LegVector:
        """Output leg ``i`` is input leg ``perm[i]``."""
        dims = tuple(self.dims[p] for p in perm)
        pick = _picker(tuple(perm))
        return LegVector(self.field, dims, {pick(idx): c for idx, c in self.data.items()})

    def scale(self, c) -> LegVector:
        f = self.field
        return LegVector(f, self.dims, self._clean({k: v * c for k, v in self.data.items()}))

    def _clean(self, data):
        f = self.field
        if f.is_prime:
            p = f.p
            return {k: v % p for k, v in data.items() if v % p}
        return {k: v for k, v in data.items() if v}

    def __eq__(self, other):
        if not isinstance(other, LegVector):
            return NotImplemented
        return self.dims == other.dims and self.data == other.data

    __hash__ = None

    def __repr__(self):
        return f"LegVector(dims={self.dims}, terms={len(self.data)})"

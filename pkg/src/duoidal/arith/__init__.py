"""Exact scalars and multilinear-map algebra over tensor spaces."""

from .blockop import BlockOp, blockops_equal, difference
from .field import QQ, FieldSpec
from .linmap import (UNIT, LinMap, TensorSpace, Witness, compose, leg_permutation,
                     maps_equal, tensor, tensor_all)
from .sparse import LegVector
from .typed import BULLET, CIRC, UNIT_OBJ, Arrow, Obj, bullet, circ, compare, leaf, par, prod, tapp

__all__ = [
    "BULLET", "CIRC", "QQ", "UNIT", "UNIT_OBJ", "Arrow", "BlockOp", "FieldSpec", "LegVector",
    "LinMap", "Obj", "TensorSpace", "Witness", "blockops_equal", "bullet", "circ", "compare",
    "compose", "difference", "leaf", "leg_permutation", "maps_equal", "par", "prod", "tapp",
    "tensor", "tensor_all",
]

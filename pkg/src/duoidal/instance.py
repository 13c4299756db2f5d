"""Instance files: JSON in, validated domain objects out, and back.

Terms of an R-matrix are index lists followed by a coefficient, so
``[0, 1, "1/2"]`` is ``½ e_0⊗e_1`` and ``[0, 2, 1, 0, 1]`` is
``e_0⊗e_2⊗e_1⊗e_0``. The schema ships as ``data/instance.schema.json``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .arith import FieldSpec, TensorSpace
from .bialg import BialgebraData, ClassicalRElement
from .errors import MalformedInstance
from .monad_em import SeparatelyOpmonoidalData, module_from_matrices
from .rmatrix import DEFAULT_CONVENTION, DuoidalRMatrix, embed_classical

DATA = resources.files("duoidal") / "data"


def schema() -> dict:
    return json.loads((DATA / "instance.schema.json").read_text(encoding="utf-8"))


def bundled_names() -> list[str]:
    return sorted(p.name[:-5] for p in DATA.iterdir()
                  if p.name.endswith(".json") and p.name != "instance.schema.json")


def bundled_path(name: str):
    """Path of a bundled instance, by name with or without ``.json``."""
    stem = name[:-5] if name.endswith(".json") else name
    path = DATA / f"{stem}.json"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled instance {name!r}")
    return path


@dataclass(eq=False)
class Instance:
    name: str
    field: FieldSpec
    circ: BialgebraData
    bullet: BialgebraData
    r_classical: ClassicalRElement | None = None
    r_inverse: ClassicalRElement | None = None
    r4: DuoidalRMatrix | None = None
    test_spaces: tuple = ()
    test_modules: list = dc_field(default_factory=list)
    description: str = ""

    @property
    def bialgebra(self) -> BialgebraData:
        return self.circ

    @property
    def S(self) -> SeparatelyOpmonoidalData:
        return SeparatelyOpmonoidalData(self.circ, self.bullet)

    @property
    def has_rmatrix(self) -> bool:
        return self.r_classical is not None or self.r4 is not None

    def rmatrix(self, convention: str = DEFAULT_CONVENTION) -> DuoidalRMatrix | None:
        """The duoidal R-matrix: given directly, or embedded from a classical one."""
        if self.r4 is not None:
            return self.r4
        if self.r_classical is not None:
            return embed_classical(self.circ, self.r_classical, convention)
        return None


def _location(err: jsonschema.ValidationError) -> str:
    out = ""
    for part in err.absolute_path:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out or "<root>"


def _terms(f: FieldSpec, raw, legs: int, dim: int, where: str) -> dict:
    out = {}
    for k, term in enumerate(raw):
        loc = f"{where}[{k}]"
        if len(term) != legs + 1:
            raise MalformedInstance(f"expected {legs} indices and a coefficient", loc)
        idx = term[:legs]
        if not all(isinstance(i, int) and 0 <= i < dim for i in idx):
            raise MalformedInstance(f"indices must lie in 0..{dim - 1}", loc)
        try:
            c = f.coerce(term[legs])
        except (TypeError, ValueError) as exc:
            raise MalformedInstance(str(exc), loc) from None
        out[tuple(idx)] = f.reduce(out.get(tuple(idx), 0) + c)
    return {k: v for k, v in out.items() if not f.is_zero(v)}


def _prefixed(exc: MalformedInstance, prefix: str) -> MalformedInstance:
    loc = f"{prefix}.{exc.location}" if exc.location else prefix
    return MalformedInstance(exc.message, loc)


def from_dict(data: dict, name: str = "") -> Instance:
    """Parse an instance; shape errors raise :class:`MalformedInstance` with a location."""
    try:
        jsonschema.validate(data, schema())
    except jsonschema.ValidationError as err:
        raise MalformedInstance(err.message, _location(err)) from None
    fd = data["field"]
    try:
        fld = FieldSpec.prime(fd["p"]) if fd["kind"] == "prime" else FieldSpec.rationals()
    except (KeyError, ValueError) as exc:
        raise MalformedInstance(f"bad field: {exc}", "field") from None
    b = data["bialgebra"]
    name = data.get("name", name)
    try:
        B = BialgebraData.build(fld, b["dim"], b["unit"], b["mul"], b["comul"], b["counit"],
                                b.get("basis"), name)
    except MalformedInstance as exc:
        raise _prefixed(exc, "bialgebra") from None
    except (TypeError, ValueError) as exc:
        raise MalformedInstance(str(exc), "bialgebra") from None
    B2 = B
    if "comul2" in data:
        try:
            B2 = B.with_coalgebra(data["comul2"]["comul"], data["comul2"]["counit"])
        except MalformedInstance as exc:
            raise _prefixed(exc, "comul2") from None
    inst = Instance(name, fld, B, B2, description=data.get("description", ""))
    if "rmatrix" in data:
        rm = data["rmatrix"]
        legs = rm["legs"]
        terms = _terms(fld, rm["terms"], legs, B.dim, "rmatrix.terms")
        if legs == 2:
            inst.r_classical = ClassicalRElement(terms)
            if "inverse" in rm:
                inst.r_inverse = ClassicalRElement(_terms(fld, rm["inverse"], 2, B.dim,
                                                          "rmatrix.inverse"))
            for key in ("n", "w", "i"):
                if key in rm and not fld.eq(fld.coerce(rm[key]), 1):
                    raise MalformedInstance("a classical R-matrix embeds with n = w = i = 1",
                                            f"rmatrix.{key}")
        else:
            if "inverse" in rm:
                raise MalformedInstance("inverses are only read for two-leg R-matrices",
                                        "rmatrix.inverse")
            inst.r4 = DuoidalRMatrix(fld, B.dim, terms, rm.get("n", 1), rm.get("w", 1),
                                     rm.get("i", 1))
    spaces = []
    S = inst.S
    for k, obj in enumerate(data.get("test_objects", [])):
        d = obj["dim"]
        spaces.append(TensorSpace((d,)) if d > 1 else TensorSpace(()))
        if "action" in obj:
            loc = f"test_objects[{k}].action"
            try:
                M = module_from_matrices(S, obj["action"], obj.get("name", f"M{k}"))
            except MalformedInstance as exc:
                raise MalformedInstance(exc.message, loc) from None
            if M.dim != d:
                raise MalformedInstance(f"action matrices are {M.dim}x{M.dim}, dim is {d}", loc)
            inst.test_modules.append(M)
    inst.test_spaces = tuple(dict.fromkeys(spaces))
    return inst


def load(path) -> Instance:
    """Read an instance file; also accepts the name of a bundled instance."""
    p = Path(path)
    if not p.exists() and not p.suffix:
        p = Path(str(bundled_path(str(path))))
    elif not p.exists():
        try:
            p = Path(str(bundled_path(p.name)))
        except FileNotFoundError:
            raise FileNotFoundError(f"no such instance file: {path}") from None
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedInstance(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    return from_dict(data, p.stem)


# writing


def scalar_out(f: FieldSpec, x):
    q = f.to_fraction(x)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _nested(f, arr):
    return np.vectorize(lambda x: scalar_out(f, x), otypes=[object])(arr).tolist()


def to_dict(inst: Instance) -> dict:
    f, B = inst.field, inst.circ
    out = {"name": inst.name}
    if inst.description:
        out["description"] = inst.description
    out["field"] = {"kind": "prime", "p": f.p} if f.is_prime else {"kind": "rationals"}
    out["bialgebra"] = {
        "dim": B.dim, "basis": list(B.basis_names), "unit": _nested(f, B.unit),
        "mul": _nested(f, B.mul), "comul": _nested(f, B.comul), "counit": _nested(f, B.counit),
    }
    if inst.bullet is not inst.circ:
        out["comul2"] = {"comul": _nested(f, inst.bullet.comul),
                         "counit": _nested(f, inst.bullet.counit)}
    if inst.r_classical is not None:
        out["rmatrix"] = {"legs": 2, "terms": [list(k) + [scalar_out(f, c)]
                                               for k, c in sorted(inst.r_classical.r2.items())]}
        if inst.r_inverse is not None:
            out["rmatrix"]["inverse"] = [list(k) + [scalar_out(f, c)]
                                         for k, c in sorted(inst.r_inverse.r2.items())]
    elif inst.r4 is not None:
        r = inst.r4
        out["rmatrix"] = {"legs": 4, "terms": [list(k) + [scalar_out(f, c)]
                                               for k, c in sorted(r.r4.items())],
                          "n": scalar_out(f, r.nu), "w": scalar_out(f, r.varpi),
                          "i": scalar_out(f, r.iota)}
    objs = []
    for M in inst.test_modules:
        objs.append({"name": M.name, "dim": M.dim,
                     "action": [_nested(f, M.rho(i)) for i in range(B.dim)]})
    listed = {M.dim for M in inst.test_modules}
    objs.extend({"dim": s.dim} for s in inst.test_spaces if s.dim not in listed)
    if objs:
        out["test_objects"] = objs
    return out


_FLAT_LIST = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(inst: Instance) -> str:
    """Indented JSON with innermost lists kept on one line."""
    text = json.dumps(to_dict(inst), indent=1, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: "[" + " ".join(m.group(1).split()) + "]", text) + "\n"


def instance_from_bialgebra(B: BialgebraData, name: str, *, bullet: BialgebraData | None = None,
                            r: ClassicalRElement | None = None,
                            r_inverse: ClassicalRElement | None = None,
                            r4: DuoidalRMatrix | None = None, description="") -> Instance:
    return Instance(name, B.field, B, bullet or B, r, r_inverse, r4, description=description)


__all__ = ["Instance", "bundled_names", "bundled_path", "dumps", "from_dict",
           "instance_from_bialgebra", "load", "schema", "to_dict"]

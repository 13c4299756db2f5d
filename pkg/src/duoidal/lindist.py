"""Linear distributors of a normal duoidal structure and their lifts to modules.

Each distributor is one interchange component with a unit in one slot::

    ∂ℓℓ = ζ_{a,1,b,c}: a∘(b•c) → (a∘b)•c
    ∂ℓr = ζ_{1,a,b,c}: a∘(b•c) → b•(a∘c)
    ∂rℓ = ζ_{b,c,a,1}: (b•c)∘a → (b∘a)•c
    ∂rr = ζ_{b,c,1,a}: (b•c)∘a → b•(c∘a)

For the symmetric interchange ``∂ℓℓ`` and ``∂rr`` are identities on legs,
``∂ℓr`` exchanges the first two blocks and ``∂rℓ`` the last two.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import BULLET, CIRC, UNIT_OBJ, Arrow, LinMap, Obj, TensorSpace, bullet, circ, leaf, par
from .duoidal_core import (DEFAULT_OBJECTS, DuoidalStructure, check_double_opmonoidal,
                           check_duoidal_axioms)
from .errors import PrerequisiteFailed
from .monad_em import SeparatelyOpmonoidalData
from .report import CheckReport, merge

NORMAL_TO_LINEAR = "eq:normal-duoidal-to-linear-dist"
B0_CONJUGATE = "eq:normal-B0-conjugate"
LIFT1 = "eq:linearly-distributive-monad-1"
LIFT2 = "eq:linearly-distributive-monad-2"
LIFT3 = "eq:linearly-distributive-monad-3"
LIFT4 = "eq:linearly-distributive-monad-4"
IMPLIES = "prop:cocommutative-trimonads-are-pastro-monads"

KINDS = ("ll", "lr", "rl", "rr")


@dataclass(frozen=True, eq=False)
class LinearDistributors:
    D: DuoidalStructure
    planar: bool = True

    @property
    def kinds(self):
        return KINDS if self.planar else ("ll", "rr")

    def arrow(self, kind: str, a: Obj, b: Obj, c: Obj) -> Arrow:
        """``∂`` of the given kind, typed as in the module docstring.

        For ``ll``/``lr`` the source is ``a∘(b•c)``; for ``rl``/``rr`` it is
        ``(b•c)∘a``.
        """
        if kind not in self.kinds:
            raise ValueError(f"distributor {kind!r} is not part of this structure")
        I = UNIT_OBJ
        args = {"ll": (a, I, b, c), "lr": (I, a, b, c), "rl": (b, c, a, I), "rr": (b, c, I, a)}[kind]
        return self.D.zeta_arrow(*args).named(f"∂{kind}")

    def component(self, kind: str, a: TensorSpace, b: TensorSpace, c: TensorSpace) -> LinMap:
        objs = [leaf(nm, sp) for nm, sp in zip("abc", (a, b, c))]
        return self.arrow(kind, *objs).to_linmap()


def _expected_perm(kind, a: TensorSpace, b: TensorSpace, c: TensorSpace):
    """The leg permutation each distributor should be in the symmetric model."""
    la, lb, lc = a.legs, b.legs, c.legs
    A = list(range(la))
    B = list(range(la, la + lb))
    C = list(range(la + lb, la + lb + lc))
    if kind == "ll":
        return A + B + C
    if kind == "lr":
        return B + A + C
    # sources (b•c)∘a: legs b, c, a
    B, C, A = list(range(lb)), list(range(lb, lb + lc)), list(range(lb + lc, lb + lc + la))
    return B + A + C if kind == "rl" else B + C + A


def distributors_from_normal(D: DuoidalStructure, objects=DEFAULT_OBJECTS, *, planar=True,
                             strict: bool = True):
    """The distributors of ``D`` plus a report comparing them with their expected form.

    With ``strict`` the duoidal axioms of ``D`` must pass first.
    """
    if strict:
        pre = check_duoidal_axioms(D, objects[:2])
        if not pre.passed:
            raise PrerequisiteFailed("the duoidal axioms fail", pre)
    dist = LinearDistributors(D, planar)
    report = CheckReport("linear distributors")
    if D.symmetric:
        from .arith import leg_permutation, maps_equal
        for kind in dist.kinds:
            for spaces in itertools.product(objects, repeat=3):
                got = dist.component(kind, *spaces)
                a, b, c = spaces
                src = (a @ b @ c) if kind in ("ll", "lr") else (b @ c @ a)
                want = leg_permutation(D.field, src, _expected_perm(kind, a, b, c))
                ok, w = maps_equal(got, want)
                report.add(NORMAL_TO_LINEAR, ok, w, _where(spaces), f"∂{kind}")
    return dist, report


def _where(spaces):
    return "(" + ", ".join(str(s) for s in spaces) + ")"


def lift_square(S: SeparatelyOpmonoidalData, dist: LinearDistributors, kind: str, a, b, c):
    """The two routes of the lift square for ``∂kind`` at objects ``a, b, c``."""
    T, T2 = S.T, S.T2
    d = dist.arrow
    idT = lambda o: Arrow.identity(S.field, T(o))  # noqa: E731
    if kind == "ll":
        top = T2(CIRC, a, bullet(b, c)).then(par(CIRC, idT(a), T2(BULLET, b, c)),
                                            d("ll", T(a), T(b), T(c)))
        bottom = S.Tf(d("ll", a, b, c)).then(T2(BULLET, circ(a, b), c),
                                            par(BULLET, T2(CIRC, a, b), idT(c)))
    elif kind == "rr":
        top = T2(CIRC, bullet(b, c), a).then(par(CIRC, T2(BULLET, b, c), idT(a)),
                                            d("rr", T(a), T(b), T(c)))
        bottom = S.Tf(d("rr", a, b, c)).then(T2(BULLET, b, circ(c, a)),
                                            par(BULLET, idT(b), T2(CIRC, c, a)))
    elif kind == "lr":
        top = T2(CIRC, a, bullet(b, c)).then(par(CIRC, idT(a), T2(BULLET, b, c)),
                                            d("lr", T(a), T(b), T(c)))
        bottom = S.Tf(d("lr", a, b, c)).then(T2(BULLET, b, circ(a, c)),
                                            par(BULLET, idT(b), T2(CIRC, a, c)))
    elif kind == "rl":
        # source (b•c)∘a, written (a'•b')∘c' in the planar figure
        top = T2(CIRC, bullet(b, c), a).then(par(CIRC, T2(BULLET, b, c), idT(a)),
                                            d("rl", T(a), T(b), T(c)))
        bottom = S.Tf(d("rl", a, b, c)).then(T2(BULLET, circ(b, a), c),
                                            par(BULLET, T2(CIRC, b, a), idT(c)))
    else:
        raise ValueError(f"unknown distributor {kind!r}")
    return top, bottom


_DIAGRAM = {"ll": LIFT1, "rr": LIFT2, "lr": LIFT3, "rl": LIFT4}


def _check_kinds(S, dist, kinds, objects, title) -> CheckReport:
    report = CheckReport(title)
    for kind in kinds:
        for spaces in itertools.product(objects, repeat=3):
            objs = [leaf(nm, sp) for nm, sp in zip("abc", spaces)]
            top, bottom = lift_square(S, dist, kind, *objs)
            ok, w = S.compare(top, bottom)
            report.add(_DIAGRAM[kind], ok, w, _where(spaces), f"∂{kind}")
    return report


def check_lindist_lift_nonplanar(S: SeparatelyOpmonoidalData, dist: LinearDistributors | None = None,
                                 objects=DEFAULT_OBJECTS) -> CheckReport:
    """The lift squares for ``∂ℓℓ`` and ``∂rr``.

    The squares involve only the underlying objects of the algebras, so the
    probes are plain spaces.
    """
    dist = dist or LinearDistributors(DuoidalStructure.symmetric_vect(S.field), planar=False)
    return _check_kinds(S, dist, ("ll", "rr"), objects, "lindist non-planar")


def check_lindist_lift_planar(S: SeparatelyOpmonoidalData, dist: LinearDistributors | None = None,
                              objects=DEFAULT_OBJECTS) -> CheckReport:
    """The lift squares for ``∂ℓr`` and ``∂rℓ``; the non-planar pair runs separately."""
    dist = dist or LinearDistributors(DuoidalStructure.symmetric_vect(S.field), planar=True)
    if not dist.planar:
        raise ValueError("a non-planar structure has no ∂ℓr or ∂rℓ")
    return _check_kinds(S, dist, ("lr", "rl"), objects, "lindist planar")


def b0_conjugation_report(S: SeparatelyOpmonoidalData) -> CheckReport:
    """The rectangle relating the two counits through the unit isomorphism."""
    f = S.field
    I = UNIT_OBJ
    report = CheckReport("B0 conjugation")
    ident = Arrow.identity(f, I)
    for note, left, right in (
            ("T₀•η₁ = id", S.eta(I).then(S.T0(BULLET)), ident),
            ("T₀∘η⊥ = id", S.eta(I).then(S.T0(CIRC)), ident),
            ("T₀• = T₀∘T(≅)", S.T0(BULLET), S.Tf(Arrow.coherence(f, I, I)).then(S.T0(CIRC)))):
        ok, w = S.compare(left, right)
        report.add(B0_CONJUGATE, ok, w, "", note)
    return report


def check_B0_conjugation(S: SeparatelyOpmonoidalData) -> bool:
    return b0_conjugation_report(S).passed


def check_double_opmonoidal_implies_lindist(S: SeparatelyOpmonoidalData, D: DuoidalStructure,
                                            objects=DEFAULT_OBJECTS) -> CheckReport:
    """All four lift squares, given that ``T`` is double opmonoidal for ``D``."""
    pre = check_double_opmonoidal(S, D, objects)
    if not pre.passed:
        raise PrerequisiteFailed("the monad is not double opmonoidal", pre)
    dist = LinearDistributors(D, planar=True)
    parts = [check_lindist_lift_nonplanar(S, dist, objects),
             check_lindist_lift_planar(S, dist, objects),
             b0_conjugation_report(S)]
    out = merge("double opmonoidal ⇒ linearly distributive", *parts)
    out.add(IMPLIES, all(p.passed for p in parts), None, "", "all lift squares hold")
    return out


__all__ = [
    "KINDS", "LinearDistributors", "b0_conjugation_report", "check_B0_conjugation",
    "check_double_opmonoidal_implies_lindist", "check_lindist_lift_nonplanar",
    "check_lindist_lift_planar", "distributors_from_normal", "lift_square",
]

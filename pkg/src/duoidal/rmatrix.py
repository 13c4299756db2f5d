"""R-matrices of the monad ``B ⊗ −`` and the interchange they induce.

An R-matrix here is an element ``r4 = Σ r¹⊗r²⊗r³⊗r⁴`` of ``B^⊗4`` together
with the scalars ``ν, ϖ, ι``. Its component at ``(a, b, c, d)`` is::

    R(x_a ⊗ x_b ⊗ x_c ⊗ x_d) = (r¹⊗x_a) ⊗ (r²⊗x_c) ⊗ (r³⊗x_b) ⊗ (r⁴⊗x_d)

typed ``(a•b)∘(c•d) → (Ta∘Tc)•(Tb∘Td)``. On modules the actions absorb the
algebra legs and give the interchange ``ξ``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .arith import (BULLET, CIRC, UNIT, UNIT_OBJ, Arrow, BlockOp, LinMap, Obj, TensorSpace,
                    bullet, circ, difference, leaf, par)
from .bialg import BialgebraData, ClassicalRElement, check_classical_qt, star_inverse_check
from .duoidal_core import (InterchangeOnEM, check_em_duoidal_axioms,
                           check_em_structure_maps, _mwhere, _op_labeller, _scalar_laws)
from .errors import MalformedInstance, PrerequisiteFailed
from .monad_em import (FactoredActions, ModExpr, ModuleObject, SeparatelyOpmonoidalData,
                       check_module_morphism, free_module, identity_op, mcirc, mleaf,
                       probe_modules)
from .report import CheckReport

UNITALITY1 = "eq:r-matrix-unitality1"
UNITALITY2 = "eq:r-matrix-unitality2"
LIFT = "eq:r-matrix-lift"
RMATRIX1 = "eq:r-matrix-1"
RMATRIX2 = "eq:r-matrix-2"
DEFINITION = "def:r-matrix-preduoidal"
EMBEDDING = "ex:traditional-r-matrix-to-duoidal-r-matrix"
STAR = "rmk:star-invertability"
FIVE_DIAGRAMS = (UNITALITY1, UNITALITY2, LIFT, RMATRIX1, RMATRIX2)

DEFAULT_OBJECTS = (TensorSpace(()), TensorSpace((2,)))

# Where the two legs of a classical r go in r4 = 1 ⊗ r' ⊗ r'' ⊗ 1.
SECOND_ON_C = "second-on-c"
FIRST_ON_C = "first-on-c"
DEFAULT_CONVENTION = SECOND_ON_C


@dataclass(frozen=True, eq=False)
class DuoidalRMatrix:
    """``r4`` as a dict ``(i, j, k, l) -> coefficient`` plus ``ν, ϖ, ι``."""

    field: object
    dim: int
    r4: dict
    nu: object = 1
    varpi: object = 1
    iota: object = 1

    def __post_init__(self):
        f = self.field
        terms = {}
        for key, c in self.r4.items():
            key = tuple(int(i) for i in key)
            if len(key) != 4 or not all(0 <= i < self.dim for i in key):
                raise MalformedInstance(f"bad r4 index {key}", "rmatrix.r4")
            c = f.coerce(c)
            if not f.is_zero(c):
                terms[key] = f.reduce(terms.get(key, 0) + c)
        object.__setattr__(self, "r4", {k: v for k, v in terms.items() if not f.is_zero(v)})
        for attr in ("nu", "varpi", "iota"):
            object.__setattr__(self, attr, f.coerce(getattr(self, attr)))
        if not f.eq(self.varpi * self.iota, 1):
            raise MalformedInstance("the monoid unit law needs w·i = 1", "rmatrix.w")
        if not f.eq(self.nu * self.iota, 1):
            raise MalformedInstance("the comonoid counit law needs n·i = 1", "rmatrix.n")

    @classmethod
    def from_vector(cls, field, dim, vec, nu=1, varpi=1, iota=1) -> DuoidalRMatrix:
        vec = list(vec)
        if len(vec) != dim ** 4:
            raise MalformedInstance(f"r4 needs {dim ** 4} coefficients, got {len(vec)}",
                                    "rmatrix.r4")
        keys = itertools.product(range(dim), repeat=4)
        return cls(field, dim, {k: c for k, c in zip(keys, vec) if c not in (0, "0")},
                   nu, varpi, iota)

    @classmethod
    def trivial(cls, S: SeparatelyOpmonoidalData) -> DuoidalRMatrix:
        """``r4 = 1⊗1⊗1⊗1`` (through the unit vector of ``B``)."""
        u = [(i, c) for i, c in enumerate(S.algebra.unit) if not S.field.is_zero(c)]
        r4 = {}
        for combo in itertools.product(u, repeat=4):
            key = tuple(i for i, _ in combo)
            r4[key] = np.prod([c for _, c in combo])
        return cls(S.field, S.dim, r4)

    def vector(self) -> list:
        return [self.r4.get(k, self.field.zero)
                for k in itertools.product(range(self.dim), repeat=4)]

    def same_as(self, other: DuoidalRMatrix) -> bool:
        f = self.field
        keys = set(self.r4) | set(other.r4)
        return (all(f.eq(self.r4.get(k, 0), other.r4.get(k, 0)) for k in keys)
                and f.eq(self.nu, other.nu) and f.eq(self.varpi, other.varpi)
                and f.eq(self.iota, other.iota))


def r_arrow(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix, a: Obj, b: Obj, c: Obj, d: Obj) -> Arrow:
    """``R_{a,b,c,d}: (a•b)∘(c•d) → (Ta∘Tc)•(Tb∘Td)`` as a typed arrow."""
    f, n = S.field, S.dim
    la, lb, lc, ld = (len(o.legs) for o in (a, b, c, d))
    source = circ(bullet(a, b), bullet(c, d))
    insert = LinMap(f, UNIT, TensorSpace((n,) * 4), [[c] for c in Rm.vector()])
    mid = leaf("_", (n,) * 4 + source.legs)
    # legs now: r¹ r² r³ r⁴ | a b c d
    sa = 4
    sb, sc = sa + la, sa + la + lb
    sd = sc + lc
    perm = ((0,) + tuple(range(sa, sa + la)) + (1,) + tuple(range(sc, sc + lc))
            + (2,) + tuple(range(sb, sb + lb)) + (3,) + tuple(range(sd, sd + ld)))
    target = bullet(circ(S.T(a), S.T(c)), circ(S.T(b), S.T(d)))
    ins = Arrow(f, source, mid, (("apply", insert, 0),))
    return ins.then(Arrow.permutation(f, mid, target, perm)).named("R")


def rmatrix_component(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix, a: TensorSpace,
                      b: TensorSpace, c: TensorSpace, d: TensorSpace) -> LinMap:
    objs = [leaf(nm, sp) for nm, sp in zip("abcd", (a, b, c, d))]
    return r_arrow(S, Rm, *objs).to_linmap()


def embed_classical(B: BialgebraData, r: ClassicalRElement, convention: str = DEFAULT_CONVENTION,
                    *, check: bool = True) -> DuoidalRMatrix:
    """``η_a ⊗ R_{b,c} ⊗ η_d`` with ``ν = ϖ = ι = 1``.

    The classical ``R_{b,c}(x⊗y) = r²y ⊗ r¹x`` puts the second leg of ``r``
    on the ``c``-block; ``convention=FIRST_ON_C`` swaps the legs.
    """
    if check:
        pre = check_classical_qt(B, r)
        if not pre.passed:
            raise PrerequisiteFailed("the classical element is not quasitriangular", pre)
    f = B.field
    units = [(i, c) for i, c in enumerate(B.unit) if not f.is_zero(c)]
    r4 = {}
    for (i, j), c in r.r2.items():
        second, third = (j, i) if convention == SECOND_ON_C else (i, j)
        for (u0, c0), (u3, c3) in itertools.product(units, repeat=2):
            key = (u0, second, third, u3)
            r4[key] = f.reduce(r4.get(key, 0) + c * c0 * c3)
    if convention not in (SECOND_ON_C, FIRST_ON_C):
        raise ValueError(f"unknown leg convention {convention!r}")
    return DuoidalRMatrix(f, B.dim, r4)


# the five diagrams


def _action_arrow(S, M: ModuleObject, obj: Obj) -> Arrow:
    return Arrow.from_linmap(
        LinMap(S.field, TensorSpace((S.dim,)) @ obj.space, obj.space, M.action.matrix),
        S.T(obj), obj, "α")


def _unitality(S, Rm, report, modules):
    f = S.field
    I = UNIT_OBJ
    t0c, t0b = S.T0(CIRC), S.T0(BULLET)
    for pair in itertools.product(modules, repeat=2):
        a, b = (M.obj(lab) for M, lab in zip(pair, "ab"))
        alpha, beta = (_action_arrow(S, M, o) for M, o in zip(pair, (a, b)))
        where = _mwhere(pair)
        ident = Arrow.identity(f, bullet(a, b))
        left = S.scalar(Rm.nu, bullet(a, b)).then(
            r_arrow(S, Rm, I, I, a, b), par(BULLET, par(CIRC, t0c, alpha), par(CIRC, t0c, beta)))
        ok, w = S.compare(left, ident)
        report.add(UNITALITY1, ok, w, where, "⊥∘(a•b)")
        left = S.scalar(Rm.nu, bullet(a, b)).then(
            r_arrow(S, Rm, a, b, I, I), par(BULLET, par(CIRC, alpha, t0c), par(CIRC, beta, t0c)))
        ok, w = S.compare(left, ident)
        report.add(UNITALITY1, ok, w, where, "(a•b)∘⊥")
        ident = Arrow.identity(f, circ(a, b))
        left = r_arrow(S, Rm, I, a, I, b).then(
            par(BULLET, par(CIRC, t0b, t0b), par(CIRC, alpha, beta)),
            S.scalar(Rm.varpi, circ(a, b)))
        ok, w = S.compare(left, ident)
        report.add(UNITALITY2, ok, w, where, "(1•a)∘(1•b)")
        left = r_arrow(S, Rm, a, I, b, I).then(
            par(BULLET, par(CIRC, alpha, beta), par(CIRC, t0b, t0b)),
            S.scalar(Rm.varpi, circ(a, b)))
        ok, w = S.compare(left, ident)
        report.add(UNITALITY2, ok, w, where, "(a•1)∘(b•1)")


def _leaves(names, spaces):
    return [leaf(nm, sp) for nm, sp in zip(names, spaces)]


def _where(spaces):
    return "(" + ", ".join(str(s) for s in spaces) + ")"


def lift_square(S, Rm, a, b, c, d):
    """Both routes of the lift square at objects ``a, b, c, d``."""
    T, T2, mu = S.T, S.T2, S.mu
    muu = par(BULLET, par(CIRC, mu(a), mu(c)), par(CIRC, mu(b), mu(d)))
    top = S.Tf(r_arrow(S, Rm, a, b, c, d)).then(
        T2(BULLET, circ(T(a), T(c)), circ(T(b), T(d))),
        par(BULLET, T2(CIRC, T(a), T(c)), T2(CIRC, T(b), T(d))), muu)
    bottom = T2(CIRC, bullet(a, b), bullet(c, d)).then(
        par(CIRC, T2(BULLET, a, b), T2(BULLET, c, d)),
        r_arrow(S, Rm, T(a), T(b), T(c), T(d)), muu)
    return top, bottom


def rmatrix1_paths(S, Rm, a, b, c, d, x, y):
    f, T, T2, mu = S.field, S.T, S.T2, S.mu
    idT = lambda o: Arrow.identity(f, T(o))  # noqa: E731
    left = par(CIRC, r_arrow(S, Rm, a, b, c, d), Arrow.identity(f, bullet(x, y))).then(
        r_arrow(S, Rm, circ(T(a), T(c)), circ(T(b), T(d)), x, y),
        par(BULLET, par(CIRC, T2(CIRC, T(a), T(c)), idT(x)),
            par(CIRC, T2(CIRC, T(b), T(d)), idT(y))),
        par(BULLET, par(CIRC, mu(a), mu(c), idT(x)), par(CIRC, mu(b), mu(d), idT(y))))
    right = par(CIRC, Arrow.identity(f, bullet(a, b)), r_arrow(S, Rm, c, d, x, y)).then(
        r_arrow(S, Rm, a, b, circ(T(c), T(x)), circ(T(d), T(y))),
        par(BULLET, par(CIRC, idT(a), T2(CIRC, T(c), T(x))),
            par(CIRC, idT(b), T2(CIRC, T(d), T(y)))),
        par(BULLET, par(CIRC, idT(a), mu(c), mu(x)), par(CIRC, idT(b), mu(d), mu(y))))
    return left, right


def rmatrix2_paths(S, Rm, x, a, c, y, b, d):
    f, T, T2, mu = S.field, S.T, S.T2, S.mu
    idcd = Arrow.identity(f, circ(T(c), T(d)))
    idxy = Arrow.identity(f, circ(T(x), T(y)))
    left = r_arrow(S, Rm, bullet(x, a), c, bullet(y, b), d).then(
        par(BULLET, par(CIRC, T2(BULLET, x, a), T2(BULLET, y, b)), idcd),
        par(BULLET, r_arrow(S, Rm, T(x), T(a), T(y), T(b)), idcd),
        par(BULLET, par(CIRC, mu(x), mu(y)), par(CIRC, mu(a), mu(b)), idcd))
    right = r_arrow(S, Rm, x, bullet(a, c), y, bullet(b, d)).then(
        par(BULLET, idxy, par(CIRC, T2(BULLET, a, c), T2(BULLET, b, d))),
        par(BULLET, idxy, r_arrow(S, Rm, T(a), T(c), T(b), T(d))),
        par(BULLET, idxy, par(CIRC, mu(a), mu(b)), par(CIRC, mu(c), mu(d))))
    return left, right


def check_rmatrix_axioms(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix, modules=None,
                         objects=DEFAULT_OBJECTS, six_objects=None) -> CheckReport:
    """Scalar laws, module-map conditions and the five diagrams."""
    report = CheckReport("rmatrix")
    modules = list(modules) if modules is not None else probe_modules(S)
    six = objects if six_objects is None else six_objects
    _scalar_laws(report, S.field, Rm.nu, Rm.varpi, Rm.iota)
    xi = xi_rule(S, Rm)
    check_em_structure_maps(S, xi, report, DEFINITION)
    _unitality(S, Rm, report, modules)
    for spaces in itertools.product(objects, repeat=4):
        top, bottom = lift_square(S, Rm, *_leaves("abcd", spaces))
        ok, w = S.compare(top, bottom)
        report.add(LIFT, ok, w, _where(spaces))
    for spaces in itertools.product(six, repeat=6):
        left, right = rmatrix1_paths(S, Rm, *_leaves("abcdxy", spaces))
        ok, w = S.compare(left, right)
        report.add(RMATRIX1, ok, w, _where(spaces))
    for spaces in itertools.product(six, repeat=6):
        left, right = rmatrix2_paths(S, Rm, *_leaves("xacybd", spaces))
        ok, w = S.compare(left, right)
        report.add(RMATRIX2, ok, w, _where(spaces))
    return report


# from R-matrices to interchange laws on modules and back


def _xi_component(S, Rm: DuoidalRMatrix, actions: FactoredActions, a, b, c, d) -> BlockOp:
    f = S.field
    src = a.leaves() + b.leaves() + c.leaves() + d.leaves()
    tgt = a.leaves() + c.leaves() + b.leaves() + d.leaves()
    dims = {**a.dims(), **b.dims(), **c.dims(), **d.dims()}
    terms = []
    for (i, j, k, l), coef in Rm.r4.items():
        piece = actions.of(a, i).tensor(actions.of(c, j)).tensor(
            actions.of(b, k)).tensor(actions.of(d, l))
        terms.extend((f.reduce(coef * t), m) for t, m in piece.terms)
    return BlockOp(f, src, tgt, dims, terms)


def xi_rule(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix) -> InterchangeOnEM:
    """``ξ = ((α∘γ)•(β∘δ)) R`` as a rule on module expressions."""
    actions = FactoredActions(S)
    return InterchangeOnEM(lambda a, b, c, d: _xi_component(S, Rm, actions, a, b, c, d),
                           Rm.nu, Rm.varpi, Rm.iota, "ξ from R")


def xi_from_r(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix, a, b, c, d) -> BlockOp:
    """The component ``ξ_{a,b,c,d}`` for modules or module expressions."""
    exprs = [m if isinstance(m, ModExpr) else mleaf(m, lab) for m, lab in zip((a, b, c, d), "abcd")]
    return xi_rule(S, Rm)(*exprs)


def r_from_xi(S: SeparatelyOpmonoidalData, xi: InterchangeOnEM) -> DuoidalRMatrix:
    """Read ``r4`` off ``ξ`` at four free modules on the unit inputs."""
    F = free_module(S)
    comp = xi(*(mleaf(F, lab) for lab in "abcd"))
    units = [(i, c) for i, c in enumerate(S.algebra.unit) if not S.field.is_zero(c)]
    f = S.field
    r4 = {}
    for combo in itertools.product(units, repeat=4):
        idx = tuple(i for i, _ in combo)
        scale = np.prod([c for _, c in combo])
        for (p, q, s, t), v in comp.image(idx).items():
            # comp's target is ordered a, c, b, d: exactly r¹, r², r³, r⁴
            r4[(p, q, s, t)] = f.reduce(r4.get((p, q, s, t), 0) + scale * v)
    return DuoidalRMatrix(f, S.dim, r4, xi.nu, xi.varpi, xi.iota)


def roundtrip_check(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix) -> bool:
    return r_from_xi(S, xi_rule(S, Rm)).same_as(Rm)


def roundtrip_check_xi(S: SeparatelyOpmonoidalData, xi: InterchangeOnEM, modules=None) -> bool:
    """Whether ``ξ`` is recovered from its own R-matrix at every probe quadruple."""
    modules = list(modules) if modules is not None else probe_modules(S)
    again = xi_rule(S, r_from_xi(S, xi))
    for quad in itertools.product(modules, repeat=4):
        exprs = [mleaf(M, lab) for M, lab in zip(quad, "abcd")]
        ok, _ = difference(xi(*exprs), again(*exprs))
        if not ok:
            return False
    return True


def check_xi(S: SeparatelyOpmonoidalData, Rm: DuoidalRMatrix, modules=None,
             six_modules=None) -> CheckReport:
    """ξ is a module morphism at probe quadruples and satisfies the duoidal axioms."""
    return check_em_duoidal_axioms(S, xi_rule(S, Rm), modules, six_modules,
                                   report=CheckReport("xi from R"))


# braidings from classical R-matrices


def _sigma(S, actions, r2: dict, m: ModExpr, n: ModExpr) -> BlockOp:
    """``σ(x⊗y) = r²y ⊗ r¹x``."""
    f = S.field
    terms = []
    for (i, j), c in r2.items():
        piece = actions.of(n, j).tensor(actions.of(m, i))
        terms.extend((f.reduce(c * t), mats) for t, mats in piece.terms)
    return BlockOp(f, m.leaves() + n.leaves(), n.leaves() + m.leaves(),
                   {**m.dims(), **n.dims()}, terms)


def _sigma_inverse(S, actions, r2_inv: dict, m: ModExpr, n: ModExpr) -> BlockOp:
    """``y⊗x ↦ r̄¹x ⊗ r̄²y``, the inverse of ``σ_{m,n}`` when ``r̄`` is a star inverse."""
    f = S.field
    terms = []
    for (i, j), c in r2_inv.items():
        piece = actions.of(m, i).tensor(actions.of(n, j))
        terms.extend((f.reduce(c * t), mats) for t, mats in piece.terms)
    return BlockOp(f, n.leaves() + m.leaves(), m.leaves() + n.leaves(),
                   {**m.dims(), **n.dims()}, terms)


def braiding_from_classical(B: BialgebraData, r: ClassicalRElement, M, N) -> BlockOp:
    """``σ_{M,N} = (action_N ⊗ action_M) ∘ R_{M,N}``."""
    S = SeparatelyOpmonoidalData.from_bialgebra(B)
    m = M if isinstance(M, ModExpr) else mleaf(M, "m")
    n = N if isinstance(N, ModExpr) else mleaf(N, "n")
    return _sigma(S, FactoredActions(S), r.r2, m, n)


def check_braiding(B: BialgebraData, r: ClassicalRElement, modules=None,
                   r_inv: ClassicalRElement | None = None, *, strict: bool = True) -> CheckReport:
    """Naturality, both hexagons and (given a star inverse) invertibility."""
    if strict:
        pre = check_classical_qt(B, r)
        if not pre.passed:
            raise PrerequisiteFailed("the classical element is not quasitriangular", pre)
    S = SeparatelyOpmonoidalData.from_bialgebra(B)
    actions = FactoredActions(S)
    modules = list(modules) if modules is not None else probe_modules(S)
    report = CheckReport("braiding")
    sig = lambda m, n: _sigma(S, actions, r.r2, m, n)  # noqa: E731
    for pair in itertools.product(modules, repeat=2):
        m, n = mleaf(pair[0], "m"), mleaf(pair[1], "n")
        ok, w = check_module_morphism(S, sig(m, n), mcirc(m, n), mcirc(n, m), actions)
        report.add(EMBEDDING, ok, w, _mwhere(pair), "σ is a module map")
    for triple in itertools.product(modules, repeat=3):
        m, n, p = (mleaf(M, lab) for M, lab in zip(triple, "mnp"))
        where = _mwhere(triple)
        left = sig(mcirc(m, n), p)
        right = identity_op(S, m).tensor(sig(n, p)).then(sig(m, p).tensor(identity_op(S, n)))
        ok, w = difference(left, right, _op_labeller(left))
        report.add(EMBEDDING, ok, w, where, "σ_{m⊗n,p}")
        left = sig(m, mcirc(n, p))
        right = sig(m, n).tensor(identity_op(S, p)).then(identity_op(S, n).tensor(sig(m, p)))
        ok, w = difference(left, right, _op_labeller(left))
        report.add(EMBEDDING, ok, w, where, "σ_{m,n⊗p}")
    if r_inv is not None:
        ok = star_inverse_check(B, r, r_inv)
        report.add(STAR, ok, None, "", "star inverse")
        if ok:
            for pair in itertools.product(modules, repeat=2):
                m, n = mleaf(pair[0], "m"), mleaf(pair[1], "n")
                fwd, back = sig(m, n), _sigma_inverse(S, actions, r_inv.r2, m, n)
                ok1, w1 = difference(fwd.then(back), identity_op(S, mcirc(m, n)))
                ok2, w2 = difference(back.then(fwd), identity_op(S, mcirc(n, m)))
                report.add(STAR, ok1 and ok2, w1 or w2, _mwhere(pair))
    return report


__all__ = [
    "DEFAULT_CONVENTION", "DuoidalRMatrix", "FIRST_ON_C", "FIVE_DIAGRAMS", "SECOND_ON_C",
    "braiding_from_classical", "check_braiding", "check_rmatrix_axioms", "check_xi",
    "embed_classical", "lift_square", "r_arrow", "r_from_xi", "rmatrix_component",
    "roundtrip_check", "roundtrip_check_xi", "xi_from_r", "xi_rule",
]

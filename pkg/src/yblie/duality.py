"""Pairings between YB-Lie algebras and coalgebras, and between braided bialgebras.

Orientation is fixed once: ``ev: L⊗C → I`` and ``coev: I → C⊗L``, with
Gram matrices indexed (algebra basis row, coalgebra basis column). Every
composite here is written without associators, so the constructions are
restricted to strict contexts (trivial and super braidings).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import (
    BraidedBialgebra,
    CoalgebraComodule,
    _through_epi,
    check_braided_bialgebra,
    check_coalgebra_comodule,
    primitives,
    indecomposables,
)
from .errors import FieldMismatch, InvalidInput, NotStrong, Singular, SnakeFailure, SoundnessError
from .lie import (
    LieComodule,
    LieModule,
    YBLieAlgebra,
    YBLieCoalgebra,
    check_lie_comodule,
    check_lie_module,
    check_yb_lie_algebra,
    check_yb_lie_coalgebra,
    to_left_comodule,
    to_left_module,
)
from .linalg import Matrix, invert
from .monoidal import (
    UNIT,
    CategoryContext,
    ExactMorphism,
    GradedObject,
    counit_eps,
    hom_contra,
    hom_map,
    hom_object,
    pi_internal,
    pi_inverse,
    right_counit_eps,
    right_unit_eta,
    tensor,
    unit_eta,
)
from .report import CheckReport

__all__ = [
    "MichaelisPair",
    "StrongPairWitness",
    "TakeuchiPair",
    "TEST_OBJECTS",
    "object_tag",
    "check_michaelis_pair",
    "elementary_from_adjoint",
    "dual_pair",
    "gram_matrix",
    "strengthen",
    "zeta_at",
    "xi_at",
    "theta_at",
    "ev_from_zeta",
    "ev_from_theta",
    "zeta_from_unit",
    "hom_monad_structure",
    "check_hom_monad",
    "horizontal_composite",
    "check_monad_morphism",
    "check_zeta_inverse",
    "duality_report",
    "comodule_to_module",
    "module_to_comodule",
    "check_takeuchi",
    "michaelis_from_takeuchi",
    "check_square",
]

# Finite stand-in for "every object": the unit, two even spaces and a mixed one.
TEST_OBJECTS = (UNIT, GradedObject.even(2), GradedObject.even(3), GradedObject((0, 1)))


def _require_strict(ctx: CategoryContext, what: str):
    if not ctx.strict:
        raise InvalidInput(f"{what} is implemented for strict contexts only")


def _require(report: CheckReport, what: str):
    if not report.passed:
        raise InvalidInput(f"{what} fails: {', '.join(report.failures())}", report)


def _soundness(report: CheckReport, what: str):
    if not report.passed:
        raise SoundnessError(f"{what} fails its own checker: {', '.join(report.failures())}", report)


@dataclass(frozen=True)
class MichaelisPair:
    L: YBLieAlgebra
    C: YBLieCoalgebra
    ev: ExactMorphism

    def __post_init__(self):
        if self.L.ctx != self.C.ctx:
            raise FieldMismatch("algebra and coalgebra live in different contexts")
        _require_strict(self.L.ctx, "a Michaelis pair")
        expected = self.L.obj.tensor(self.C.obj)
        if self.ev.source != expected or self.ev.target != UNIT:
            raise InvalidInput(f"ev must map {list(expected.degrees)} to the unit")

    @property
    def ctx(self) -> CategoryContext:
        return self.L.ctx


@dataclass(frozen=True)
class StrongPairWitness:
    coev: ExactMorphism
    gram: Matrix


@dataclass(frozen=True)
class TakeuchiPair:
    H: BraidedBialgebra
    K: BraidedBialgebra
    pairing: ExactMorphism

    def __post_init__(self):
        if self.H.ctx != self.K.ctx:
            raise FieldMismatch("the two bialgebras live in different contexts")
        _require_strict(self.H.ctx, "a Takeuchi pair")
        expected = self.H.obj.tensor(self.K.obj)
        if self.pairing.source != expected or self.pairing.target != UNIT:
            raise InvalidInput(f"the pairing must map {list(expected.degrees)} to the unit")

    @property
    def ctx(self) -> CategoryContext:
        return self.H.ctx


def _nested(ev: ExactMorphism, A: GradedObject, B: GradedObject) -> ExactMorphism:
    """``ev∘(A⊗ev⊗B)``: the inner pair is consumed first."""
    return ev @ tensor(A, ev, B)


def check_michaelis_pair(p: MichaelisPair) -> CheckReport:
    report = CheckReport("michaelis_pair")
    report.extend(check_yb_lie_algebra(p.L), "L:")
    report.extend(check_yb_lie_coalgebra(p.C), "C:")
    L, C, ev = p.L.obj, p.C.obj, p.ev
    ev2 = _nested(ev, L, C)
    report.add_equality("mich_bracket", ev @ tensor(p.L.bracket, C), ev2 @ tensor(L, L, p.C.cobracket))
    report.add_equality("mich_yb", ev2 @ tensor(L, L, p.C.yb), ev2 @ tensor(p.L.yb, C, C))
    return report


def _snakes(ev: ExactMorphism, coev: ExactMorphism, L: GradedObject, C: GradedObject, ctx) -> CheckReport:
    report = CheckReport("snakes")
    report.add_equality("snake_L", tensor(ev, L) @ tensor(L, coev), ctx.identity(L))
    report.add_equality("snake_C", tensor(C, ev) @ tensor(coev, C), ctx.identity(C))
    return report


def elementary_from_adjoint(L: YBLieAlgebra, C_obj: GradedObject, ev: ExactMorphism, coev: ExactMorphism) -> MichaelisPair:
    """Transport the structure of ``L`` to its adjoint ``C`` along ``ev``/``coev``."""
    ctx, X, C = L.ctx, L.obj, C_obj
    _require_strict(ctx, "elementary pairs")
    snakes = _snakes(ev, coev, X, C, ctx)
    if not snakes.passed:
        raise SnakeFailure(f"ev/coev are not adjoint: {', '.join(snakes.failures())}")
    coev2 = tensor(C, coev, X) @ coev
    ev2 = _nested(ev, X, C)
    gamma = tensor(C, C, ev2) @ tensor(C, C, L.yb, C, C) @ tensor(coev2, C, C)
    cobracket = tensor(C, C, ev) @ tensor(C, C, L.bracket, C) @ tensor(coev2, C)
    p = MichaelisPair(L, YBLieCoalgebra(ctx, C, gamma, cobracket), ev)
    _soundness(check_michaelis_pair(p), "elementary pair")
    return p


def _swap_index(n: int, k: int) -> int:
    i, j = divmod(k, n)
    return j * n + i


def dual_pair(L: YBLieAlgebra) -> MichaelisPair:
    """``L`` with its dual coalgebra on the dual basis."""
    ctx, X = L.ctx, L.obj
    n = X.dim
    ev = ExactMorphism(X.tensor(X), UNIT, Matrix.from_entries({(0, i * n + i): 1 for i in range(n)}, (1, n * n), ctx.field))
    coev = ExactMorphism(UNIT, X.tensor(X), Matrix.from_entries({(i * n + i, 0): 1 for i in range(n)}, (n * n, 1), ctx.field))
    p = elementary_from_adjoint(L, X, ev, coev)
    # closed forms on the dual basis: transposes read through the factor swap
    cob = {(_swap_index(n, r), k): v for k, r, v in L.bracket.matrix.items()}
    gam = {(_swap_index(n, c), _swap_index(n, r)): v for r, c, v in L.yb.matrix.items()}
    if p.C.cobracket.matrix != Matrix.from_entries(cob, (n * n, n), ctx.field):
        raise SoundnessError("dual cobracket differs from the transposed bracket")
    if p.C.yb.matrix != Matrix.from_entries(gam, (n * n, n * n), ctx.field):
        raise SoundnessError("dual YB operator differs from the transposed operator")
    return p


def gram_matrix(p: MichaelisPair) -> Matrix:
    nl, nc = p.L.obj.dim, p.C.obj.dim
    entries = {}
    for _, k, v in p.ev.matrix.items():
        entries[divmod(k, nc)] = v
    return Matrix.from_entries(entries, (nl, nc), p.ctx.field)


def strengthen(p: MichaelisPair) -> StrongPairWitness:
    """Build ``coev`` from the inverse Gram matrix, or raise :class:`NotStrong`.

    The result is cross-checked against ``ζ_C⁻¹∘η^C_I``.
    """
    _require(check_michaelis_pair(p), "Michaelis pair")
    ctx, L, C = p.ctx, p.L.obj, p.C.obj
    gram = gram_matrix(p)
    if gram.rows != gram.cols:
        raise NotStrong(f"pairing is {gram.rows}x{gram.cols}, not square")
    try:
        inv = invert(gram)
    except Singular:
        raise NotStrong("pairing has a singular Gram matrix") from None
    n = L.dim
    coev = ExactMorphism(
        UNIT, C.tensor(L), Matrix.from_entries({(j * n + i, 0): v for j, i, v in inv.items()}, (n * n, 1), ctx.field)
    )
    if not _snakes(p.ev, coev, L, C, ctx).passed:
        raise SoundnessError("coev from the inverse Gram matrix violates a snake identity")
    zeta_C = zeta_at(p, C)
    via_zeta = ExactMorphism(zeta_C.target, zeta_C.source, invert(zeta_C.matrix)) @ unit_eta(ctx, C, UNIT)
    if via_zeta != coev:
        raise SoundnessError("the two constructions of coev disagree")
    return StrongPairWitness(coev, gram)


def zeta_at(p: MichaelisPair, X: GradedObject) -> ExactMorphism:
    """``ζ_X = H(C, X⊗ev)∘η^C_{X⊗L}: X⊗L → H(C, X)``."""
    ctx, L, C = p.ctx, p.L.obj, p.C.obj
    return hom_map(ctx, C, tensor(X, p.ev)) @ unit_eta(ctx, C, X.tensor(L))


def xi_at(p: MichaelisPair, w: StrongPairWitness, X: GradedObject) -> ExactMorphism:
    """``ξ_X = (ε^C_X⊗L)∘(H(C,X)⊗coev)``, the inverse of ``ζ_X`` for strong pairs."""
    ctx, L, C = p.ctx, p.L.obj, p.C.obj
    return tensor(counit_eps(ctx, C, X), L) @ tensor(hom_object(ctx, C, X), w.coev)


def theta_at(p: MichaelisPair, X: GradedObject) -> ExactMorphism:
    """``θ_X = H'(L, ev⊗X)∘η'^L_{C⊗X}: C⊗X → H'(L, X)``."""
    ctx, L, C = p.ctx, p.L.obj, p.C.obj
    return hom_map(ctx, L, tensor(p.ev, X)) @ right_unit_eta(ctx, L, C.tensor(X))


def ev_from_zeta(L: YBLieAlgebra, C: YBLieCoalgebra, zeta_unit: ExactMorphism) -> ExactMorphism:
    ctx = L.ctx
    if zeta_unit.source != L.obj or zeta_unit.target != hom_object(ctx, C.obj, UNIT):
        raise InvalidInput("zeta at the unit must map L to H(C, I)")
    return counit_eps(ctx, C.obj, UNIT) @ tensor(zeta_unit, C.obj)


def ev_from_theta(L: YBLieAlgebra, C: YBLieCoalgebra, theta_unit: ExactMorphism) -> ExactMorphism:
    ctx = L.ctx
    if theta_unit.source != C.obj or theta_unit.target != hom_object(ctx, L.obj, UNIT):
        raise InvalidInput("theta at the unit must map C to H'(L, I)")
    return right_counit_eps(ctx, L.obj, UNIT) @ tensor(L.obj, theta_unit)


def zeta_from_unit(L: YBLieAlgebra, C: YBLieCoalgebra, zeta_unit: ExactMorphism, X: GradedObject) -> ExactMorphism:
    """Rebuild ``ζ_X`` from its value at the unit alone."""
    ctx, Cobj = L.ctx, C.obj
    HI = hom_object(ctx, Cobj, UNIT)
    return (
        hom_map(ctx, Cobj, tensor(X, counit_eps(ctx, Cobj, UNIT)))
        @ unit_eta(ctx, Cobj, X.tensor(HI))
        @ tensor(X, zeta_unit)
    )


def hom_monad_structure(C: YBLieCoalgebra, M: GradedObject) -> tuple[ExactMorphism, ExactMorphism]:
    """``(γ_M, Υ_M)`` on ``H(C, H(C, M))``, transported through internal currying."""
    ctx, X = C.ctx, C.obj
    pi, pi_inv = pi_internal(ctx, X, X, M), pi_inverse(ctx, X, X, M)
    gamma = pi @ hom_contra(ctx, C.yb, M) @ pi_inv
    upsilon = hom_contra(ctx, C.cobracket, M) @ pi_inv
    return gamma, upsilon


def check_hom_monad(C: YBLieCoalgebra, M: GradedObject) -> CheckReport:
    """The Lie monad axioms of ``H(C, -)`` evaluated at ``M``."""
    ctx, X = C.ctx, C.obj
    report = CheckReport(f"hom_monad at {list(M.degrees)}")
    gamma, upsilon = hom_monad_structure(C, M)
    HM = hom_object(ctx, X, M)
    gamma_H, upsilon_H = hom_monad_structure(C, HM)
    inner = hom_map(ctx, X, gamma)  # applies γ under one more H(C, -)
    outer = gamma_H
    one2, one3 = ctx.identity(gamma.source), ctx.identity(inner.source)
    report.add_equality("order_two", gamma @ gamma, one2)
    report.add_equality("yang_baxter", inner @ outer @ inner, outer @ inner @ outer)
    report.add_zero("antisymmetry", upsilon @ (one2 + gamma))
    t, w = inner @ outer, outer @ inner
    report.add_zero("jacobi", upsilon @ upsilon_H @ (one3 + t + w))
    report.add_equality("compatibility", gamma @ hom_map(ctx, X, upsilon), upsilon_H @ inner @ outer)
    return report


def horizontal_composite(p: MichaelisPair, X: GradedObject) -> ExactMorphism:
    """``(ζ∗ζ)_X = H(C, ζ_X)∘ζ_{X⊗L}: X⊗L⊗L → H(C, H(C, X))``."""
    return hom_map(p.ctx, p.C.obj, zeta_at(p, X)) @ zeta_at(p, X.tensor(p.L.obj))


def check_monad_morphism(p: MichaelisPair, X: GradedObject) -> CheckReport:
    report = CheckReport(f"monad_morphism at {list(X.degrees)}")
    L = p.L.obj
    zz = horizontal_composite(p, X)
    zeta_X = zeta_at(p, X)
    other = zeta_at(p, hom_object(p.ctx, p.C.obj, X)) @ tensor(zeta_X, L)
    report.add_equality("interchange", zz, other)
    gamma, upsilon = hom_monad_structure(p.C, X)
    report.add_equality("preserves_bracket", upsilon @ zz, zeta_X @ tensor(X, p.L.bracket))
    report.add_equality("preserves_yb", gamma @ zz, zz @ tensor(X, p.L.yb))
    return report


def check_zeta_inverse(p: MichaelisPair, w: StrongPairWitness, X: GradedObject) -> CheckReport:
    report = CheckReport(f"zeta_inverse at {list(X.degrees)}")
    z, x = zeta_at(p, X), xi_at(p, w, X)
    report.add_equality("zeta_xi", z @ x, p.ctx.identity(z.target))
    report.add_equality("xi_zeta", x @ z, p.ctx.identity(z.source))
    return report


def object_tag(X: GradedObject) -> str:
    """Short label for a test object: its degree string."""
    return "".join(map(str, X.degrees)) or "-"


def duality_report(p: MichaelisPair, objects=TEST_OBJECTS) -> CheckReport:
    """Round trips between pairings and monad morphisms, evaluated at test objects.

    Exhaustive only over ``objects``; this replaces an argument over all objects.
    """
    report = CheckReport("duality")
    zeta_I = zeta_at(p, UNIT)
    report.add_equality("ev_from_zeta", ev_from_zeta(p.L, p.C, zeta_I), p.ev)
    report.add_equality("ev_from_theta", ev_from_theta(p.L, p.C, theta_at(p, UNIT)), p.ev)
    for X in objects:
        tag = object_tag(X)
        report.add_equality(f"zeta_from_unit[{tag}]", zeta_from_unit(p.L, p.C, zeta_I, X), zeta_at(p, X))
        report.extend(check_monad_morphism(p, X), f"monad_morphism[{tag}]:")
    report.add_flag("scope", True, "evaluated on a finite set of test objects")
    return report


def comodule_to_module(p: MichaelisPair, m: LieComodule) -> LieModule:
    """Left coaction ``δ`` to left action ``(ev⊗X)∘(L⊗δ)``."""
    if m.coalgebra != p.C:
        raise InvalidInput("comodule is over a different coalgebra")
    _require(check_lie_comodule(m), "Lie comodule")
    m = to_left_comodule(m)
    X = m.carrier
    action = tensor(p.ev, X) @ tensor(p.L.obj, m.coaction)
    out = LieModule(p.L, X, action, side="left")
    _soundness(check_lie_module(out), "induced Lie module")
    return out


def module_to_comodule(p: MichaelisPair, w: StrongPairWitness, m: LieModule) -> LieComodule:
    """Left action ``ϱ`` to left coaction ``(C⊗ϱ)∘(coev⊗X)``."""
    if m.algebra != p.L:
        raise InvalidInput("module is over a different Lie algebra")
    _require(check_lie_module(m), "Lie module")
    m = to_left_module(m)
    X = m.carrier
    coaction = tensor(p.C.obj, m.action) @ tensor(w.coev, X)
    out = LieComodule(p.C, X, coaction, side="left")
    _soundness(check_lie_comodule(out), "induced Lie comodule")
    return out


def check_takeuchi(t: TakeuchiPair) -> CheckReport:
    """Conditions (a) to (e) on the pairing, plus the bracket/cobracket identity they imply."""
    report = CheckReport("takeuchi_pair")
    H, K, d = t.H, t.K, t.pairing
    ctx, A, B = t.ctx, H.obj, K.obj
    d2 = _nested(d, A, B)
    report.add_equality("a_unit_K", d @ tensor(A, K.unit), H.counit)
    report.add_equality("b_unit_H", d @ tensor(H.unit, B), K.counit)
    report.add_equality("c_mul_H", d @ tensor(H.mul, B), d2 @ tensor(A, A, K.comul))
    report.add_equality("d_mul_K", d @ tensor(A, K.mul), d2 @ tensor(H.comul, B, B))
    report.add_equality("e_yb", d2 @ tensor(H.yb, B, B), d2 @ tensor(A, A, K.yb))
    bracket_H = H.mul @ (ctx.identity(H.yb.source) - H.yb)
    cobracket_K = (ctx.identity(K.yb.source) - K.yb) @ K.comul
    report.add_equality("bracket_cobracket", d @ tensor(bracket_H, B), d2 @ tensor(A, A, cobracket_K))
    return report


def _bridge(t: TakeuchiPair):
    P = primitives(t.H)
    Q = indecomposables(t.K)
    target = t.pairing @ tensor(P.eq, t.K.obj)
    ev = _through_epi(tensor(P.obj, Q.coeq), target, P.obj.tensor(Q.obj), UNIT, "the pairing")
    return MichaelisPair(P.lie, Q.lie, ev), P, Q


def michaelis_from_takeuchi(t: TakeuchiPair) -> MichaelisPair:
    """Primitives of ``H`` paired with indecomposables of ``K`` by the descended pairing."""
    _require(check_takeuchi(t), "Takeuchi pair")
    p, P, Q = _bridge(t)
    if p.ev @ tensor(P.obj, Q.coeq) != t.pairing @ tensor(P.eq, t.K.obj):
        raise SoundnessError("descended pairing does not factor the original one")
    _soundness(check_michaelis_pair(p), "Michaelis pair from a Takeuchi pair")
    return p


def check_square(t: TakeuchiPair, m: CoalgebraComodule) -> CheckReport:
    """Compare the two ways of turning a left ``K``-comodule into a left ``P(H)``-Lie module."""
    K = t.K
    if m.side != "left":
        raise InvalidInput("check_square takes a left comodule")
    if m.coalgebra.obj != K.obj or m.coalgebra.comul != K.comul or m.coalgebra.counit != K.counit:
        raise InvalidInput("comodule is over a different coalgebra")
    _require(check_coalgebra_comodule(m), "comodule")
    _require(check_braided_bialgebra(t.H), "H")
    p = michaelis_from_takeuchi(t)
    _, P, Q = _bridge(t)
    M, rho = m.carrier, m.coaction
    h_action = tensor(t.pairing, M) @ tensor(t.H.obj, rho)
    via_modules = h_action @ tensor(P.eq, M)
    q_coaction = tensor(Q.coeq, M) @ rho
    via_comodules = tensor(p.ev, M) @ tensor(P.obj, q_coaction)
    report = CheckReport("takeuchi_square")
    report.add_equality("square_commutes", via_modules, via_comodules)
    report.extend(check_lie_module(LieModule(P.lie, M, via_modules, side="left")), "restricted:")
    report.extend(check_lie_module(LieModule(P.lie, M, via_comodules, side="left")), "descended:")
    return report

"""YB-algebras and coalgebras, braided bialgebras, primitives and indecomposables."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescentFailure, InvalidInput, NoCofactorization, NoFactorization, ShapeError, SoundnessError
from .linalg import cokernel_projection, solve_through_epi, solve_through_mono
from .lie import (
    LieModule,
    YBLieAlgebra,
    YBOperator,
    YBLieCoalgebra,
    _expect,
    _t_w_unchecked,
    check_comorphism,
    check_morphism,
    check_yb_lie_algebra,
    check_yb_lie_coalgebra,
    check_yb_operator,
    _right_action_equalizer,
    equalizer,
    homogeneous_degrees,
    lie_hom_space,
)
from .monoidal import (
    UNIT,
    CategoryContext,
    ExactMorphism,
    GradedObject,
    associator,
    associator_inv,
    counit_eps,
    curry,
    tensor,
)
from .report import CheckReport

__all__ = [
    "YBAlgebra",
    "YBCoalgebra",
    "BraidedBialgebra",
    "AlgebraModule",
    "CoalgebraComodule",
    "Primitives",
    "Indecomposables",
    "check_yb_algebra",
    "check_yb_coalgebra",
    "check_braided_bialgebra",
    "check_algebra_module",
    "check_coalgebra_comodule",
    "commutator_lie",
    "cocommutator_lie",
    "primitives",
    "indecomposables",
    "descent_report",
    "regular_module",
    "induce_from_algebra_module",
    "hom_over_algebra",
    "lie_hom_from_algebra",
]


@dataclass(frozen=True)
class YBAlgebra:
    ctx: CategoryContext
    obj: GradedObject
    mul: ExactMorphism
    yb: ExactMorphism
    unit: ExactMorphism | None = None

    def __post_init__(self):
        B = self.obj
        _expect(self.mul, B.tensor(B), B, "multiplication")
        _expect(self.yb, B.tensor(B), B.tensor(B), "YB operator")
        if self.unit is not None:
            _expect(self.unit, UNIT, B, "unit")


@dataclass(frozen=True)
class YBCoalgebra:
    ctx: CategoryContext
    obj: GradedObject
    comul: ExactMorphism
    yb: ExactMorphism
    counit: ExactMorphism | None = None

    def __post_init__(self):
        C = self.obj
        _expect(self.comul, C, C.tensor(C), "comultiplication")
        _expect(self.yb, C.tensor(C), C.tensor(C), "YB operator")
        if self.counit is not None:
            _expect(self.counit, C, UNIT, "counit")


@dataclass(frozen=True)
class BraidedBialgebra:
    ctx: CategoryContext
    obj: GradedObject
    mul: ExactMorphism
    unit: ExactMorphism
    comul: ExactMorphism
    counit: ExactMorphism
    yb: ExactMorphism

    def __post_init__(self):
        # building both halves validates every shape
        _ = self.algebra, self.coalgebra

    @property
    def algebra(self) -> YBAlgebra:
        return YBAlgebra(self.ctx, self.obj, self.mul, self.yb, self.unit)

    @property
    def coalgebra(self) -> YBCoalgebra:
        return YBCoalgebra(self.ctx, self.obj, self.comul, self.yb, self.counit)


@dataclass(frozen=True)
class AlgebraModule:
    algebra: YBAlgebra
    carrier: GradedObject
    action: ExactMorphism
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        M, B = self.carrier, self.algebra.obj
        _expect(self.action, M.tensor(B) if self.side == "right" else B.tensor(M), M, "action")

    @property
    def ctx(self) -> CategoryContext:
        return self.algebra.ctx


def _yb_ops(ctx, B, yb):
    return _t_w_unchecked(YBOperator(ctx, B, yb))


def _algebra_entries(report: CheckReport, B: YBAlgebra):
    ctx, X, mu, lam, eta = B.ctx, B.obj, B.mul, B.yb, B.unit
    report.add_equality("associativity", mu @ tensor(mu, X), mu @ tensor(X, mu) @ associator(ctx, X, X, X))
    if eta is not None:
        one = ctx.identity(X)
        report.add_equality("unit_left", mu @ tensor(eta, X), one)
        report.add_equality("unit_right", mu @ tensor(X, eta), one)
    t, w = _yb_ops(ctx, X, lam)
    report.add_equality("yb_mul_left", lam @ tensor(mu, X), tensor(X, mu) @ t @ associator(ctx, X, X, X))
    report.add_equality("yb_mul_right", lam @ tensor(X, mu), tensor(mu, X) @ associator_inv(ctx, X, X, X) @ w)
    if eta is not None:
        report.add_equality("yb_unit_left", lam @ tensor(eta, X), tensor(X, eta))
        report.add_equality("yb_unit_right", lam @ tensor(X, eta), tensor(eta, X))


def _coalgebra_entries(report: CheckReport, C: YBCoalgebra):
    ctx, X, delta, gam, eps = C.ctx, C.obj, C.comul, C.yb, C.counit
    report.add_equality(
        "coassociativity", associator(ctx, X, X, X) @ tensor(delta, X) @ delta, tensor(X, delta) @ delta
    )
    if eps is not None:
        one = ctx.identity(X)
        report.add_equality("counit_left", tensor(eps, X) @ delta, one)
        report.add_equality("counit_right", tensor(X, eps) @ delta, one)
    t, w = _yb_ops(ctx, X, gam)
    report.add_equality(
        "yb_comul_left", tensor(delta, X) @ gam, associator_inv(ctx, X, X, X) @ w @ tensor(X, delta)
    )
    report.add_equality("yb_comul_right", tensor(X, delta) @ gam, t @ associator(ctx, X, X, X) @ tensor(delta, X))
    if eps is not None:
        report.add_equality("yb_counit_left", tensor(eps, X) @ gam, tensor(X, eps))
        report.add_equality("yb_counit_right", tensor(X, eps) @ gam, tensor(eps, X))


def check_yb_algebra(B: YBAlgebra) -> CheckReport:
    report = CheckReport("yb_algebra")
    check_yb_operator(_operator_of(B), report)
    _algebra_entries(report, B)
    return report


def check_yb_coalgebra(C: YBCoalgebra) -> CheckReport:
    report = CheckReport("yb_coalgebra")
    check_yb_operator(_operator_of(C), report)
    _coalgebra_entries(report, C)
    return report


def _operator_of(S):
    return YBOperator(S.ctx, S.obj, S.yb)


def check_braided_bialgebra(H: BraidedBialgebra) -> CheckReport:
    """Every bialgebra condition, each as its own entry; none short-circuits."""
    report = CheckReport("braided_bialgebra")
    check_yb_operator(_operator_of(H), report)
    _algebra_entries(report, H.algebra)
    _coalgebra_entries(report, H.coalgebra)
    ctx, X = H.ctx, H.obj
    mu, eta, delta, eps, lam = H.mul, H.unit, H.comul, H.counit, H.yb
    report.add_equality("counit_multiplicative", eps @ mu, tensor(eps, eps))
    report.add_equality("counit_unital", eps @ eta, ctx.identity(UNIT))
    report.add_equality("unit_comultiplicative", delta @ eta, tensor(eta, eta))
    report.add_equality(
        "bialgebra_compatibility",
        delta @ mu,
        tensor(mu, mu) @ tensor(X, lam, X) @ tensor(delta, delta),
    )
    return report


def check_algebra_module(m: AlgebraModule) -> CheckReport:
    report = CheckReport(f"algebra_module ({m.side})")
    ctx, M, B, rho = m.ctx, m.carrier, m.algebra.obj, m.action
    mu, eta = m.algebra.mul, m.algebra.unit
    if m.side == "right":
        report.add_equality("associativity", rho @ tensor(rho, B), rho @ tensor(M, mu) @ associator(ctx, M, B, B))
        if eta is not None:
            report.add_equality("unit", rho @ tensor(M, eta), ctx.identity(M))
    else:
        report.add_equality("associativity", rho @ tensor(B, rho) @ associator(ctx, B, B, M), rho @ tensor(mu, M))
        if eta is not None:
            report.add_equality("unit", rho @ tensor(eta, M), ctx.identity(M))
    return report


@dataclass(frozen=True)
class CoalgebraComodule:
    coalgebra: YBCoalgebra
    carrier: GradedObject
    coaction: ExactMorphism
    side: str = "left"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        M, C = self.carrier, self.coalgebra.obj
        _expect(self.coaction, M, C.tensor(M) if self.side == "left" else M.tensor(C), "coaction")

    @property
    def ctx(self) -> CategoryContext:
        return self.coalgebra.ctx


def check_coalgebra_comodule(m: CoalgebraComodule) -> CheckReport:
    report = CheckReport(f"coalgebra_comodule ({m.side})")
    ctx, M, C, rho = m.ctx, m.carrier, m.coalgebra.obj, m.coaction
    delta, eps = m.coalgebra.comul, m.coalgebra.counit
    if m.side == "left":
        report.add_equality(
            "coassociativity", tensor(C, rho) @ rho, associator(ctx, C, C, M) @ tensor(delta, M) @ rho
        )
        if eps is not None:
            report.add_equality("counit", tensor(eps, M) @ rho, ctx.identity(M))
    else:
        report.add_equality(
            "coassociativity", tensor(rho, C) @ rho, associator_inv(ctx, M, C, C) @ tensor(M, delta) @ rho
        )
        if eps is not None:
            report.add_equality("counit", tensor(M, eps) @ rho, ctx.identity(M))
    return report


def _require(report: CheckReport, what: str):
    if not report.passed:
        raise InvalidInput(f"{what} fails: {', '.join(report.failures())}", report)


def commutator_lie(B: YBAlgebra) -> YBLieAlgebra:
    """``(B, λ, μ∘(1 − λ))``."""
    if isinstance(B, BraidedBialgebra):
        B = B.algebra
    _require(check_yb_algebra(B), "YB-algebra")
    one = B.ctx.identity(B.yb.source)
    return YBLieAlgebra(B.ctx, B.obj, B.yb, B.mul @ (one - B.yb))


def cocommutator_lie(C: YBCoalgebra) -> YBLieCoalgebra:
    """``(C, γ, (1 − γ)∘Δ)``."""
    if isinstance(C, BraidedBialgebra):
        C = C.coalgebra
    _require(check_yb_coalgebra(C), "YB-coalgebra")
    one = C.ctx.identity(C.yb.source)
    return YBLieCoalgebra(C.ctx, C.obj, C.yb, (one - C.yb) @ C.comul)


@dataclass(frozen=True)
class Primitives:
    lie: YBLieAlgebra
    eq: ExactMorphism

    @property
    def obj(self) -> GradedObject:
        return self.lie.obj


@dataclass(frozen=True)
class Indecomposables:
    lie: YBLieCoalgebra
    coeq: ExactMorphism

    @property
    def obj(self) -> GradedObject:
        return self.lie.obj


def _through_mono(m: ExactMorphism, f: ExactMorphism, source: GradedObject, target: GradedObject, what: str):
    try:
        g = solve_through_mono(m.matrix, f.matrix)
    except NoFactorization as exc:
        raise DescentFailure(f"{what} does not restrict to the primitives: {exc}") from None
    return ExactMorphism(source, target, g)


def _through_epi(e: ExactMorphism, f: ExactMorphism, source: GradedObject, target: GradedObject, what: str):
    try:
        g = solve_through_epi(e.matrix, f.matrix)
    except NoCofactorization as exc:
        err = DescentFailure(f"{what} does not descend to the indecomposables: {exc}")
        err.kernel_vector = exc.kernel_vector
        raise err from None
    return ExactMorphism(source, target, g)


def primitives(H: BraidedBialgebra) -> Primitives:
    """Equalizer of ``Δ`` and ``η⊗H + H⊗η`` with the restricted YB operator and bracket."""
    _require(check_braided_bialgebra(H), "braided bialgebra")
    ctx, X = H.ctx, H.obj
    P, eq = equalizer(X, H.comul, tensor(H.unit, X) + tensor(X, H.unit))
    PP = P.tensor(P)
    ee = tensor(eq, eq)
    lam_P = _through_mono(ee, H.yb @ ee, PP, PP, "the YB operator")
    bracket_H = H.mul @ (ctx.identity(X.tensor(X)) - H.yb)
    bracket_P = _through_mono(eq, bracket_H @ ee, PP, P, "the commutator bracket")
    lie = YBLieAlgebra(ctx, P, lam_P, bracket_P)
    _soundness(check_yb_lie_algebra(lie), "primitives")
    return Primitives(lie, eq)


def indecomposables(H: BraidedBialgebra) -> Indecomposables:
    """Coequalizer of ``μ`` and ``ε⊗H + H⊗ε`` with the descended YB operator and cobracket."""
    _require(check_braided_bialgebra(H), "braided bialgebra")
    ctx, X = H.ctx, H.obj
    diff = H.mul - (tensor(H.counit, X) + tensor(X, H.counit))
    q = cokernel_projection(diff.matrix)
    Q = homogeneous_degrees(X, q.T)
    coeq = ExactMorphism(X, Q, q)
    QQ = Q.tensor(Q)
    cc = tensor(coeq, coeq)
    gam_Q = _through_epi(cc, cc @ H.yb, QQ, QQ, "the YB operator")
    cobracket_H = (ctx.identity(X.tensor(X)) - H.yb) @ H.comul
    cobracket_Q = _through_epi(coeq, cc @ cobracket_H, Q, QQ, "the cocommutator")
    lie = YBLieCoalgebra(ctx, Q, gam_Q, cobracket_Q)
    _soundness(check_yb_lie_coalgebra(lie), "indecomposables")
    return Indecomposables(lie, coeq)


def _soundness(report: CheckReport, what: str):
    if not report.passed:
        raise SoundnessError(f"{what} output fails its checker: {', '.join(report.failures())}", report)


def descent_report(H: BraidedBialgebra, P: Primitives | None = None, Q: Indecomposables | None = None) -> CheckReport:
    """Re-verify the defining identities of the restricted and descended maps."""
    report = CheckReport("descent")
    ctx, X = H.ctx, H.obj
    if P is not None:
        ee = tensor(P.eq, P.eq)
        bracket_H = H.mul @ (ctx.identity(X.tensor(X)) - H.yb)
        report.add_equality("primitive_yb", ee @ P.lie.yb, H.yb @ ee)
        report.add_equality("primitive_bracket", P.eq @ P.lie.bracket, bracket_H @ ee)
        report.extend(check_morphism(P.eq, P.lie, commutator_lie(H)), "inclusion:")
    if Q is not None:
        cc = tensor(Q.coeq, Q.coeq)
        cobracket_H = (ctx.identity(X.tensor(X)) - H.yb) @ H.comul
        report.add_equality("indecomposable_yb", Q.lie.yb @ cc, cc @ H.yb)
        report.add_equality("indecomposable_cobracket", Q.lie.cobracket @ Q.coeq, cc @ cobracket_H)
        report.extend(check_comorphism(Q.coeq, cocommutator_lie(H), Q.lie), "projection:")
    return report


def regular_module(B: YBAlgebra, side: str = "right") -> AlgebraModule:
    return AlgebraModule(B, B.obj, B.mul, side)


def induce_from_algebra_module(m: AlgebraModule) -> LieModule:
    """The same carrier and action, read as a Lie module over the commutator algebra."""
    _require(check_algebra_module(m), "algebra module")
    return LieModule(commutator_lie(m.algebra), m.carrier, m.action, m.side)


def hom_over_algebra(T: AlgebraModule, X: AlgebraModule):
    """``H_B(T, X) ⊆ H(T, X)``: maps ``g`` with ``g∘ρ_T = ρ_X∘(g⊗B)`` (right modules)."""
    if T.algebra != X.algebra:
        raise ShapeError("modules over different algebras")
    if T.side != "right" or X.side != "right":
        raise ShapeError("hom_over_algebra takes right modules")
    return _right_action_equalizer(T.ctx, T.carrier, X.carrier, T.algebra.obj, T.action, X.action)


def lie_hom_from_algebra(B: YBAlgebra, X: LieModule) -> AlgebraModule:
    """``LH(B, X)`` for the regular Lie module ``B``, as a right ``B``-module.

    ``(f·b)(b') = f(b b')``.
    """
    ctx = B.ctx
    Breg = induce_from_algebra_module(regular_module(B))
    if X.algebra != Breg.algebra:
        raise ShapeError("X must be a Lie module over the commutator algebra of B")
    LH, incl = lie_hom_space(Breg, X)
    H = incl.target
    eps = counit_eps(ctx, B.obj, X.carrier)
    act = curry(ctx, eps @ tensor(H, B.mul) @ associator(ctx, H, B.obj, B.obj), B.obj, H.tensor(B.obj))
    restricted = _through_mono(incl, act @ tensor(incl, B.obj), LH.tensor(B.obj), LH, "the B-action")
    return AlgebraModule(B, LH, restricted)

"""YB operators, YB-Lie algebras and coalgebras, Lie modules and comodules.

Structure maps live on flat Kronecker indices; associators are inserted
wherever a bracketed triple tensor changes shape, so the same formulas serve
strict and sign-associator contexts.

Modules are right modules (``X⊗L → X``) unless ``side="left"``
(``L⊗X → X``); comodules likewise (``X → X⊗C`` or ``X → C⊗X``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSymmetricContext, ShapeError, SoundnessError
from .linalg import kernel_basis, rank
from .monoidal import (
    CategoryContext,
    ExactMorphism,
    GradedObject,
    associator,
    associator_inv,
    braiding,
    counit_eps,
    curry,
    hom_object,
    tensor,
    uncurry,
)
from .report import CheckReport

__all__ = [
    "YBOperator",
    "YBLieAlgebra",
    "YBLieCoalgebra",
    "LieModule",
    "LieComodule",
    "derive_t_w",
    "check_yb_operator",
    "check_yb_lie_algebra",
    "check_yb_lie_coalgebra",
    "left_jacobi",
    "check_lie_module",
    "check_lie_comodule",
    "check_morphism",
    "check_comorphism",
    "opposite",
    "adjoint_module",
    "induce_module",
    "to_left_module",
    "to_right_module",
    "to_left_comodule",
    "to_right_comodule",
    "lie_hom_space",
    "LieHomSpace",
    "lie_hom",
    "check_lie_hom_space",
    "commutator_bracket_on_endomorphisms",
    "module_to_representation",
    "representation_to_module",
    "homogeneous_degrees",
]


def _expect(f: ExactMorphism, source: GradedObject, target: GradedObject, what: str):
    if f.source != source or f.target != target:
        raise ShapeError(
            f"{what} must map {list(source.degrees)} to {list(target.degrees)}, "
            f"got {list(f.source.degrees)} to {list(f.target.degrees)}"
        )


@dataclass(frozen=True)
class YBOperator:
    ctx: CategoryContext
    obj: GradedObject
    c: ExactMorphism

    def __post_init__(self):
        LL = self.obj.tensor(self.obj)
        _expect(self.c, LL, LL, "YB operator")


@dataclass(frozen=True)
class YBLieAlgebra:
    ctx: CategoryContext
    obj: GradedObject
    yb: ExactMorphism
    bracket: ExactMorphism

    def __post_init__(self):
        L = self.obj
        _expect(self.yb, L.tensor(L), L.tensor(L), "YB operator")
        _expect(self.bracket, L.tensor(L), L, "bracket")

    @property
    def operator(self) -> YBOperator:
        return YBOperator(self.ctx, self.obj, self.yb)


@dataclass(frozen=True)
class YBLieCoalgebra:
    ctx: CategoryContext
    obj: GradedObject
    yb: ExactMorphism
    cobracket: ExactMorphism

    def __post_init__(self):
        C = self.obj
        _expect(self.yb, C.tensor(C), C.tensor(C), "YB operator")
        _expect(self.cobracket, C, C.tensor(C), "cobracket")

    @property
    def operator(self) -> YBOperator:
        return YBOperator(self.ctx, self.obj, self.yb)


@dataclass(frozen=True)
class LieModule:
    algebra: YBLieAlgebra
    carrier: GradedObject
    action: ExactMorphism
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        X, L = self.carrier, self.algebra.obj
        _expect(self.action, X.tensor(L) if self.side == "right" else L.tensor(X), X, "action")

    @property
    def ctx(self) -> CategoryContext:
        return self.algebra.ctx


@dataclass(frozen=True)
class LieComodule:
    coalgebra: YBLieCoalgebra
    carrier: GradedObject
    coaction: ExactMorphism
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        X, C = self.carrier, self.coalgebra.obj
        _expect(self.coaction, X, X.tensor(C) if self.side == "right" else C.tensor(X), "coaction")

    @property
    def ctx(self) -> CategoryContext:
        return self.coalgebra.ctx


def _operator(op) -> YBOperator:
    return op.operator if isinstance(op, (YBLieAlgebra, YBLieCoalgebra)) else op


def derive_t_w(op) -> tuple[ExactMorphism, ExactMorphism]:
    """The two cyclic 3-strand composites of a YB operator; ``t∘w = w∘t = id``."""
    op = _operator(op)
    ctx, L, c = op.ctx, op.obj, op.c
    a, a_inv = associator(ctx, L, L, L), associator_inv(ctx, L, L, L)
    cL, Lc = tensor(c, L), tensor(L, c)
    t = a @ cL @ a_inv @ Lc
    w = Lc @ a @ cL @ a_inv
    one = ctx.identity(t.source)
    if t @ w != one or w @ t != one:
        raise SoundnessError("t and w are not mutually inverse")
    return t, w


def check_yb_operator(op, report: CheckReport | None = None, prefix: str = "") -> CheckReport:
    op = _operator(op)
    report = report or CheckReport("yb_operator")
    ctx, L, c = op.ctx, op.obj, op.c
    report.add_equality(prefix + "order_two", c @ c, ctx.identity(c.source))
    a, a_inv = associator(ctx, L, L, L), associator_inv(ctx, L, L, L)
    cL, Lc = tensor(c, L), tensor(L, c)
    report.add_equality(
        prefix + "yang_baxter",
        a @ cL @ a_inv @ Lc @ a @ cL,
        Lc @ a @ cL @ a_inv @ Lc @ a,
    )
    return report


def _t_w_unchecked(op: YBOperator):
    ctx, L, c = op.ctx, op.obj, op.c
    a, a_inv = associator(ctx, L, L, L), associator_inv(ctx, L, L, L)
    cL, Lc = tensor(c, L), tensor(L, c)
    return a @ cL @ a_inv @ Lc, Lc @ a @ cL @ a_inv


def check_yb_lie_algebra(L: YBLieAlgebra) -> CheckReport:
    report = CheckReport("yb_lie_algebra")
    check_yb_operator(L.operator, report)
    ctx, X, lam, br = L.ctx, L.obj, L.yb, L.bracket
    one2 = ctx.identity(lam.source)
    one3 = ctx.identity(X.tensor(X).tensor(X))
    t, w = _t_w_unchecked(L.operator)
    report.add_zero("antisymmetry", br @ (one2 + lam))
    report.add_zero("jacobi", br @ tensor(X, br) @ (one3 + t + w))
    report.add_equality(
        "compatibility",
        lam @ tensor(br, X),
        tensor(X, br) @ t @ associator(ctx, X, X, X),
    )
    return report


def left_jacobi(L: YBLieAlgebra) -> CheckReport:
    """The mirrored Jacobi identity, which follows from the three axioms."""
    report = CheckReport("left_jacobi")
    ctx, X, br = L.ctx, L.obj, L.bracket
    t, w = _t_w_unchecked(L.operator)
    one3 = ctx.identity(t.source)
    report.add_zero(
        "left_jacobi",
        br @ tensor(br, X) @ associator_inv(ctx, X, X, X) @ (one3 + t + w),
    )
    return report


def check_yb_lie_coalgebra(C: YBLieCoalgebra) -> CheckReport:
    report = CheckReport("yb_lie_coalgebra")
    check_yb_operator(C.operator, report)
    ctx, X, gam, cob = C.ctx, C.obj, C.yb, C.cobracket
    one3 = ctx.identity(X.tensor(X).tensor(X))
    t, w = _t_w_unchecked(C.operator)
    report.add_zero("antisymmetry", cob + gam @ cob)
    report.add_zero("jacobi", (one3 + w + t) @ tensor(X, cob) @ cob)
    report.add_equality(
        "compatibility",
        tensor(cob, X) @ gam,
        associator_inv(ctx, X, X, X) @ w @ tensor(X, cob),
    )
    return report


def check_lie_module(m: LieModule) -> CheckReport:
    report = CheckReport(f"lie_module ({m.side})")
    ctx, X, L, rho = m.ctx, m.carrier, m.algebra.obj, m.action
    lam, br = m.algebra.yb, m.algebra.bracket
    if m.side == "right":
        first = tensor(rho, L) @ associator_inv(ctx, X, L, L)
        law = rho @ (first - first @ tensor(X, lam) - tensor(X, br))
    else:
        first = tensor(L, rho) @ associator(ctx, L, L, X)
        law = rho @ (first - first @ tensor(lam, X) - tensor(br, X))
    report.add_zero("module_law", law)
    return report


def check_lie_comodule(m: LieComodule) -> CheckReport:
    report = CheckReport(f"lie_comodule ({m.side})")
    ctx, X, C, delta = m.ctx, m.carrier, m.coalgebra.obj, m.coaction
    gam, cob = m.coalgebra.yb, m.coalgebra.cobracket
    if m.side == "right":
        first = associator(ctx, X, C, C) @ tensor(delta, C)
        law = (first - tensor(X, gam) @ first - tensor(X, cob)) @ delta
    else:
        first = associator_inv(ctx, C, C, X) @ tensor(C, delta)
        law = (first - tensor(gam, X) @ first - tensor(cob, X)) @ delta
    report.add_zero("comodule_law", law)
    return report


def check_morphism(phi: ExactMorphism, src: YBLieAlgebra, dst: YBLieAlgebra) -> CheckReport:
    _expect(phi, src.obj, dst.obj, "Lie algebra morphism")
    report = CheckReport("lie_algebra_morphism")
    pp = tensor(phi, phi)
    report.add_equality("respects_bracket", dst.bracket @ pp, phi @ src.bracket)
    report.add_equality("respects_yb", dst.yb @ pp, pp @ src.yb)
    return report


def check_comorphism(phi: ExactMorphism, src: YBLieCoalgebra, dst: YBLieCoalgebra) -> CheckReport:
    _expect(phi, src.obj, dst.obj, "Lie coalgebra morphism")
    report = CheckReport("lie_coalgebra_morphism")
    pp = tensor(phi, phi)
    report.add_equality("respects_cobracket", dst.cobracket @ phi, pp @ src.cobracket)
    report.add_equality("respects_yb", dst.yb @ pp, pp @ src.yb)
    return report


def opposite(L: YBLieAlgebra) -> YBLieAlgebra:
    return YBLieAlgebra(L.ctx, L.obj, L.yb, L.bracket @ L.yb)


def adjoint_module(L: YBLieAlgebra) -> LieModule:
    """``L`` acting on itself from the right by its bracket."""
    return LieModule(L, L.obj, L.bracket)


def induce_module(m: LieModule, X: GradedObject) -> LieModule:
    """``X⊗M`` with action ``X⊗ϱ`` (right modules), or ``M⊗X`` with ``ϱ⊗X`` (left)."""
    ctx, L, M = m.ctx, m.algebra.obj, m.carrier
    if m.side == "right":
        action = tensor(X, m.action) @ associator(ctx, X, M, L)
        return LieModule(m.algebra, X.tensor(M), action)
    action = tensor(m.action, X) @ associator_inv(ctx, L, M, X)
    return LieModule(m.algebra, M.tensor(X), action, side="left")


def _require_symmetric(ctx: CategoryContext, what: str):
    if not ctx.symmetric:
        raise NotSymmetricContext(f"{what} needs a symmetric braiding, context is {ctx.braiding}")


def _require_symmetric_yb(yb: ExactMorphism, ctx: CategoryContext, obj: GradedObject, what: str):
    _require_symmetric(ctx, what)
    if yb != braiding(ctx, obj, obj):
        raise NotSymmetricContext(f"{what} needs the YB operator to be the symmetry of the context")


def to_left_module(m: LieModule) -> LieModule:
    """Left form ``a·x = -(x·a)`` composed with the symmetry; symmetric contexts only."""
    if m.side == "left":
        return m
    ctx, L, X = m.ctx, m.algebra.obj, m.carrier
    _require_symmetric_yb(m.algebra.yb, ctx, L, "left/right conversion")
    return LieModule(m.algebra, X, -(m.action @ braiding(ctx, L, X)), side="left")


def to_right_module(m: LieModule) -> LieModule:
    if m.side == "right":
        return m
    ctx, L, X = m.ctx, m.algebra.obj, m.carrier
    _require_symmetric_yb(m.algebra.yb, ctx, L, "left/right conversion")
    return LieModule(m.algebra, X, -(m.action @ braiding(ctx, X, L)), side="right")


def to_left_comodule(m: LieComodule) -> LieComodule:
    if m.side == "left":
        return m
    ctx, C, X = m.ctx, m.coalgebra.obj, m.carrier
    _require_symmetric_yb(m.coalgebra.yb, ctx, C, "left/right conversion")
    return LieComodule(m.coalgebra, X, -(braiding(ctx, X, C) @ m.coaction), side="left")


def to_right_comodule(m: LieComodule) -> LieComodule:
    if m.side == "right":
        return m
    ctx, C, X = m.ctx, m.coalgebra.obj, m.carrier
    _require_symmetric_yb(m.coalgebra.yb, ctx, C, "left/right conversion")
    return LieComodule(m.coalgebra, X, -(braiding(ctx, C, X) @ m.coaction), side="right")


def homogeneous_degrees(space: GradedObject, basis) -> GradedObject:
    """Degrees of homogeneous basis columns, read off their nonzero entries."""
    degrees = []
    for j in range(basis.cols):
        seen = {space.degrees[i] for i, jj, _ in basis.items() if jj == j}
        if len(seen) != 1:
            raise ShapeError(f"basis column {j} is not homogeneous")
        degrees.append(seen.pop())
    return GradedObject(tuple(degrees))


def equalizer(space: GradedObject, f: ExactMorphism, g: ExactMorphism):
    """Canonical subobject on which ``f`` and ``g`` agree, with its inclusion."""
    basis = kernel_basis((f - g).matrix)
    sub = homogeneous_degrees(space, basis)
    return sub, ExactMorphism(sub, space, basis)


def _right_action_equalizer(ctx, M, N, A, rho_M, rho_N):
    H = hom_object(ctx, M, N)
    MA = M.tensor(A)
    eps = counit_eps(ctx, M, N)
    precompose = curry(ctx, eps @ tensor(H, rho_M), MA, H)
    postcompose = curry(ctx, rho_N @ tensor(eps, A) @ associator_inv(ctx, H, M, A), MA, H)
    return equalizer(H, precompose, postcompose)


def lie_hom_space(m: LieModule, n: LieModule):
    """Internal hom of Lie modules: the part of ``H(M, N)`` intertwining the actions.

    Returns ``(LH, incl)`` with ``incl: LH → H(M, N)``. Both modules are used
    in right form.
    """
    if m.algebra != n.algebra:
        raise ShapeError("modules over different Lie algebras")
    m, n = to_right_module(m), to_right_module(n)
    return _right_action_equalizer(m.ctx, m.carrier, n.carrier, m.algebra.obj, m.action, n.action)


@dataclass(frozen=True)
class LieHomSpace:
    """``LH(M, N)`` as a subobject of ``H(M, N)``."""

    source: LieModule
    target: LieModule
    obj: GradedObject
    inclusion: ExactMorphism

    def __post_init__(self):
        H = hom_object(self.source.ctx, self.source.carrier, self.target.carrier)
        _expect(self.inclusion, self.obj, H, "inclusion")


def lie_hom(m: LieModule, n: LieModule) -> LieHomSpace:
    LH, incl = lie_hom_space(m, n)
    return LieHomSpace(m, n, LH, incl)


def check_lie_hom_space(s: LieHomSpace) -> CheckReport:
    """The inclusion is injective, lands in intertwiners, and exhausts them."""
    report = CheckReport("lie_hom_space")
    m, n = to_right_module(s.source), to_right_module(s.target)
    ctx, M, N, A = m.ctx, m.carrier, n.carrier, m.algebra.obj
    H = s.inclusion.target
    eps = counit_eps(ctx, M, N)
    pre = curry(ctx, eps @ tensor(H, m.action), M.tensor(A), H)
    post = curry(ctx, n.action @ tensor(eps, A) @ associator_inv(ctx, H, M, A), M.tensor(A), H)
    report.add_flag("inclusion_injective", rank(s.inclusion.matrix) == s.obj.dim)
    report.add_equality("intertwines", pre @ s.inclusion, post @ s.inclusion)
    full = kernel_basis((pre - post).matrix).cols
    report.add_flag("exhaustive", full == s.obj.dim, f"intertwiner space has dimension {full}")
    return report


def commutator_bracket_on_endomorphisms(ctx: CategoryContext, X: GradedObject) -> YBLieAlgebra:
    """``H(X, X)`` with composition commutator and the context symmetry."""
    _require_symmetric(ctx, "the endomorphism Lie algebra")
    H = hom_object(ctx, X, X)
    eps = counit_eps(ctx, X, X)
    HH = H.tensor(H)
    compose = curry(ctx, eps @ tensor(H, eps) @ associator(ctx, H, H, X), X, HH)
    c = braiding(ctx, H, H)
    return YBLieAlgebra(ctx, H, c, compose - compose @ c)


def module_to_representation(m: LieModule) -> ExactMorphism:
    """``L → H(X, X)`` obtained by currying the left action."""
    _require_symmetric(m.ctx, "representations")
    left = to_left_module(m)
    return curry(left.ctx, left.action, left.carrier, left.algebra.obj)


def representation_to_module(L: YBLieAlgebra, X: GradedObject, phi: ExactMorphism, side: str = "left") -> LieModule:
    _require_symmetric(L.ctx, "representations")
    _expect(phi, L.obj, hom_object(L.ctx, X, X), "representation")
    m = LieModule(L, X, uncurry(L.ctx, phi, X, X), side="left")
    return m if side == "left" else to_right_module(m)

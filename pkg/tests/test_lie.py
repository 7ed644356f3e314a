from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import commutant_dimension, grid, jacobi_defect, t_w_by_permutation
from yblie import fixtures as fx
from yblie.errors import NotSymmetricContext, ShapeError
from yblie.linalg import GAUSSIAN_RATIONALS, RATIONALS, Matrix, invert, rank
from yblie.lie import (
    LieComodule,
    LieModule,
    YBLieAlgebra,
    YBLieCoalgebra,
    YBOperator,
    adjoint_module,
    check_lie_comodule,
    check_lie_hom_space,
    check_lie_module,
    check_morphism,
    check_yb_lie_algebra,
    check_yb_lie_coalgebra,
    check_yb_operator,
    commutator_bracket_on_endomorphisms,
    derive_t_w,
    induce_module,
    left_jacobi,
    lie_hom,
    module_to_representation,
    opposite,
    representation_to_module,
    to_left_comodule,
    to_left_module,
    to_right_comodule,
    to_right_module,
)
from yblie.monoidal import CategoryContext, ExactMorphism, GradedObject, braiding, tensor

TRIVIAL = CategoryContext(RATIONALS)
SUPER = CategoryContext(RATIONALS, "super")


def all_degree_patterns(max_dim):
    for n in range(1, max_dim + 1):
        yield from product((0, 1), repeat=n)


class TestOperators:
    @pytest.mark.parametrize("flavor", ["trivial", "super"])
    def test_t_w_match_permutations(self, flavor):
        ctx = TRIVIAL if flavor == "trivial" else SUPER
        for d in all_degree_patterns(3):
            X = GradedObject(d)
            t, w = derive_t_w(YBOperator(ctx, X, braiding(ctx, X, X)))
            ot, ow = t_w_by_permutation(d, flavor)
            assert grid(t) == ot and grid(w) == ow

    def test_symmetries_are_yb_operators(self):
        for ctx in (TRIVIAL, SUPER):
            X = GradedObject((0, 1, 1))
            assert check_yb_operator(YBOperator(ctx, X, braiding(ctx, X, X))).passed

    def test_anyonic_line_is_not_involutive(self):
        r = check_yb_operator(fx.any1())
        assert r.failures() == ["order_two"]
        w = r["order_two"].witness
        assert (w.row, w.col, w.lhs, w.rhs) == (0, 0, "4", "1")

    def test_scaled_flip_fails_order_two_only(self):
        X = GradedObject.even(2)
        c = braiding(TRIVIAL, X, X).scale(RATIONALS(2))
        assert check_yb_operator(YBOperator(TRIVIAL, X, c)).failures() == ["order_two"]

    def test_shape_checked(self):
        X = GradedObject.even(2)
        with pytest.raises(ShapeError):
            YBOperator(TRIVIAL, X, TRIVIAL.identity(X))


class TestAlgebras:
    @pytest.mark.parametrize("build", [fx.ab2, fx.sl2, fx.gl2])
    def test_examples_pass(self, build):
        L = build()
        assert check_yb_lie_algebra(L).passed
        assert left_jacobi(L).passed
        assert jacobi_defect(grid(L.bracket), L.obj.dim) is None

    def test_broken_sl2_witness(self):
        L = fx.sl2_broken()
        r = check_yb_lie_algebra(L)
        assert r.failures() == ["jacobi"]
        # the oracle also finds a defect; the checker's witness is the first nonzero entry
        assert jacobi_defect(grid(L.bracket), 3) is not None
        w = r["jacobi"].witness
        from yblie.lie import _t_w_unchecked  # noqa: PLC0415
        t, ww = _t_w_unchecked(L.operator)
        X = L.obj
        one = TRIVIAL.identity(t.source)
        jac = grid(L.bracket @ tensor(X, L.bracket) @ (one + t + ww))
        first = next((i, j) for i, row in enumerate(jac) for j, v in enumerate(row) if v)
        assert (w.row, w.col) == first
        assert Fraction(w.lhs) == jac[w.row][w.col] and w.rhs == "0"

    def test_opposite_is_negated_bracket(self):
        L = fx.sl2()
        op = opposite(L)
        assert check_yb_lie_algebra(op).passed
        assert op.bracket == -L.bracket

    def test_super_endomorphisms(self):
        for d in ((0, 1), (1, 1), (0, 0, 1)):
            gl = commutator_bracket_on_endomorphisms(SUPER, GradedObject(d))
            assert check_yb_lie_algebra(gl).passed
            assert left_jacobi(gl).passed

    def test_endomorphisms_need_symmetry(self):
        ctx = CategoryContext(GAUSSIAN_RATIONALS, "anyonic", "sign")
        with pytest.raises(NotSymmetricContext):
            commutator_bracket_on_endomorphisms(ctx, GradedObject((1,)))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(-4, 4), st.integers(-4, 4))
    def test_every_two_dimensional_antisymmetric_bracket(self, a, b):
        L = GradedObject.even(2)
        rows = [[0, a, -a, 0], [0, b, -b, 0]]
        br = ExactMorphism.from_rows(L @ L, L, rows, RATIONALS)
        assert check_yb_lie_algebra(YBLieAlgebra(TRIVIAL, L, braiding(TRIVIAL, L, L), br)).passed

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
    def test_transported_sl2_stays_lie(self, entries):
        P = Matrix.from_rows([entries[0:3], entries[3:6], entries[6:9]], RATIONALS)
        if rank(P) < 3:
            return
        L = fx.sl2()
        X = L.obj
        p = ExactMorphism(X, X, P)
        p_inv = ExactMorphism(X, X, invert(P))
        moved = YBLieAlgebra(TRIVIAL, X, L.yb, p_inv @ L.bracket @ tensor(p, p))
        assert check_yb_lie_algebra(moved).passed
        assert check_morphism(p, moved, L).passed

    def test_non_morphism_detected(self):
        L = fx.sl2()
        twice = ExactMorphism(L.obj, L.obj, Matrix.identity(3, RATIONALS)).scale(RATIONALS(2))
        assert check_morphism(twice, L, L).failures() == ["respects_bracket"]


class TestCoalgebras:
    def test_dual_cobracket_passes(self):
        from yblie.duality import dual_pair  # noqa: PLC0415
        C = dual_pair(fx.sl2()).C
        assert check_yb_lie_coalgebra(C).passed

    def test_non_antisymmetric_cobracket(self):
        X = GradedObject.even(1)
        cob = ExactMorphism.from_rows(X, X @ X, [[1]], RATIONALS)
        r = check_yb_lie_coalgebra(YBLieCoalgebra(TRIVIAL, X, braiding(TRIVIAL, X, X), cob))
        assert "antisymmetry" in r.failures()


class TestModules:
    def test_adjoint_and_induced(self):
        assert check_lie_module(fx.sl2_adjoint()).passed
        assert check_lie_module(fx.sl2_induced()).passed
        assert check_lie_module(induce_module(to_left_module(fx.sl2_adjoint()), GradedObject.even(2))).passed

    def test_broken_module(self):
        assert check_lie_module(fx.sl2_adjoint_broken()).failures() == ["module_law"]

    def test_side_conversion_round_trip(self):
        m = fx.sl2_adjoint()
        left = to_left_module(m)
        assert left.side == "left" and check_lie_module(left).passed
        assert to_right_module(left) == m

    def test_super_side_conversion(self):
        gl = commutator_bracket_on_endomorphisms(SUPER, GradedObject((0, 1)))
        m = adjoint_module(gl)
        left = to_left_module(m)
        assert check_lie_module(m).passed and check_lie_module(left).passed
        assert to_right_module(left) == m

    def test_conversion_rejects_non_symmetric_operator(self):
        L = fx.sl2()
        odd = YBLieAlgebra(L.ctx, L.obj, L.yb.scale(RATIONALS(-1)), L.bracket)
        with pytest.raises(NotSymmetricContext):
            to_left_module(LieModule(odd, L.obj, L.bracket))

    def test_representation_round_trip(self):
        m = fx.sl2_adjoint()
        phi = module_to_representation(m)
        gl = commutator_bracket_on_endomorphisms(TRIVIAL, m.carrier)
        assert check_morphism(phi, m.algebra, gl).passed
        assert representation_to_module(m.algebra, m.carrier, phi, side="right") == m

    def test_bad_side(self):
        m = fx.sl2_adjoint()
        with pytest.raises(ValueError):
            LieModule(m.algebra, m.carrier, m.action, side="middle")

    def test_comodule_sides(self):
        c = fx.sl2_adjoint_comodule()
        assert check_lie_comodule(c).passed
        right = to_right_comodule(c)
        assert check_lie_comodule(right).passed
        assert to_left_comodule(right) == c

    def test_broken_comodule(self):
        c = fx.sl2_adjoint_comodule()
        bad = LieComodule(c.coalgebra, c.carrier, c.coaction.scale(RATIONALS(3)), c.side)
        assert check_lie_comodule(bad).failures() == ["comodule_law"]


class TestHomSpaces:
    def test_adjoint_endomorphisms_are_scalars(self):
        s = lie_hom(fx.sl2_adjoint(), fx.sl2_adjoint())
        n = commutant_dimension(grid(fx.sl2_adjoint().action), 3, 3)
        assert s.obj.dim == n == 1
        assert check_lie_hom_space(s).passed

    def test_induced_hom_dimension(self):
        m, n = fx.sl2_adjoint(), fx.sl2_induced()
        s = lie_hom(m, n)
        assert check_lie_hom_space(s).passed
        assert s.obj.dim == 2  # two copies of the adjoint

    def test_abelian_algebra_commutes_with_everything(self):
        L = fx.ab2()
        s = lie_hom(adjoint_module(L), adjoint_module(L))
        assert s.obj.dim == 4 == commutant_dimension(grid(L.bracket), 2, 2)

    def test_truncated_inclusion_is_not_exhaustive(self):
        from yblie.lie import LieHomSpace  # noqa: PLC0415
        L = fx.ab2()
        m = adjoint_module(L)
        s = lie_hom(m, m)
        part = ExactMorphism(GradedObject.even(1), s.inclusion.target, s.inclusion.matrix.column(0))
        r = check_lie_hom_space(LieHomSpace(m, m, GradedObject.even(1), part))
        assert r.failures() == ["exhaustive"]

from fractions import Fraction

import pytest

from oracles import grid, takeuchi_conditions
from yblie import fixtures as fx
from yblie.braided import CoalgebraComodule
from yblie.duality import (
    TEST_OBJECTS,
    MichaelisPair,
    TakeuchiPair,
    check_hom_monad,
    check_michaelis_pair,
    check_monad_morphism,
    check_square,
    check_takeuchi,
    check_zeta_inverse,
    comodule_to_module,
    dual_pair,
    duality_report,
    elementary_from_adjoint,
    ev_from_theta,
    ev_from_zeta,
    gram_matrix,
    michaelis_from_takeuchi,
    module_to_comodule,
    strengthen,
    theta_at,
    xi_at,
    zeta_at,
    zeta_from_unit,
)
from yblie.errors import FieldMismatch, InvalidInput, NotStrong, SnakeFailure
from yblie.lie import (
    YBLieAlgebra,
    YBLieCoalgebra,
    check_lie_comodule,
    check_lie_module,
    commutator_bracket_on_endomorphisms,
    induce_module,
    to_left_module,
)
from yblie.linalg import GAUSSIAN_RATIONALS, RATIONALS, Matrix, prime_field
from yblie.monoidal import UNIT, CategoryContext, ExactMorphism, GradedObject, braiding, tensor

Q = RATIONALS
TRIVIAL = CategoryContext(Q)
SUPER = CategoryContext(Q, "super")


def gl11():
    return commutator_bracket_on_endomorphisms(SUPER, GradedObject((0, 1)))


def rescaled_sl2_pair(weights=(1, 2, 3)):
    """sl2 against its dual with ``ev(e_i⊗e^j) = w_i δ_ij``."""
    L = fx.sl2()
    X = L.obj
    n = X.dim
    ev = ExactMorphism(X @ X, UNIT, Matrix.from_entries({(0, i * n + i): w for i, w in enumerate(weights)}, (1, n * n), Q))
    coev = ExactMorphism(
        UNIT, X @ X, Matrix.from_entries({(i * n + i, 0): Fraction(1, w) for i, w in enumerate(weights)}, (n * n, 1), Q)
    )
    return elementary_from_adjoint(L, X, ev, coev), coev


class TestPairs:
    @pytest.mark.parametrize("build", [fx.sl2_pair, fx.ext1_michaelis, lambda: dual_pair(gl11()), lambda: dual_pair(fx.gl2())])
    def test_pairs_pass(self, build):
        assert check_michaelis_pair(build()).passed

    def test_broken_pair_witness(self):
        r = check_michaelis_pair(fx.sl2_pair_broken())
        assert r.failures() == ["mich_bracket"]
        w = r["mich_bracket"].witness
        assert (w.row, w.col, w.lhs, w.rhs) == (0, 7, "1", "2")

    def test_broken_pair_witness_by_hand(self):
        # column 7 of L⊗L⊗C is the basis triple (e, f, h*)
        p = fx.sl2_pair_broken()
        a, rest = divmod(7, 9)
        b, c = divmod(rest, 3)
        ev = grid(p.ev)[0]
        br = grid(p.L.bracket)
        lhs = sum(br[k][a * 3 + b] * ev[k * 3 + c] for k in range(3))
        assert lhs == 1
        cob = grid(p.C.cobracket)
        rhs = sum(cob[u * 3 + v][c] * ev[b * 3 + u] * ev[a * 3 + v] for u in range(3) for v in range(3))
        assert rhs == 2

    def test_dual_of_opposite_negates_cobracket(self):
        from yblie.lie import opposite  # noqa: PLC0415
        assert dual_pair(opposite(fx.sl2())).C.cobracket == -dual_pair(fx.sl2()).C.cobracket

    def test_dual_cobracket_is_transposed_bracket(self):
        p = fx.sl2_pair()
        br, cob = grid(p.L.bracket), grid(p.C.cobracket)
        for k in range(3):
            for i in range(3):
                for j in range(3):
                    assert cob[j * 3 + i][k] == br[k][i * 3 + j]

    def test_snake_failure(self):
        L = fx.sl2()
        X = L.obj
        ev = dual_pair(L).ev
        with pytest.raises(SnakeFailure):
            elementary_from_adjoint(L, X, ev, TRIVIAL.zero(UNIT, X @ X))

    def test_context_mismatch(self):
        L = fx.sl2()
        C = dual_pair(L).C
        other = YBLieCoalgebra(SUPER, C.obj, C.yb, C.cobracket)
        with pytest.raises(FieldMismatch):
            MichaelisPair(L, other, dual_pair(L).ev)

    def test_non_strict_refused(self):
        ctx = CategoryContext(GAUSSIAN_RATIONALS, "anyonic", "sign")
        X = GradedObject.even(1)
        L = YBLieAlgebra(ctx, X, braiding(ctx, X, X), ctx.zero(X @ X, X))
        C = YBLieCoalgebra(ctx, X, braiding(ctx, X, X), ctx.zero(X, X @ X))
        with pytest.raises(InvalidInput):
            MichaelisPair(L, C, ctx.zero(X @ X, UNIT))

    def test_ev_shape(self):
        p = fx.sl2_pair()
        with pytest.raises(InvalidInput):
            MichaelisPair(p.L, p.C, TRIVIAL.zero(p.L.obj, UNIT))


class TestStrong:
    def test_identity_gram(self):
        w = strengthen(fx.sl2_pair())
        assert w.gram == Matrix.identity(3, Q)

    def test_weighted_gram(self):
        p, coev = rescaled_sl2_pair()
        assert gram_matrix(p).to_text() == [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "3"]]
        assert strengthen(p).coev == coev

    def test_zero_pairing_is_not_strong(self):
        with pytest.raises(NotStrong):
            strengthen(fx.ab2_zero_ev())

    def test_invalid_pair_refused(self):
        with pytest.raises(InvalidInput):
            strengthen(fx.sl2_pair_broken())

    @pytest.mark.parametrize("X", TEST_OBJECTS, ids=lambda X: str(X.degrees))
    def test_zeta_xi_inverse(self, X):
        for p in (fx.sl2_pair(), rescaled_sl2_pair()[0], dual_pair(gl11())):
            assert check_zeta_inverse(p, strengthen(p), X).passed

    def test_zeta_not_invertible_for_zero_pairing(self):
        p = fx.ab2_zero_ev()
        assert zeta_at(p, UNIT).is_zero()


class TestUniversalProperty:
    @pytest.mark.parametrize("build", [fx.sl2_pair, fx.ext1_michaelis, lambda: rescaled_sl2_pair()[0], lambda: dual_pair(gl11())])
    def test_duality_report(self, build):
        r = duality_report(build())
        assert r.passed
        assert r["scope"].note

    def test_round_trips_at_the_unit(self):
        p, _ = rescaled_sl2_pair()
        assert ev_from_zeta(p.L, p.C, zeta_at(p, UNIT)) == p.ev
        assert ev_from_theta(p.L, p.C, theta_at(p, UNIT)) == p.ev
        for X in TEST_OBJECTS:
            assert zeta_from_unit(p.L, p.C, zeta_at(p, UNIT), X) == zeta_at(p, X)

    def test_zeta_shape_checked(self):
        p = fx.sl2_pair()
        with pytest.raises(InvalidInput):
            ev_from_zeta(p.L, p.C, zeta_at(p, GradedObject.even(2)))

    def test_broken_pair_is_not_a_monad_morphism(self):
        p = fx.sl2_pair_broken()
        assert not check_monad_morphism(p, UNIT).passed

    def test_xi_inverts_zeta_on_degrees(self):
        p = dual_pair(gl11())
        X = GradedObject((0, 1))
        assert xi_at(p, strengthen(p), X).target == X @ p.L.obj


class TestHomMonad:
    @pytest.mark.parametrize("X", TEST_OBJECTS, ids=lambda X: str(X.degrees))
    def test_lie_coalgebra_gives_lie_monad(self, X):
        assert check_hom_monad(fx.sl2_pair().C, X).passed
        assert check_hom_monad(dual_pair(gl11()).C, X).passed

    def test_non_jacobi_cobracket_breaks_the_monad(self):
        L = fx.sl2_broken()
        n = 3
        # transpose through the factor swap, as for the dual pair
        cob = {((k % n) * n + k // n, r): v for r, k, v in L.bracket.matrix.items()}
        C = YBLieCoalgebra(TRIVIAL, L.obj, L.yb, ExactMorphism(L.obj, L.obj @ L.obj, Matrix.from_entries(cob, (9, 3), Q)))
        r = check_hom_monad(C, UNIT)
        assert r.failures() == ["jacobi"]


class TestTransfer:
    def test_comodule_module_round_trip(self):
        p = fx.sl2_pair()
        w = strengthen(p)
        for m in (fx.sl2_adjoint(), fx.sl2_induced()):
            c = module_to_comodule(p, w, m)
            assert check_lie_comodule(c).passed
            assert comodule_to_module(p, c) == to_left_module(m)

    def test_weighted_round_trip(self):
        p, _ = rescaled_sl2_pair()
        w = strengthen(p)
        m = induce_module(fx.sl2_adjoint(), GradedObject.even(2))
        back = comodule_to_module(p, module_to_comodule(p, w, m))
        assert back == to_left_module(m) and check_lie_module(back).passed

    def test_comodule_first_round_trip(self):
        p = fx.sl2_pair()
        c = fx.sl2_adjoint_comodule()
        assert module_to_comodule(p, strengthen(p), comodule_to_module(p, c)) == c

    def test_super_round_trip(self):
        p = dual_pair(gl11())
        from yblie.lie import adjoint_module  # noqa: PLC0415
        m = adjoint_module(p.L)
        assert comodule_to_module(p, module_to_comodule(p, strengthen(p), m)) == to_left_module(m)

    def test_refuses_bad_inputs(self):
        p = fx.sl2_pair()
        with pytest.raises(InvalidInput):
            module_to_comodule(p, strengthen(p), fx.sl2_adjoint_broken())
        with pytest.raises(InvalidInput):
            module_to_comodule(dual_pair(fx.ab2()), strengthen(dual_pair(fx.ab2())), fx.sl2_adjoint())


TAKEUCHI = {
    "ext1": fx.ext1_takeuchi,
    "kz2d-kz2": fx.kz2d_kz2_takeuchi,
    "kz3-kz2-broken": fx.kz3_kz2_takeuchi_broken,
}
LETTERS = {"a": "a_unit_K", "b": "b_unit_H", "c": "c_mul_H", "d": "d_mul_K", "e": "e_yb"}


class TestTakeuchi:
    @pytest.mark.parametrize("name", sorted(TAKEUCHI))
    def test_conditions_match_oracle(self, name):
        t = TAKEUCHI[name]()
        r = check_takeuchi(t)
        oracle = takeuchi_conditions(t.H, t.K, t.pairing)
        for letter, entry in LETTERS.items():
            assert r[entry].passed == oracle[letter], entry

    def test_counit_pairing_is_a_takeuchi_pair(self):
        # ⟨h, k⟩ = ε(h)ε(k) is multiplicative in both slots by counitality
        H = fx.kz2()
        t = TakeuchiPair(H, H, tensor(H.counit, H.counit))
        assert check_takeuchi(t).passed
        assert all(takeuchi_conditions(t.H, t.K, t.pairing).values())

    def test_broken_fails_only_c(self):
        assert check_takeuchi(fx.kz3_kz2_takeuchi_broken()).failures() == ["c_mul_H"]

    def test_ext1_bridge(self):
        p = michaelis_from_takeuchi(fx.ext1_takeuchi())
        assert p.ev.matrix.to_text() == [["1"]]
        assert p.L.obj.degrees == (1,) and p.C.obj.degrees == (1,)
        assert strengthen(p).gram.to_text() == [["1"]]

    def test_group_pairing_bridge_is_empty(self):
        p = michaelis_from_takeuchi(fx.kz2d_kz2_takeuchi())
        assert p.L.obj.dim == 0 and p.C.obj.dim == 0
        assert check_michaelis_pair(p).passed

    def test_refuses_invalid(self):
        with pytest.raises(InvalidInput):
            michaelis_from_takeuchi(fx.kz3_kz2_takeuchi_broken())

    def test_context_mismatch(self):
        t = fx.ext1_takeuchi()
        with pytest.raises(FieldMismatch):
            TakeuchiPair(t.H, fx.kz2(), t.pairing)

    @pytest.mark.parametrize("build", [fx.ext1_regular_comodule, fx.ext1_trivial_comodule])
    def test_square(self, build):
        r = check_square(fx.ext1_takeuchi(), build())
        assert r.passed
        assert "square_commutes" in r.names()

    def test_square_refuses_non_comodule(self):
        with pytest.raises(InvalidInput):
            check_square(fx.ext1_takeuchi(), fx.ext1_comodule_broken())

    def test_square_needs_left_side(self):
        H = fx.ext1()
        with pytest.raises(InvalidInput):
            check_square(fx.ext1_takeuchi(), CoalgebraComodule(H.coalgebra, H.obj, H.comul, side="right"))

    def test_square_on_group_pairing(self):
        t = fx.kz2d_kz2_takeuchi()
        K = t.K
        assert check_square(t, CoalgebraComodule(K.coalgebra, K.obj, K.comul)).passed

    def test_prime_field_pairing(self):
        F3 = prime_field(3)
        ctx = CategoryContext(F3)
        # ε⊗ε on the field itself, viewed as a one-dimensional bialgebra
        X = GradedObject.even(1)
        one = ctx.identity(X)
        from yblie.braided import BraidedBialgebra  # noqa: PLC0415
        k = BraidedBialgebra(ctx, X, ctx.identity(X), one, one, one, braiding(ctx, X, X))
        t = TakeuchiPair(k, k, ctx.identity(X))
        assert check_takeuchi(t).passed
        assert michaelis_from_takeuchi(t).L.obj.dim == 0

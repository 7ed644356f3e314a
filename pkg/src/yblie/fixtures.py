"""The shipped example structures, built from their multiplication tables.

Each entry of :data:`FIXTURES` records the file kind and the checker
entries it is meant to fail (empty for structures that pass everything).
The JSON files under ``data/`` are the serialized output of these builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braided import AlgebraModule, BraidedBialgebra, CoalgebraComodule, YBAlgebra, commutator_lie
from .duality import MichaelisPair, TakeuchiPair, dual_pair, michaelis_from_takeuchi, module_to_comodule, strengthen
from .lie import YBLieAlgebra, YBOperator, adjoint_module, induce_module, lie_hom, to_left_module, LieModule
from .linalg import RATIONALS, Matrix, prime_field
from .monoidal import UNIT, CategoryContext, ExactMorphism, GradedObject, braiding, tensor

__all__ = ["Fixture", "FIXTURES", "build", "fixture_names", "fixture_path", "load_fixture", "write_all"]

TRIVIAL = CategoryContext(RATIONALS)
SUPER = CategoryContext(RATIONALS, "super")


def _table(ctx, source: GradedObject, target: GradedObject, table: dict) -> ExactMorphism:
    """Morphism from ``{source index: {target index: coefficient}}``."""
    entries = {(t, s): v for s, col in table.items() for t, v in col.items()}
    return ExactMorphism(source, target, Matrix.from_entries(entries, (target.dim, source.dim), ctx.field))


def _bracket(ctx, L: GradedObject, table: dict) -> ExactMorphism:
    n = L.dim
    return _table(ctx, L @ L, L, {i * n + j: out for (i, j), out in table.items()})


# --------------------------------------------------------------- Lie algebras

def ab2() -> YBLieAlgebra:
    L = GradedObject.even(2)
    return YBLieAlgebra(TRIVIAL, L, braiding(TRIVIAL, L, L), TRIVIAL.zero(L @ L, L))


E, H, F = 0, 1, 2
_SL2 = {
    (E, F): {H: 1}, (F, E): {H: -1},
    (H, E): {E: 2}, (E, H): {E: -2},
    (H, F): {F: -2}, (F, H): {F: 2},
}


def sl2() -> YBLieAlgebra:
    """Basis ``e, h, f`` with ``[e,f] = h``, ``[h,e] = 2e``, ``[h,f] = -2f``."""
    L = GradedObject.even(3)
    return YBLieAlgebra(TRIVIAL, L, braiding(TRIVIAL, L, L), _bracket(TRIVIAL, L, _SL2))


def sl2_broken() -> YBLieAlgebra:
    # [h,e] rescaled to 3e: antisymmetric still, Jacobi no longer
    table = dict(_SL2)
    table[(H, E)] = {E: 3}
    table[(E, H)] = {E: -3}
    L = GradedObject.even(3)
    return YBLieAlgebra(TRIVIAL, L, braiding(TRIVIAL, L, L), _bracket(TRIVIAL, L, table))


def m2() -> YBAlgebra:
    """2x2 matrices on the basis ``E11, E12, E21, E22`` (index ``2a + b``)."""
    B = GradedObject.even(4)
    mul = {}
    for a in range(2):
        for b in range(2):
            for d in range(2):
                mul[(2 * a + b) * 4 + 2 * b + d] = {2 * a + d: 1}
    unit = _table(TRIVIAL, UNIT, B, {0: {0: 1, 3: 1}})
    return YBAlgebra(TRIVIAL, B, _table(TRIVIAL, B @ B, B, mul), braiding(TRIVIAL, B, B), unit)


def gl2() -> YBLieAlgebra:
    return commutator_lie(m2())


def any1() -> YBOperator:
    """The odd line over F₅ braided by ``i = 2``; squares to ``-1``."""
    ctx = CategoryContext(prime_field(5), "anyonic", "sign")
    X = GradedObject((1,))
    return YBOperator(ctx, X, braiding(ctx, X, X))


# --------------------------------------------------------------- bialgebras

def ext1() -> BraidedBialgebra:
    """Exterior algebra on one odd generator ``x``; ``x`` primitive."""
    ctx = SUPER
    X = GradedObject((0, 1))
    mul = _table(ctx, X @ X, X, {0: {0: 1}, 1: {1: 1}, 2: {1: 1}})
    unit = _table(ctx, UNIT, X, {0: {0: 1}})
    comul = _table(ctx, X, X @ X, {0: {0: 1}, 1: {1: 1, 2: 1}})
    counit = _table(ctx, X, UNIT, {0: {0: 1}})
    return BraidedBialgebra(ctx, X, mul, unit, comul, counit, braiding(SUPER, X, X))


def ext1_trivial_swap() -> BraidedBialgebra:
    # the same maps with the unsigned flip as YB operator
    H = ext1()
    return BraidedBialgebra(H.ctx, H.obj, H.mul, H.unit, H.comul, H.counit, braiding(TRIVIAL, H.obj, H.obj))


def _group_algebra(n: int) -> BraidedBialgebra:
    G = GradedObject.even(n)
    mul = {a * n + b: {(a + b) % n: 1} for a in range(n) for b in range(n)}
    comul = {a: {a * n + a: 1} for a in range(n)}
    return BraidedBialgebra(
        TRIVIAL,
        G,
        _table(TRIVIAL, G @ G, G, mul),
        _table(TRIVIAL, UNIT, G, {0: {0: 1}}),
        _table(TRIVIAL, G, G @ G, comul),
        _table(TRIVIAL, G, UNIT, {a: {0: 1} for a in range(n)}),
        braiding(TRIVIAL, G, G),
    )


def kz2() -> BraidedBialgebra:
    """Group algebra of the group of order two, basis ``1, g``."""
    return _group_algebra(2)


def kz3() -> BraidedBialgebra:
    return _group_algebra(3)


def kz2d() -> BraidedBialgebra:
    """Functions on the group of order two, basis of point indicators ``p0, p1``."""
    X = GradedObject.even(2)
    mul = {0: {0: 1}, 3: {1: 1}}
    comul = {a: {b * 2 + ((a + b) % 2): 1 for b in range(2)} for a in range(2)}
    return BraidedBialgebra(
        TRIVIAL,
        X,
        _table(TRIVIAL, X @ X, X, mul),
        _table(TRIVIAL, UNIT, X, {0: {0: 1, 1: 1}}),
        _table(TRIVIAL, X, X @ X, comul),
        _table(TRIVIAL, X, UNIT, {0: {0: 1}}),
        braiding(TRIVIAL, X, X),
    )


# --------------------------------------------------------------- modules

def sl2_adjoint() -> LieModule:
    return adjoint_module(sl2())


def sl2_adjoint_broken() -> LieModule:
    m = sl2_adjoint()
    return LieModule(m.algebra, m.carrier, m.action.scale(2))


def sl2_induced() -> LieModule:
    return induce_module(sl2_adjoint(), GradedObject.even(2))


def m2_column() -> AlgebraModule:
    """Column vectors, ``E_ab · e_c = δ_bc e_a``."""
    B = m2()
    V = GradedObject.even(2)
    act = {(2 * a + b) * 2 + b: {a: 1} for a in range(2) for b in range(2)}
    return AlgebraModule(B, V, _table(TRIVIAL, B.obj @ V, V, act), side="left")


def sl2_adjoint_comodule():
    p = dual_pair(sl2())
    return module_to_comodule(p, strengthen(p), to_left_module(sl2_adjoint()))


def ext1_regular_comodule() -> CoalgebraComodule:
    H = ext1()
    return CoalgebraComodule(H.coalgebra, H.obj, H.comul)


def ext1_trivial_comodule() -> CoalgebraComodule:
    H = ext1()
    return CoalgebraComodule(H.coalgebra, H.obj, tensor(H.unit, H.obj))


def ext1_comodule_broken() -> CoalgebraComodule:
    # extra 1 ↦ x⊗x term spoils coassociativity but not the counit law
    H = ext1()
    extra = _table(SUPER, H.obj, H.obj @ H.obj, {0: {3: 1}})
    return CoalgebraComodule(H.coalgebra, H.obj, H.comul + extra)


def sl2_lie_hom():
    return lie_hom(sl2_adjoint(), sl2_adjoint())


# --------------------------------------------------------------- pairs

def sl2_pair() -> MichaelisPair:
    return dual_pair(sl2())


def sl2_pair_strong():
    from .io import StrongMichaelisPair

    p = sl2_pair()
    return StrongMichaelisPair(p, strengthen(p))


def sl2_pair_broken() -> MichaelisPair:
    # ev(e⊗e*) doubled, every other pairing kept
    p = sl2_pair()
    ev = p.ev + _table(TRIVIAL, p.ev.source, UNIT, {0: {0: 1}})
    return MichaelisPair(p.L, p.C, ev)


def ab2_zero_ev() -> MichaelisPair:
    p = dual_pair(ab2())
    return MichaelisPair(p.L, p.C, TRIVIAL.zero(p.ev.source, UNIT))


def ext1_takeuchi() -> TakeuchiPair:
    """Self-pairing with ``1·1 = 1``, ``x·x = 1``."""
    H = ext1()
    return TakeuchiPair(H, H, _table(SUPER, H.obj @ H.obj, UNIT, {0: {0: 1}, 3: {0: 1}}))


def ext1_michaelis() -> MichaelisPair:
    return michaelis_from_takeuchi(ext1_takeuchi())


def kz2d_kz2_takeuchi() -> TakeuchiPair:
    """Evaluation of functions at group elements."""
    A, B = kz2d(), kz2()
    return TakeuchiPair(A, B, _table(TRIVIAL, A.obj @ B.obj, UNIT, {0: {0: 1}, 3: {0: 1}}))


def kz3_kz2_takeuchi_broken() -> TakeuchiPair:
    # g ↦ sign character, g² ↦ trivial character: not multiplicative in the first slot
    A, B = kz3(), kz2()
    values = {0: 1, 1: 1, 2: 1, 3: -1, 4: 1, 5: 1}
    return TakeuchiPair(A, B, _table(TRIVIAL, A.obj @ B.obj, UNIT, {k: {0: v} for k, v in values.items()}))


# --------------------------------------------------------------- registry

@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    builder: object
    expected_failures: tuple[str, ...] = ()
    description: str = ""


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture("ab2", "yb_lie_algebra", ab2, (), "two-dimensional abelian Lie algebra"),
        Fixture("sl2", "yb_lie_algebra", sl2, (), "sl(2) on e, h, f"),
        Fixture("gl2", "yb_lie_algebra", gl2, (), "commutator Lie algebra of 2x2 matrices"),
        Fixture("m2", "yb_algebra", m2, (), "2x2 matrix algebra"),
        Fixture("any1", "yb_operator", any1, ("order_two",), "odd line over F_5 with braiding by i = 2"),
        Fixture("ext1", "braided_bialgebra", ext1, (), "exterior algebra on one odd primitive"),
        Fixture("kz2", "braided_bialgebra", kz2, (), "group algebra of Z/2"),
        Fixture("kz3", "braided_bialgebra", kz3, (), "group algebra of Z/3"),
        Fixture("kz2d", "braided_bialgebra", kz2d, (), "functions on Z/2"),
        Fixture("sl2-adjoint", "lie_module", sl2_adjoint, (), "adjoint right module of sl(2)"),
        Fixture("sl2-induced", "lie_module", sl2_induced, (), "Q^2 tensor the adjoint module"),
        Fixture("sl2-adjoint-comodule", "lie_comodule", sl2_adjoint_comodule, (), "adjoint module as a dual comodule"),
        Fixture("m2-column", "algebra_module", m2_column, (), "column vectors over 2x2 matrices"),
        Fixture("ext1-regular-comodule", "coalgebra_comodule", ext1_regular_comodule, (), "ext1 coacting on itself"),
        Fixture("ext1-trivial-comodule", "coalgebra_comodule", ext1_trivial_comodule, (), "unit coaction"),
        Fixture("sl2-lie-hom", "lie_hom_space", sl2_lie_hom, (), "intertwiners of the adjoint module"),
        Fixture("sl2-pair", "michaelis_pair", sl2_pair, (), "sl(2) with its dual coalgebra"),
        Fixture("sl2-pair-strong", "michaelis_pair", sl2_pair_strong, (), "sl(2) dual pair with coev"),
        Fixture("ab2-zero-ev", "michaelis_pair", ab2_zero_ev, (), "zero pairing, not strong"),
        Fixture("ext1-michaelis", "michaelis_pair", ext1_michaelis, (), "primitives against indecomposables"),
        Fixture("ext1-takeuchi", "takeuchi_pair", ext1_takeuchi, (), "ext1 paired with itself"),
        Fixture("kz2d-kz2-takeuchi", "takeuchi_pair", kz2d_kz2_takeuchi, (), "evaluation pairing"),
        # deliberately broken variants
        Fixture("sl2-broken", "yb_lie_algebra", sl2_broken, ("jacobi",), "[h,e] = 3e"),
        Fixture("ext1-trivial-swap", "braided_bialgebra", ext1_trivial_swap, ("bialgebra_compatibility",),
                "ext1 with the unsigned flip"),
        Fixture("sl2-adjoint-broken", "lie_module", sl2_adjoint_broken, ("module_law",), "doubled adjoint action"),
        Fixture("ext1-comodule-broken", "coalgebra_comodule", ext1_comodule_broken, ("coassociativity",),
                "regular coaction plus 1 -> x⊗x"),
        Fixture("sl2-pair-broken", "michaelis_pair", sl2_pair_broken, ("mich_bracket",), "ev(e, e*) = 2"),
        Fixture("kz3-kz2-takeuchi-broken", "takeuchi_pair", kz3_kz2_takeuchi_broken, ("c_mul_H",),
                "non-multiplicative character assignment"),
    ]
}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def build(name: str):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return FIXTURES[name].builder()


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return Path(str(resources.files("yblie") / "data" / f"{name}.json"))


def load_fixture(name: str):
    from .io import read_structure

    return read_structure(fixture_path(name))


def write_all(directory) -> None:
    """Regenerate the JSON files from the builders."""
    from .io import write_structure

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        write_structure(build(name), out / f"{name}.json")

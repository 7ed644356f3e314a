"""The ambient category: Z/2-graded spaces with a chosen braiding and associator.

Tensor products use plain Kronecker order, so both bracketings of a triple
tensor share one flat index ``(x*dim Y + y)*dim Z + z``; the associator is
therefore always a diagonal matrix.

The internal hom ``H(X, Z)`` (right adjoint of ``- ⊗ X``) is the space of
``dim Z × dim X`` matrices flattened row by row: basis vector ``E_{z,x}`` has
index ``z*dim X + x``. The right hom ``H'(X, Z)`` (adjoint of ``X ⊗ -``)
uses the same underlying space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import FieldMismatch, GradingError, MissingRootOfUnity, ShapeError
from .linalg import Field, Matrix, kron

__all__ = [
    "GradedObject",
    "UNIT",
    "ZERO",
    "ExactMorphism",
    "tensor",
    "CategoryContext",
    "braiding",
    "associator",
    "associator_inv",
    "hom_object",
    "counit_eps",
    "unit_eta",
    "right_hom_object",
    "right_counit_eps",
    "right_unit_eta",
    "hom_map",
    "hom_contra",
    "curry",
    "uncurry",
    "pi_internal",
    "pi_inverse",
    "pi_from_adjunction",
    "pi_inverse_from_adjunction",
]


@dataclass(frozen=True)
class GradedObject:
    """Finite basis with a degree in ``{0, 1}`` per basis vector."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if any(d not in (0, 1) for d in degrees):
            raise ShapeError(f"degrees must be 0 or 1, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def even(cls, n: int) -> "GradedObject":
        return cls((0,) * n)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def tensor(self, other: "GradedObject") -> "GradedObject":
        return GradedObject(tuple((a + b) % 2 for a in self.degrees for b in other.degrees))

    def __matmul__(self, other: "GradedObject") -> "GradedObject":
        return self.tensor(other)

    def __repr__(self):
        return f"GradedObject({list(self.degrees)})"


UNIT = GradedObject((0,))
ZERO = GradedObject(())


def _tensor_objects(*objs: GradedObject) -> GradedObject:
    return reduce(GradedObject.tensor, objs, UNIT)


class ExactMorphism:
    """A degree-preserving matrix with explicit source and target."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedObject, target: GradedObject, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise ShapeError(
                f"matrix of shape {matrix.shape} cannot map dim {source.dim} to dim {target.dim}"
            )
        sd, td = source.degrees, target.degrees
        for i, j, _ in matrix.items():
            if sd[j] != td[i]:
                raise GradingError(
                    f"entry ({i}, {j}) joins a degree-{sd[j]} source vector to a degree-{td[i]} target vector"
                )
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def from_rows(cls, source, target, rows, field: Field) -> "ExactMorphism":
        return cls(source, target, Matrix.from_rows(rows, field, cols=source.dim))

    @classmethod
    def identity(cls, X: GradedObject, field: Field) -> "ExactMorphism":
        return cls(X, X, Matrix.identity(X.dim, field))

    @classmethod
    def zero(cls, source: GradedObject, target: GradedObject, field: Field) -> "ExactMorphism":
        return cls(source, target, Matrix.zeros(target.dim, source.dim, field))

    @property
    def field(self) -> Field:
        return self.matrix.field

    def _same_ends(self, other: "ExactMorphism", op: str):
        if self.source != other.source or self.target != other.target:
            raise ShapeError(f"cannot {op} morphisms with different source or target")

    def __matmul__(self, other: "ExactMorphism") -> "ExactMorphism":
        # g @ f is the composite "g after f"
        if not isinstance(other, ExactMorphism):
            return NotImplemented
        if other.target != self.source:
            raise ShapeError(f"cannot compose: {other.target} is not {self.source}")
        return ExactMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other: "ExactMorphism") -> "ExactMorphism":
        self._same_ends(other, "add")
        return ExactMorphism(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other: "ExactMorphism") -> "ExactMorphism":
        self._same_ends(other, "subtract")
        return ExactMorphism(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self) -> "ExactMorphism":
        return ExactMorphism(self.source, self.target, -self.matrix)

    def scale(self, c) -> "ExactMorphism":
        return ExactMorphism(self.source, self.target, self.matrix.scale(c))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ExactMorphism):
            return NotImplemented
        return (self.source, self.target, self.matrix) == (other.source, other.target, other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"ExactMorphism({self.source} -> {self.target}, {self.matrix.to_text()})"


def tensor(*factors) -> ExactMorphism:
    """Tensor product of morphisms; a bare :class:`GradedObject` stands for its identity."""
    fields = {f.field for f in factors if isinstance(f, ExactMorphism)}
    if not fields:
        raise ShapeError("tensor needs at least one morphism to fix the field")
    if len(fields) > 1:
        raise FieldMismatch(f"morphisms over different fields: {sorted(map(str, fields))}")
    field = fields.pop()
    maps = [
        f if isinstance(f, ExactMorphism) else ExactMorphism.identity(f, field)
        for f in factors
    ]
    result = maps[0]
    for g in maps[1:]:
        result = ExactMorphism(
            result.source.tensor(g.source),
            result.target.tensor(g.target),
            kron(result.matrix, g.matrix),
        )
    return result


_BRAIDINGS = ("trivial", "super", "anyonic")
_ASSOCIATORS = ("trivial", "sign")


@dataclass(frozen=True)
class CategoryContext:
    """Field plus braiding and associator flavors.

    The anyonic braiding ``x ⊗ y ↦ i^{|x||y|} y ⊗ x`` only satisfies the
    hexagon axioms together with the sign associator, so that pairing is
    enforced. ``i`` defaults to the field's canonical square root of -1.
    """

    field: Field
    braiding: str = "trivial"
    associator: str = "trivial"
    i: object = None

    def __post_init__(self):
        if self.braiding not in _BRAIDINGS:
            raise ValueError(f"unknown braiding flavor {self.braiding!r}")
        if self.associator not in _ASSOCIATORS:
            raise ValueError(f"unknown associator flavor {self.associator!r}")
        if self.braiding != "anyonic":
            if self.i is not None:
                raise ValueError("only the anyonic braiding takes a root of unity")
            return
        if self.associator != "sign":
            raise ValueError("the anyonic braiding requires the sign associator")
        root = self.field.sqrt_minus_one() if self.i is None else self.field(self.i)
        if root is None or root * root != -self.field.one:
            raise MissingRootOfUnity(f"{self.field} has no square root of -1 (given {self.i!r})")
        object.__setattr__(self, "i", root)

    @property
    def symmetric(self) -> bool:
        return self.braiding != "anyonic"

    @property
    def strict(self) -> bool:
        return self.associator == "trivial"

    def phase(self, dx: int, dy: int):
        if not (dx and dy) or self.braiding == "trivial":
            return self.field.one
        return -self.field.one if self.braiding == "super" else self.i

    def identity(self, X: GradedObject) -> ExactMorphism:
        return ExactMorphism.identity(X, self.field)

    def zero(self, X: GradedObject, Y: GradedObject) -> ExactMorphism:
        return ExactMorphism.zero(X, Y, self.field)

    def morphism(self, source, target, rows) -> ExactMorphism:
        return ExactMorphism.from_rows(source, target, rows, self.field)

    def descriptor(self) -> dict:
        out = {"braiding": self.braiding, "associator": self.associator}
        if self.braiding == "anyonic":
            out["i"] = self.field.format(self.i)
        return out


def braiding(ctx: CategoryContext, X: GradedObject, Y: GradedObject) -> ExactMorphism:
    """``c_{X,Y}: X⊗Y → Y⊗X``, ``(x, y) ↦ phase·(y, x)``."""
    nx, ny = X.dim, Y.dim
    entries = {
        (y * nx + x, x * ny + y): ctx.phase(dx, dy)
        for x, dx in enumerate(X.degrees)
        for y, dy in enumerate(Y.degrees)
    }
    return ExactMorphism(X.tensor(Y), Y.tensor(X), Matrix.from_entries(entries, (nx * ny, nx * ny), ctx.field))


def associator(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    """``a_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z)``; diagonal with sign ``(-1)^{|x||y||z|}`` in the sign flavor."""
    XYZ = _tensor_objects(X, Y, Z)
    if ctx.strict:
        return ctx.identity(XYZ)
    one = ctx.field.one
    entries = {}
    k = 0
    for dx in X.degrees:
        for dy in Y.degrees:
            for dz in Z.degrees:
                entries[(k, k)] = -one if dx and dy and dz else one
                k += 1
    return ExactMorphism(XYZ, XYZ, Matrix.from_entries(entries, (k, k), ctx.field))


def associator_inv(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    # both flavors are involutions
    return associator(ctx, X, Y, Z)


def hom_object(ctx: CategoryContext, X: GradedObject, Z: GradedObject) -> GradedObject:
    return GradedObject(tuple((dz + dx) % 2 for dz in Z.degrees for dx in X.degrees))


right_hom_object = hom_object


def counit_eps(ctx: CategoryContext, X: GradedObject, Z: GradedObject) -> ExactMorphism:
    """``ε^X_Z: H(X,Z)⊗X → Z``, ``E_{z,x} ⊗ x' ↦ δ_{x,x'} z``."""
    nx, nz = X.dim, Z.dim
    entries = {(z, (z * nx + x) * nx + x): 1 for z in range(nz) for x in range(nx)}
    H = hom_object(ctx, X, Z)
    return ExactMorphism(H.tensor(X), Z, Matrix.from_entries(entries, (nz, nz * nx * nx), ctx.field))


def unit_eta(ctx: CategoryContext, X: GradedObject, Y: GradedObject) -> ExactMorphism:
    """``η^X_Y: Y → H(X, Y⊗X)``, ``y ↦ Σ_x E_{(y,x),x}``."""
    nx, ny = X.dim, Y.dim
    entries = {((y * nx + x) * nx + x, y): 1 for y in range(ny) for x in range(nx)}
    H = hom_object(ctx, X, Y.tensor(X))
    return ExactMorphism(Y, H, Matrix.from_entries(entries, (H.dim, ny), ctx.field))


def right_counit_eps(ctx: CategoryContext, X: GradedObject, Z: GradedObject) -> ExactMorphism:
    """``ε'^X_Z: X⊗H'(X,Z) → Z``, ``x' ⊗ E_{z,x} ↦ δ_{x,x'} z``."""
    nx, nz = X.dim, Z.dim
    n = nz * nx
    entries = {(z, x * n + z * nx + x): 1 for z in range(nz) for x in range(nx)}
    H = right_hom_object(ctx, X, Z)
    return ExactMorphism(X.tensor(H), Z, Matrix.from_entries(entries, (nz, nx * n), ctx.field))


def right_unit_eta(ctx: CategoryContext, X: GradedObject, Y: GradedObject) -> ExactMorphism:
    """``η'^X_Y: Y → H'(X, X⊗Y)``, ``y ↦ Σ_x E_{(x,y),x}``."""
    nx, ny = X.dim, Y.dim
    entries = {((x * ny + y) * nx + x, y): 1 for y in range(ny) for x in range(nx)}
    H = right_hom_object(ctx, X, X.tensor(Y))
    return ExactMorphism(Y, H, Matrix.from_entries(entries, (H.dim, ny), ctx.field))


def hom_map(ctx: CategoryContext, X: GradedObject, g: ExactMorphism) -> ExactMorphism:
    """``H(X, g): H(X, Z) → H(X, Z')`` (postcomposition)."""
    return ExactMorphism(
        hom_object(ctx, X, g.source),
        hom_object(ctx, X, g.target),
        kron(g.matrix, Matrix.identity(X.dim, ctx.field)),
    )


def hom_contra(ctx: CategoryContext, f: ExactMorphism, Z: GradedObject) -> ExactMorphism:
    """``H(f, Z): H(X', Z) → H(X, Z)`` for ``f: X → X'`` (precomposition)."""
    return ExactMorphism(
        hom_object(ctx, f.target, Z),
        hom_object(ctx, f.source, Z),
        kron(Matrix.identity(Z.dim, ctx.field), f.matrix.T),
    )


def _left_factor(S: GradedObject, X: GradedObject, Y: GradedObject | None) -> GradedObject:
    if Y is None:
        if X.dim == 0 or S.dim % X.dim:
            raise ShapeError(f"cannot split an object of dim {S.dim} as Y⊗X with dim X = {X.dim}")
        Y = GradedObject(tuple((S.degrees[y * X.dim] + X.degrees[0]) % 2 for y in range(S.dim // X.dim)))
    if Y.tensor(X) != S:
        raise ShapeError(f"{S} is not of the form Y⊗X for X = {X}")
    return Y


def curry(ctx: CategoryContext, f: ExactMorphism, X: GradedObject, Y: GradedObject | None = None) -> ExactMorphism:
    """Transpose ``f: Y⊗X → Z`` into ``Y → H(X, Z)``.

    ``curry(f)[(z, x)][y] = f[z][(y, x)]``. ``Y`` is recovered from the
    source degrees when omitted.
    """
    Y = _left_factor(f.source, X, Y)
    nx, ny, nz = X.dim, Y.dim, f.target.dim
    entries = {}
    for z, yx, v in f.matrix.items():
        y, x = divmod(yx, nx)
        entries[(z * nx + x, y)] = v
    H = hom_object(ctx, X, f.target)
    return ExactMorphism(Y, H, Matrix.from_entries(entries, (nz * nx, ny), ctx.field))


def uncurry(ctx: CategoryContext, g: ExactMorphism, X: GradedObject, Z: GradedObject) -> ExactMorphism:
    """Inverse of :func:`curry`: ``ε^X_Z ∘ (g ⊗ X)``."""
    if g.target != hom_object(ctx, X, Z):
        raise ShapeError(f"target {g.target} is not H(X, Z) for X={X}, Z={Z}")
    return counit_eps(ctx, X, Z) @ tensor(g, X)


def pi_internal(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    """Internal currying ``H(Y⊗X, Z) → H(Y, H(X, Z))``, a permutation.

    ``E_{z,(y,x)} ↦ E_{(z,x),y}``.
    """
    nx, ny, nz = X.dim, Y.dim, Z.dim
    entries = {
        ((z * nx + x) * ny + y, z * ny * nx + y * nx + x): 1
        for z in range(nz)
        for y in range(ny)
        for x in range(nx)
    }
    n = nx * ny * nz
    return ExactMorphism(
        hom_object(ctx, Y.tensor(X), Z),
        hom_object(ctx, Y, hom_object(ctx, X, Z)),
        Matrix.from_entries(entries, (n, n), ctx.field),
    )


def pi_inverse(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    p = pi_internal(ctx, X, Y, Z)
    return ExactMorphism(p.target, p.source, p.matrix.T)


def pi_from_adjunction(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    """Internal currying assembled from units and counits (strict bracketing)."""
    W = hom_object(ctx, Y.tensor(X), Z)
    return (
        hom_map(ctx, Y, hom_map(ctx, X, counit_eps(ctx, Y.tensor(X), Z)))
        @ hom_map(ctx, Y, unit_eta(ctx, X, W.tensor(Y)))
        @ unit_eta(ctx, Y, W)
    )


def pi_inverse_from_adjunction(ctx: CategoryContext, X, Y, Z) -> ExactMorphism:
    V = hom_object(ctx, Y, hom_object(ctx, X, Z))
    YX = Y.tensor(X)
    return (
        hom_map(ctx, YX, counit_eps(ctx, X, Z))
        @ hom_map(ctx, YX, tensor(counit_eps(ctx, Y, hom_object(ctx, X, Z)), X))
        @ unit_eta(ctx, YX, V)
    )

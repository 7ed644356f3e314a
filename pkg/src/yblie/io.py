"""JSON structure files and check reports.

Matrices are stored dense and row-major, one list of scalar strings per row.
A row or column of a tensor product ``X⊗Y`` with basis pair ``(i, j)`` sits at
flat index ``i·dim(Y) + j``; every shape in a file is read under that rule.
Output is canonical: fixed key order, fixed indentation, one matrix row per
line, so identical structures serialize to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .braided import AlgebraModule, BraidedBialgebra, CoalgebraComodule, YBAlgebra, YBCoalgebra
from .duality import MichaelisPair, StrongPairWitness, TakeuchiPair, gram_matrix
from .errors import ParseError, ShapeError, YBLieError
from .lie import LieComodule, LieHomSpace, LieModule, YBLieAlgebra, YBLieCoalgebra, YBOperator
from .linalg import Field, Matrix
from .monoidal import UNIT, CategoryContext, ExactMorphism, GradedObject, hom_object
from .report import CheckReport

__all__ = [
    "FORMAT_VERSION",
    "INDEX_CONVENTION",
    "StrongMichaelisPair",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "read_structure",
    "write_structure",
    "report_document",
    "dumps_report",
    "digest",
]

FORMAT_VERSION = 1
INDEX_CONVENTION = "row-major; tensor basis pair (i, j) has flat index i*dim2 + j"
TOOL = "yblie"
TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class StrongMichaelisPair:
    """A Michaelis pair stored together with its ``coev``."""

    pair: MichaelisPair
    witness: StrongPairWitness


# ----------------------------------------------------------------- writing


def _degrees(X: GradedObject) -> list[int]:
    return list(X.degrees)


def _rows(f: ExactMorphism) -> list[list[str]]:
    fmt = f.field.format
    return [[fmt(v) for v in row] for row in f.matrix.to_rows()]


def _body(kind: str, objects: dict, morphisms: dict, **extra) -> dict:
    out = {"kind": kind}
    out.update(extra)
    out["objects"] = {k: _degrees(v) for k, v in objects.items()}
    out["morphisms"] = {k: _rows(v) for k, v in morphisms.items() if v is not None}
    return out


def _encode(s) -> dict:
    if isinstance(s, YBOperator):
        return _body("yb_operator", {"X": s.obj}, {"c": s.c})
    if isinstance(s, YBLieAlgebra):
        return _body("yb_lie_algebra", {"L": s.obj}, {"yb": s.yb, "bracket": s.bracket})
    if isinstance(s, YBLieCoalgebra):
        return _body("yb_lie_coalgebra", {"C": s.obj}, {"yb": s.yb, "cobracket": s.cobracket})
    if isinstance(s, BraidedBialgebra):
        return _body(
            "braided_bialgebra",
            {"H": s.obj},
            {"mul": s.mul, "unit": s.unit, "comul": s.comul, "counit": s.counit, "yb": s.yb},
        )
    if isinstance(s, YBAlgebra):
        return _body("yb_algebra", {"B": s.obj}, {"mul": s.mul, "yb": s.yb, "unit": s.unit})
    if isinstance(s, YBCoalgebra):
        return _body("yb_coalgebra", {"C": s.obj}, {"comul": s.comul, "yb": s.yb, "counit": s.counit})
    if isinstance(s, LieModule):
        return _body("lie_module", {"X": s.carrier}, {"action": s.action}, side=s.side, algebra=_encode(s.algebra))
    if isinstance(s, LieComodule):
        return _body(
            "lie_comodule", {"X": s.carrier}, {"coaction": s.coaction}, side=s.side, coalgebra=_encode(s.coalgebra)
        )
    if isinstance(s, AlgebraModule):
        return _body("algebra_module", {"M": s.carrier}, {"action": s.action}, side=s.side, algebra=_encode(s.algebra))
    if isinstance(s, CoalgebraComodule):
        return _body(
            "coalgebra_comodule",
            {"M": s.carrier},
            {"coaction": s.coaction},
            side=s.side,
            coalgebra=_encode(s.coalgebra),
        )
    if isinstance(s, StrongMichaelisPair):
        body = _encode(s.pair)
        body["morphisms"]["coev"] = _rows(s.witness.coev)
        return body
    if isinstance(s, MichaelisPair):
        return _body("michaelis_pair", {}, {"ev": s.ev}, algebra=_encode(s.L), coalgebra=_encode(s.C))
    if isinstance(s, TakeuchiPair):
        return _body("takeuchi_pair", {}, {"pairing": s.pairing}, H=_encode(s.H), K=_encode(s.K))
    if isinstance(s, LieHomSpace):
        return _body(
            "lie_hom_space",
            {"LH": s.obj},
            {"inclusion": s.inclusion},
            source=_encode(s.source),
            target=_encode(s.target),
        )
    raise TypeError(f"cannot serialize {type(s).__name__}")


def _context_of(s) -> CategoryContext:
    for attr in ("ctx", "pair", "algebra", "coalgebra", "source"):
        if hasattr(s, attr):
            v = getattr(s, attr)
            return v if isinstance(v, CategoryContext) else _context_of(v)
    raise TypeError(f"{type(s).__name__} carries no context")


def to_document(s) -> dict:
    ctx = _context_of(s)
    doc = {
        "format_version": FORMAT_VERSION,
        "index_convention": INDEX_CONVENTION,
        "field": ctx.field.descriptor(),
        "context": ctx.descriptor(),
    }
    doc.update(_encode(s))
    return doc


_FLAT_LIST = re.compile(r"\[\s*((?:-?\d+|\"[^\"\n]*\")(?:,\s*(?:-?\d+|\"[^\"\n]*\"))*)\s*\]")


def _canonical_json(doc: dict) -> str:
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    # flatten innermost lists of scalars onto one line
    text = _FLAT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def dumps(s) -> str:
    return _canonical_json(to_document(s))


def write_structure(s, path) -> None:
    Path(path).write_text(dumps(s), encoding="utf-8")


# ----------------------------------------------------------------- reading


class _Reader:
    def __init__(self, ctx: CategoryContext, where: str):
        self.ctx = ctx
        self.where = where

    def sub(self, doc: dict, key: str) -> tuple[dict, "_Reader"]:
        return _get(doc, key, dict, self.where), _Reader(self.ctx, f"{self.where}.{key}")

    def obj(self, doc: dict, name: str) -> GradedObject:
        objects = _get(doc, "objects", dict, self.where)
        degrees = _get(objects, name, list, f"{self.where}.objects")
        if any(not isinstance(d, int) or isinstance(d, bool) or d not in (0, 1) for d in degrees):
            raise ParseError("degrees must be 0 or 1", f"{self.where}.objects.{name}")
        return GradedObject(tuple(degrees))

    def mor(self, doc: dict, name: str, source: GradedObject, target: GradedObject, optional=False):
        morphisms = _get(doc, "morphisms", dict, self.where)
        where = f"{self.where}.morphisms.{name}"
        if name not in morphisms:
            if optional:
                return None
            raise ParseError("missing morphism", where)
        rows = morphisms[name]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ParseError("a matrix is a list of rows", where)
        if len(rows) != target.dim:
            raise ShapeError(f"{where}: {len(rows)} rows, expected {target.dim} (target {_degrees(target)})")
        for i, r in enumerate(rows):
            if len(r) != source.dim:
                raise ShapeError(f"{where}[{i}]: {len(r)} entries, expected {source.dim} (source {_degrees(source)})")
        field = self.ctx.field
        parsed = []
        for i, r in enumerate(rows):
            out = []
            for j, v in enumerate(r):
                if isinstance(v, bool) or not isinstance(v, (str, int)):
                    raise ParseError("scalars are strings", f"{where}[{i}][{j}]")
                try:
                    out.append(field(v))
                except (YBLieError, ValueError, TypeError, ZeroDivisionError) as exc:
                    raise ParseError(f"not a scalar of {field}: {v!r} ({exc})", f"{where}[{i}][{j}]") from None
            parsed.append(out)
        try:
            return ExactMorphism(source, target, Matrix.from_rows(parsed, field, cols=source.dim))
        except ShapeError as exc:
            raise ShapeError(f"{where}: {exc}") from None


def _get(doc: dict, key: str, typ, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"missing key {key!r}", where)
    v = doc[key]
    if not isinstance(v, typ):
        raise ParseError(f"{key!r} must be a {typ.__name__}", where)
    return v


def _side(doc: dict, where: str, default: str) -> str:
    side = doc.get("side", default)
    if side not in ("left", "right"):
        raise ParseError(f"side must be 'left' or 'right', got {side!r}", where)
    return side


def _decode(doc: dict, r: _Reader):
    kind = _get(doc, "kind", str, r.where)
    ctx = r.ctx
    if kind == "yb_operator":
        X = r.obj(doc, "X")
        return YBOperator(ctx, X, r.mor(doc, "c", X @ X, X @ X))
    if kind == "yb_lie_algebra":
        L = r.obj(doc, "L")
        return YBLieAlgebra(ctx, L, r.mor(doc, "yb", L @ L, L @ L), r.mor(doc, "bracket", L @ L, L))
    if kind == "yb_lie_coalgebra":
        C = r.obj(doc, "C")
        return YBLieCoalgebra(ctx, C, r.mor(doc, "yb", C @ C, C @ C), r.mor(doc, "cobracket", C, C @ C))
    if kind == "yb_algebra":
        B = r.obj(doc, "B")
        return YBAlgebra(
            ctx, B, r.mor(doc, "mul", B @ B, B), r.mor(doc, "yb", B @ B, B @ B), r.mor(doc, "unit", UNIT, B, True)
        )
    if kind == "yb_coalgebra":
        C = r.obj(doc, "C")
        return YBCoalgebra(
            ctx, C, r.mor(doc, "comul", C, C @ C), r.mor(doc, "yb", C @ C, C @ C), r.mor(doc, "counit", C, UNIT, True)
        )
    if kind == "braided_bialgebra":
        H = r.obj(doc, "H")
        return BraidedBialgebra(
            ctx,
            H,
            r.mor(doc, "mul", H @ H, H),
            r.mor(doc, "unit", UNIT, H),
            r.mor(doc, "comul", H, H @ H),
            r.mor(doc, "counit", H, UNIT),
            r.mor(doc, "yb", H @ H, H @ H),
        )
    if kind in ("lie_module", "algebra_module"):
        sub, sr = r.sub(doc, "algebra")
        A = _decode_kind(sub, sr, "yb_lie_algebra" if kind == "lie_module" else "yb_algebra")
        name = "X" if kind == "lie_module" else "M"
        X = r.obj(doc, name)
        side = _side(doc, r.where, "right")
        src = X @ A.obj if side == "right" else A.obj @ X
        cls = LieModule if kind == "lie_module" else AlgebraModule
        return cls(A, X, r.mor(doc, "action", src, X), side)
    if kind in ("lie_comodule", "coalgebra_comodule"):
        sub, sr = r.sub(doc, "coalgebra")
        C = _decode_kind(sub, sr, "yb_lie_coalgebra" if kind == "lie_comodule" else "yb_coalgebra")
        name = "X" if kind == "lie_comodule" else "M"
        X = r.obj(doc, name)
        side = _side(doc, r.where, "right" if kind == "lie_comodule" else "left")
        tgt = X @ C.obj if side == "right" else C.obj @ X
        cls = LieComodule if kind == "lie_comodule" else CoalgebraComodule
        return cls(C, X, r.mor(doc, "coaction", X, tgt), side)
    if kind == "michaelis_pair":
        a, ar = r.sub(doc, "algebra")
        c, cr = r.sub(doc, "coalgebra")
        L, C = _decode_kind(a, ar, "yb_lie_algebra"), _decode_kind(c, cr, "yb_lie_coalgebra")
        pair = MichaelisPair(L, C, r.mor(doc, "ev", L.obj @ C.obj, UNIT))
        coev = r.mor(doc, "coev", UNIT, C.obj @ L.obj, optional=True)
        if coev is None:
            return pair
        return StrongMichaelisPair(pair, StrongPairWitness(coev, gram_matrix(pair)))
    if kind == "takeuchi_pair":
        h, hr = r.sub(doc, "H")
        k, kr = r.sub(doc, "K")
        H, K = _decode_kind(h, hr, "braided_bialgebra"), _decode_kind(k, kr, "braided_bialgebra")
        return TakeuchiPair(H, K, r.mor(doc, "pairing", H.obj @ K.obj, UNIT))
    if kind == "lie_hom_space":
        s, sr = r.sub(doc, "source")
        t, tr = r.sub(doc, "target")
        m, n = _decode_kind(s, sr, "lie_module"), _decode_kind(t, tr, "lie_module")
        LH = r.obj(doc, "LH")
        H = hom_object(ctx, m.carrier, n.carrier)
        return LieHomSpace(m, n, LH, r.mor(doc, "inclusion", LH, H))
    raise ParseError(f"unknown kind {kind!r}", r.where)


def _decode_kind(doc: dict, r: _Reader, expected: str):
    kind = _get(doc, "kind", str, r.where)
    if kind != expected:
        raise ParseError(f"expected kind {expected!r}, got {kind!r}", r.where)
    return _decode(doc, r)


def from_document(doc) -> object:
    if not isinstance(doc, dict):
        raise ParseError("a structure file is a JSON object", "$")
    version = _get(doc, "format_version", int, "$")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version}", "format_version")
    if doc.get("index_convention", INDEX_CONVENTION) != INDEX_CONVENTION:
        raise ParseError("unknown index convention", "index_convention")
    field = Field.from_descriptor(doc.get("field"))
    context = _get(doc, "context", dict, "$")
    i = context.get("i")
    try:
        ctx = CategoryContext(
            field,
            context.get("braiding", "trivial"),
            context.get("associator", "trivial"),
            None if i is None else field.parse(str(i)),
        )
    except ValueError as exc:
        raise ParseError(str(exc), "context") from None
    return _decode(doc, _Reader(ctx, "$"))


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def read_structure(path):
    return loads(Path(path).read_text(encoding="utf-8"))


# ----------------------------------------------------------------- reports


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


def report_document(report: CheckReport, input_digest: str | None = None) -> dict:
    doc = {"tool": TOOL, "version": TOOL_VERSION}
    if input_digest is not None:
        doc["input_digest"] = input_digest
    doc.update(report.to_dict())
    return doc


def dumps_report(report: CheckReport, input_digest: str | None = None) -> str:
    return json.dumps(report_document(report, input_digest), indent=2, ensure_ascii=False) + "\n"

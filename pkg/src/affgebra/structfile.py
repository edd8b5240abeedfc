"""JSON structure files: ``{"field", "kind", "dim", "payload"}``.

Rational scalars are written as strings (``"3/4"``, ``"-2"``); prime-field
scalars as integers in ``0..p-1``.  Serialization is canonical, so a file
that has been through one parse/serialize pass is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
import json
import re

from .affine import AffineMap, BiAffineMap
from .constructions import AffgebraData
from .errors import AffgebraError, DimensionMismatch, FieldError
from .fiber import FiberResult
from .kernel import GF, Q, Matrix, PrimeField, Rationals
from .morphisms import DataHom
from .structures import (LEFT, RIGHT, HomAssocAffgebra, HomAssocAlgebra, HomLieAffgebra,
                         HomLieAlgebra, HomPreLieAffgebra)

__all__ = [
    "KINDS", "StructureFile", "FileSyntaxError", "SchemaError", "parse", "parse_text", "serialize",
    "load", "dump", "wrap", "field_from_descriptor",
]

KINDS = (
    "hom_assoc_affgebra", "hom_lie_affgebra", "hom_prelie_affgebra", "hom_lie_algebra",
    "affgebra_data", "data_hom", "affine_map", "hom_assoc_algebra", "fiber",
)


class FileSyntaxError(AffgebraError, ValueError):
    """Malformed JSON, with the 1-based position of the problem."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class SchemaError(AffgebraError, ValueError):
    """Well-formed JSON that does not describe a valid structure."""

    def __init__(self, path, reason):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


@dataclass(frozen=True)
class StructureFile:
    field: Rationals | PrimeField
    kind: str
    dim: int
    value: object


def field_from_descriptor(desc):
    if desc == "Q":
        return Q
    if isinstance(desc, dict) and set(desc) == {"Fp"}:
        p = desc["Fp"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise SchemaError("field.Fp", "prime must be an integer")
        return GF(p)
    raise SchemaError("field", f'expected "Q" or {{"Fp": p}}, got {json.dumps(desc)}')


# -- reading ------------------------------------------------------------------

class _Reader:
    def __init__(self, field):
        self.F = field

    def scalar(self, x, path):
        F = self.F
        if isinstance(F, Rationals):
            if isinstance(x, bool) or not isinstance(x, (str, int)):
                raise SchemaError(path, f"expected a rational string, got {json.dumps(x)}")
            try:
                return F.parse(x)
            except FieldError as exc:
                raise SchemaError(path, str(exc)) from None
        if isinstance(x, str) and re.fullmatch(r"-?\d+", x.strip()):
            x = int(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchemaError(path, f"expected an integer residue mod {F.p}, got {json.dumps(x)}")
        return F(x)

    def vector(self, x, n, path):
        if not isinstance(x, list):
            raise SchemaError(path, "expected a list")
        if len(x) != n:
            raise SchemaError(path, f"expected length {n}, got {len(x)}")
        return tuple(self.scalar(v, f"{path}[{i}]") for i, v in enumerate(x))

    def matrix(self, x, r, c, path):
        if not isinstance(x, list):
            raise SchemaError(path, "expected a list of rows")
        if len(x) != r:
            raise SchemaError(path, f"expected {r} rows, got {len(x)}")
        rows = [self.vector(row, c, f"{path}[{i}]") for i, row in enumerate(x)]
        return Matrix(rows, self.F, ncols=c)

    def tensor(self, x, n, path):
        if not isinstance(x, list) or len(x) != n:
            raise SchemaError(path, f"expected {n} matrices")
        return [self.matrix(m, n, n, f"{path}[{k}]") for k, m in enumerate(x)]

    def obj(self, x, keys, path, optional=()):
        if not isinstance(x, dict):
            raise SchemaError(path, "expected an object")
        missing = [k for k in keys if k not in x]
        if missing:
            raise SchemaError(f"{path}.{missing[0]}", "missing")
        extra = sorted(set(x) - set(keys) - set(optional))
        if extra:
            raise SchemaError(f"{path}.{extra[0]}", "unexpected key")
        return x

    def affine_map(self, x, n, path, m=None):
        m = n if m is None else m
        self.obj(x, ("M", "t"), path)
        return AffineMap(self.matrix(x["M"], m, n, f"{path}.M"), self.vector(x["t"], m, f"{path}.t"))

    def biaffine(self, x, n, path):
        self.obj(x, ("B", "L1", "L2", "c"), path)
        return BiAffineMap(self.tensor(x["B"], n, f"{path}.B"),
                           self.matrix(x["L1"], n, n, f"{path}.L1"),
                           self.matrix(x["L2"], n, n, f"{path}.L2"),
                           self.vector(x["c"], n, f"{path}.c"))

    def homlie_algebra(self, x, n, path):
        self.obj(x, ("sc", "alpha"), path)
        sc = self.tensor(x["sc"], n, f"{path}.sc")
        return HomLieAlgebra(tuple(tuple(m.rows) for m in sc), self.matrix(x["alpha"], n, n, f"{path}.alpha"))

    def data(self, x, path):
        self.obj(x, ("L", "kappa", "lambda", "r"), path)
        L = x["L"]
        if not isinstance(L, dict) or not isinstance(L.get("sc"), list):
            raise SchemaError(f"{path}.L.sc", "expected a list of matrices")
        n = len(L["sc"])
        alg = self.homlie_algebra(L, n, f"{path}.L")
        return AffgebraData(alg, self.matrix(x["kappa"], n, n, f"{path}.kappa"),
                            self.matrix(x["lambda"], n, n, f"{path}.lambda"),
                            self.vector(x["r"], n, f"{path}.r"))


def _decode(kind, n, payload, rd: _Reader):
    p = "payload"
    if kind == "hom_assoc_affgebra":
        rd.obj(payload, ("mul", "alpha"), p, optional=("plain",))
        return HomAssocAffgebra(rd.biaffine(payload["mul"], n, f"{p}.mul"),
                                rd.affine_map(payload["alpha"], n, f"{p}.alpha"),
                                plain=bool(payload.get("plain", False)))
    if kind == "hom_lie_affgebra":
        rd.obj(payload, ("bracket", "alpha"), p, optional=("plain",))
        return HomLieAffgebra(rd.biaffine(payload["bracket"], n, f"{p}.bracket"),
                              rd.affine_map(payload["alpha"], n, f"{p}.alpha"),
                              plain=bool(payload.get("plain", False)))
    if kind == "hom_prelie_affgebra":
        rd.obj(payload, ("prod", "alpha", "side"), p, optional=("plain",))
        if payload["side"] not in (LEFT, RIGHT):
            raise SchemaError(f"{p}.side", 'expected "left" or "right"')
        return HomPreLieAffgebra(rd.biaffine(payload["prod"], n, f"{p}.prod"),
                                 rd.affine_map(payload["alpha"], n, f"{p}.alpha"),
                                 side=payload["side"], plain=bool(payload.get("plain", False)))
    if kind == "hom_lie_algebra":
        return rd.homlie_algebra(payload, n, p)
    if kind == "hom_assoc_algebra":
        rd.obj(payload, ("sc", "alpha"), p)
        sc = rd.tensor(payload["sc"], n, f"{p}.sc")
        return HomAssocAlgebra(tuple(tuple(m.rows) for m in sc),
                               rd.matrix(payload["alpha"], n, n, f"{p}.alpha"))
    if kind == "affgebra_data":
        d = rd.data(payload, p)
        if d.dim != n:
            raise SchemaError("dim", f"declared {n} but data has dimension {d.dim}")
        return d
    if kind == "data_hom":
        rd.obj(payload, ("psi", "qprime", "source", "target"), p)
        src = rd.data(payload["source"], f"{p}.source")
        tgt = rd.data(payload["target"], f"{p}.target")
        if src.dim != n:
            raise SchemaError("dim", f"declared {n} but source has dimension {src.dim}")
        return DataHom(rd.matrix(payload["psi"], tgt.dim, src.dim, f"{p}.psi"),
                       rd.vector(payload["qprime"], tgt.dim, f"{p}.qprime"), src, tgt)
    if kind == "affine_map":
        return rd.affine_map(payload, n, p)
    if kind == "fiber":
        rd.obj(payload, ("base", "algebra"), p)
        base = rd.vector(payload["base"], n, f"{p}.base")
        alg = rd.homlie_algebra(payload["algebra"], n, f"{p}.algebra")
        return FiberResult(base, alg, None)
    raise SchemaError("kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def parse_text(text: str) -> StructureFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    rd = _Reader(Q)
    rd.obj(raw, ("field", "kind", "dim", "payload"), "$")
    field = field_from_descriptor(raw["field"])
    kind, n = raw["kind"], raw["dim"]
    if kind not in KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError("dim", "expected a non-negative integer")
    rd.F = field
    try:
        value = _decode(kind, n, raw["payload"], rd)
    except DimensionMismatch as exc:
        raise SchemaError("payload", str(exc)) from None
    return StructureFile(field, kind, n, value)


def parse(data: bytes | str) -> StructureFile:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FileSyntaxError("not valid UTF-8", 1, exc.start + 1) from None
    return parse_text(data)


def load(path) -> StructureFile:
    with open(path, "rb") as fh:
        return parse(fh.read())


# -- writing ------------------------------------------------------------------

class _Writer:
    def __init__(self, field):
        self.F = field

    def scalar(self, x):
        F = self.F
        return F.format(x) if isinstance(F, Rationals) else int(F(x))

    def vector(self, v):
        return [self.scalar(x) for x in v]

    def matrix(self, M):
        return [self.vector(r) for r in M.rows]

    def tensor(self, B):
        return [self.matrix(b) if isinstance(b, Matrix) else [self.vector(r) for r in b] for b in B]

    def affine_map(self, f):
        return {"M": self.matrix(f.M), "t": self.vector(f.t)}

    def biaffine(self, m):
        return {"B": self.tensor(m.B), "L1": self.matrix(m.L1), "L2": self.matrix(m.L2),
                "c": self.vector(m.c)}

    def algebra(self, L):
        return {"sc": self.tensor(L.sc), "alpha": self.matrix(L.alpha)}

    def data(self, d):
        return {"L": self.algebra(d.L), "kappa": self.matrix(d.kappa),
                "lambda": self.matrix(d.lam), "r": self.vector(d.r)}


def wrap(value) -> StructureFile:
    """Infer kind, field and dimension of a library object."""
    table = [
        (HomAssocAffgebra, "hom_assoc_affgebra"), (HomLieAffgebra, "hom_lie_affgebra"),
        (HomPreLieAffgebra, "hom_prelie_affgebra"), (HomLieAlgebra, "hom_lie_algebra"),
        (HomAssocAlgebra, "hom_assoc_algebra"), (AffgebraData, "affgebra_data"),
        (DataHom, "data_hom"), (AffineMap, "affine_map"), (FiberResult, "fiber"),
    ]
    for cls, kind in table:
        if isinstance(value, cls):
            break
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    if kind == "data_hom":
        field, dim = value.source.field, value.source.dim
    elif kind == "fiber":
        field, dim = value.algebra.field, value.algebra.dim
    else:
        field, dim = value.field, value.dim
    return StructureFile(field, kind, dim, value)


def _encode(sf: StructureFile):
    w = _Writer(sf.field)
    v, kind = sf.value, sf.kind
    if kind == "hom_assoc_affgebra":
        out = {"mul": w.biaffine(v.mul), "alpha": w.affine_map(v.alpha)}
    elif kind == "hom_lie_affgebra":
        out = {"bracket": w.biaffine(v.bracket), "alpha": w.affine_map(v.alpha)}
    elif kind == "hom_prelie_affgebra":
        out = {"prod": w.biaffine(v.prod), "alpha": w.affine_map(v.alpha), "side": v.side}
    elif kind in ("hom_lie_algebra", "hom_assoc_algebra"):
        out = w.algebra(v)
    elif kind == "affgebra_data":
        out = w.data(v)
    elif kind == "data_hom":
        out = {"psi": w.matrix(v.psi), "qprime": w.vector(v.qprime),
               "source": w.data(v.source), "target": w.data(v.target)}
    elif kind == "affine_map":
        out = w.affine_map(v)
    elif kind == "fiber":
        out = {"base": w.vector(v.base), "algebra": w.algebra(v.algebra)}
    else:
        raise SchemaError("kind", f"unknown kind {kind!r}")
    if kind in ("hom_assoc_affgebra", "hom_lie_affgebra", "hom_prelie_affgebra") and v.plain:
        out["plain"] = True
    return out


def serialize(value) -> str:
    """Canonical JSON text (two-space indent, trailing newline)."""
    sf = value if isinstance(value, StructureFile) else wrap(value)
    doc = {"field": sf.field.descriptor(), "kind": sf.kind, "dim": sf.dim, "payload": _encode(sf)}
    return _compact_json(doc) + "\n"


def _compact_json(doc, indent=0):
    """Indented JSON that keeps numeric rows and short vectors on one line."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_compact_json(v, indent + 1)}" for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(doc, list):
        if all(not isinstance(x, (list, dict)) for x in doc):
            return json.dumps(doc)
        items = [inner + _compact_json(x, indent + 1) for x in doc]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(doc)


def dump(value, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(value))

"""Structured pass/fail results for identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
import hashlib
import json

from .polyring import MultiPoly, find_nonzero_point


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    witness: object = None
    residual_digest: str | None = None
    note: str | None = None
    residual: tuple = field(default=(), compare=False, repr=False)

    def __bool__(self):
        return self.passed

    def report_line(self):
        line = f"{self.name}: {'PASS' if self.passed else 'FAIL'}"
        if self.witness is not None:
            line += f" witness={_fmt(self.witness)}"
        if self.note:
            line += f" ({self.note})"
        return line

    def to_report(self):
        out = {"check": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.residual_digest is not None:
            out["residual_digest"] = self.residual_digest
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _fmt(x):
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_fmt(v) for v in x) + ")"
    if isinstance(x, dict):
        return "{" + ",".join(f"{k}:{_fmt(v)}" for k, v in x.items()) + "}"
    return str(x)


def digest(polys):
    payload = json.dumps([p.serialize() if isinstance(p, MultiPoly) else str(p) for p in polys])
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def polynomial_verdict(name, residuals, dim, blocks, field, labels="abc"):
    """Verdict for "every residual coordinate is the zero polynomial".

    ``residuals`` live in ``dim * blocks`` variables laid out by
    :func:`affgebra.affine.symbolic_args`; a witness is split back into
    named points.
    """
    nvars = dim * blocks
    residuals = tuple(r if isinstance(r, MultiPoly) else MultiPoly.constant(nvars, r, field)
                      for r in residuals)
    bad = [r for r in residuals if not r.is_zero()]
    if not bad:
        return Verdict(name, True)
    point = find_nonzero_point(bad[0])
    note = None
    witness = None
    if point is None:
        note = "symbolically nonzero, no pointwise witness guaranteed"
    else:
        witness = {labels[k]: tuple(point[k * dim:(k + 1) * dim]) for k in range(blocks)}
    return Verdict(name, False, witness=witness, residual_digest=digest(residuals),
                   note=note, residual=residuals)


def boolean_verdict(name, ok, witness=None, note=None):
    return Verdict(name, bool(ok), witness=None if ok else witness, note=None if ok else note)

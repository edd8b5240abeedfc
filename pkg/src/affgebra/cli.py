"""Command-line front end.

Exit codes: 0 when every applicable check passes, 1 when a check fails or
a mathematical precondition is not met, 2 for unusable input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .constructions import build_from_data, data_verdicts, yau_twist_assoc, yau_twist_lie, \
    yau_twist_prelie
from .derivations import (alpha_derivation_space, centroid_space, delta_lambda_space, delta_space,
                          compatible_pair_space, qc_space)
from .errors import AffgebraError, ClosureFailure, EmptyPairSpace, InternalInconsistency, \
    PreconditionFailed
from .fiber import alpha_fixed_points, extract_data, fiber_assoc, fiber_lie
from .fixtures import build_sna, classical_homlie, sample_valid_data, sna_structures, standard_alpha
from .kernel import GF, Q, Matrix
from .morphisms import data_hom_verdicts
from .structfile import StructureFile, field_from_descriptor, load, serialize, wrap
from .structures import (check_affine_antisymmetry, check_affine_hom_jacobi, check_affine_jacobi,
                         check_hom_assoc_algebra, check_hom_associativity, check_hom_prelie,
                         check_multiplicativity, homlie_algebra_verdicts)
from .verdict import Verdict

SPACES = {
    "delta": delta_space, "qc": qc_space, "centroid": centroid_space,
    "alphader": alpha_derivation_space, "pair17": compatible_pair_space, "delta_lambda": delta_lambda_space,
}


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


class _Run:
    def __init__(self, args):
        self.args = args
        self.lines = []
        self.checks = []
        self.info = {}

    def verdict(self, v: Verdict, informational=False):
        line = v.report_line()
        if informational:
            line += " [informational]"
        self.lines.append(line)
        rep = v.to_report()
        if informational:
            rep["informational"] = True
        self.checks.append(rep)
        return v.passed or informational

    def say(self, text):
        self.lines.append(text)


# -- inputs -------------------------------------------------------------------

def _field(args):
    if args.field is None:
        return None
    text = args.field.strip()
    if text.upper() == "Q":
        return Q
    m = re.fullmatch(r"(?:F|GF|Fp)\(?(\d+)\)?", text, re.IGNORECASE)
    if m:
        return GF(int(m.group(1)))
    try:
        return field_from_descriptor(json.loads(text))
    except (json.JSONDecodeError, AffgebraError):
        raise InputError(f"unrecognised field {args.field!r} (use Q, F5, or {{\"Fp\": 5}})") from None


def _alpha(text, name, n, F):
    if text in (None, "id"):
        return None
    if text == "std":
        return standard_alpha(name, n, F)
    try:
        rows = json.loads(text)
        return Matrix([[F.parse(x) if isinstance(x, str) else F(x) for x in r] for r in rows], F)
    except (json.JSONDecodeError, TypeError, ValueError, AffgebraError):
        raise InputError(f"--alpha must be 'id', 'std' or a JSON matrix, got {text!r}") from None


def _fixture(args, F):
    name = args.fixture
    F = F or Q
    m = re.fullmatch(r"sna(\d+)(-hom)?", name)
    if m:
        bundle = sna_structures(build_sna(int(m.group(1)), field=F), strict=False)
        s = bundle.hom_lie if m.group(2) else bundle.lie
        if s is None:
            key = "hom_lie" if m.group(2) else "lie"
            raise bundle.failures.get(key) or ClosureFailure(f"{name} is unavailable")
        return wrap(s)
    m = re.fullmatch(r"abelian(\d+)", name)
    base, n = ("abelian", int(m.group(1))) if m else (name, None)
    if base not in ("abelian", "aff1", "heisenberg3", "sl2"):
        raise InputError(f"unknown fixture {name!r}")
    L = classical_homlie(base, _alpha(args.alpha, base, n, F), n=n, field=F)
    return wrap(L)


def _input(args) -> StructureFile:
    F = _field(args)
    if getattr(args, "fixture", None):
        if getattr(args, "file", None):
            raise InputError("give either a file or --fixture, not both")
        return _fixture(args, F)
    if not getattr(args, "file", None):
        raise InputError("an input file or --fixture is required")
    sf = load(args.file)
    if F is not None and sf.field != F:
        raise InputError(f"file is over {sf.field.descriptor()} but --field says {F.descriptor()}")
    return sf


def _point(text, sf: StructureFile, alpha):
    if text in (None, "auto"):
        fp = alpha_fixed_points(alpha)
        if fp.empty:
            raise PreconditionFailed("alpha has no fixed point (alpha_fixed_points is empty)")
        return fp.particular
    try:
        parts = json.loads(text) if text.strip().startswith("[") else text.split(",")
    except json.JSONDecodeError:
        raise InputError(f"bad point {text!r}") from None
    if not isinstance(parts, list) or len(parts) != sf.dim:
        raise InputError(f"--at needs {sf.dim} coordinates")
    try:
        return tuple(sf.field.parse(p.strip() if isinstance(p, str) else p) for p in parts)
    except AffgebraError:
        raise InputError(f"bad point {text!r}") from None


def _require(sf, *kinds):
    if sf.kind not in kinds:
        raise InputError(f"expected a file of kind {' or '.join(kinds)}, got {sf.kind}")


def _emit(run: _Run, value, out):
    text = serialize(value)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        run.say(f"wrote {wrap(value).kind} to {out}")
    else:
        run.info["output"] = text


# -- commands -----------------------------------------------------------------

def cmd_check(run: _Run, args):
    sf = _input(args)
    v, ok = sf.value, True
    if sf.kind == "hom_lie_affgebra":
        ok &= run.verdict(check_affine_antisymmetry(v))
        ok &= run.verdict(check_affine_hom_jacobi(v))
        if v.alpha.is_identity():
            ok &= run.verdict(check_affine_jacobi(v))
        run.verdict(check_multiplicativity(v.bracket, v.alpha), informational=True)
    elif sf.kind == "hom_assoc_affgebra":
        ok &= run.verdict(check_hom_associativity(v))
        run.verdict(check_multiplicativity(v.mul, v.alpha), informational=True)
    elif sf.kind == "hom_prelie_affgebra":
        ok &= run.verdict(check_hom_prelie(v))
        run.verdict(check_multiplicativity(v.prod, v.alpha), informational=True)
    elif sf.kind == "hom_lie_algebra":
        for x in homlie_algebra_verdicts(v):
            ok &= run.verdict(x)
        run.verdict(check_multiplicativity(v.op, v.alpha_map), informational=True)
    elif sf.kind == "hom_assoc_algebra":
        ok &= run.verdict(check_hom_assoc_algebra(v))
    elif sf.kind == "affgebra_data":
        for x in homlie_algebra_verdicts(v.L):
            ok &= run.verdict(x)
        for x in data_verdicts(v):
            ok &= run.verdict(x)
    elif sf.kind == "data_hom":
        for x in data_hom_verdicts(v):
            ok &= run.verdict(x)
    else:
        raise InputError(f"nothing to check for kind {sf.kind}")
    return 0 if ok else 1


def cmd_build(run, args):
    sf = _input(args)
    _require(sf, "affgebra_data")
    _emit(run, build_from_data(sf.value), args.output)
    return 0


def cmd_fiber(run, args):
    sf = _input(args)
    _require(sf, "hom_lie_affgebra", "hom_assoc_affgebra")
    o = _point(args.at, sf, sf.value.alpha)
    res = fiber_lie(sf.value, o) if sf.kind == "hom_lie_affgebra" else fiber_assoc(sf.value, o)
    run.say("base: (" + ",".join(str(sf.field.format(x)) for x in res.base) + ")")
    ok = run.verdict(Verdict("fiber_axioms", res.verdict.passed, witness=res.verdict.witness,
                             note=res.verdict.note))
    _emit(run, res if sf.kind == "hom_lie_affgebra" else res.algebra, args.output)
    return 0 if ok else 1


def cmd_extract(run, args):
    sf = _input(args)
    _require(sf, "hom_lie_affgebra")
    o = _point(args.at, sf, sf.value.alpha)
    _emit(run, extract_data(sf.value, o), args.output)
    return 0


def cmd_twist(run, args):
    sf = _input(args)
    _require(sf, "hom_lie_affgebra", "hom_assoc_affgebra", "hom_prelie_affgebra")
    af = load(args.alpha_file)
    _require(af, "affine_map")
    if af.field != sf.field or af.dim != sf.dim:
        raise InputError("twisting map must have the same field and dimension as the structure")
    twist = {"hom_lie_affgebra": yau_twist_lie, "hom_assoc_affgebra": yau_twist_assoc,
             "hom_prelie_affgebra": yau_twist_prelie}[sf.kind]
    _emit(run, twist(sf.value, af.value), args.output)
    return 0


def cmd_derive(run, args):
    sf = _input(args)
    _require(sf, "hom_lie_algebra")
    space = SPACES[args.space](sf.value)
    run.say(f"space: {args.space}")
    run.say(f"dim: {space.dim}")
    run.info["dim"] = space.dim
    if args.basis:
        F = sf.field
        for idx, mats in enumerate(space.basis_matrices()):
            text = "; ".join(json.dumps([[F.format(x) for x in r] for r in M.rows]) for M in mats)
            run.say(f"basis[{idx}]: {text}")
    return 0


def cmd_homcheck(run, args):
    sf = _input(args)
    _require(sf, "data_hom")
    ok = True
    for v in data_hom_verdicts(sf.value):
        ok &= run.verdict(v)
    return 0 if ok else 1


def cmd_roundtrip(run, args):
    sf = _input(args)
    if sf.kind == "hom_lie_algebra":
        d = sample_valid_data(sf.value, args.seed)
    else:
        _require(sf, "affgebra_data", "hom_lie_algebra")
        d = sf.value
    n, F = d.dim, d.field
    back = extract_data(build_from_data(d), tuple(F.zero for _ in range(n)))
    ok = run.verdict(Verdict("roundtrip", back == d))
    return 0 if ok else 1


COMMANDS = {
    "check": cmd_check, "build": cmd_build, "fiber": cmd_fiber, "extract": cmd_extract,
    "twist": cmd_twist, "derive": cmd_derive, "homcheck": cmd_homcheck, "roundtrip": cmd_roundtrip,
}


def make_parser():
    parser = argparse.ArgumentParser(
        prog="affgebra", description="Exact checks and constructions for Hom-Lie affgebras.")
    parser.add_argument("--field", help="Q, Fp (e.g. F5) or a JSON descriptor")
    parser.add_argument("--json-report", metavar="PATH", help="also write the report as JSON")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled data (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p):
        p.add_argument("file", nargs="?", help="structure file")
        p.add_argument("--fixture", help="built-in structure: abelianN, aff1, heisenberg3, sl2, snaN, snaN-hom")
        p.add_argument("--alpha", help="twisting map for a fixture: id, std, or a JSON matrix")

    p = sub.add_parser("check", help="verify every applicable axiom")
    source(p)
    p = sub.add_parser("build", help="affgebra data -> Hom-Lie affgebra")
    source(p)
    p.add_argument("-o", "--output")
    for name, helptext in (("fiber", "fibre Hom-algebra at a fixed point"),
                           ("extract", "extract (L; alpha, kappa, lambda, r) at a fixed point")):
        p = sub.add_parser(name, help=helptext)
        source(p)
        p.add_argument("--at", default="auto", help="comma-separated point or 'auto'")
        p.add_argument("-o", "--output")
    p = sub.add_parser("twist", help="Yau twist by an affine map")
    p.add_argument("file")
    p.add_argument("alpha_file", help="file of kind affine_map")
    p.add_argument("-o", "--output")
    p = sub.add_parser("derive", help="generalized-derivation solution spaces")
    source(p)
    p.add_argument("--space", required=True, choices=sorted(SPACES))
    p.add_argument("--basis", action="store_true", help="also print a basis")
    p = sub.add_parser("homcheck", help="check a data homomorphism condition by condition")
    source(p)
    p = sub.add_parser("roundtrip", help="extract(build(d), 0) == d")
    source(p)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    run = _Run(args)
    try:
        code = COMMANDS[args.command](run, args)
    except InputError as exc:
        code, run.info["error"] = 2, str(exc)
    except (PreconditionFailed, ClosureFailure, EmptyPairSpace, InternalInconsistency) as exc:
        code, run.info["error"] = 1, f"{type(exc).__name__}: {exc}"
    except (AffgebraError, OSError) as exc:
        code, run.info["error"] = 2, f"{type(exc).__name__}: {exc}"
    if "output" in run.info:
        stdout.write(run.info.pop("output"))
        for line in run.lines:
            print(line, file=stderr)
    else:
        for line in run.lines:
            print(line, file=stdout)
    if "error" in run.info:
        print(f"error: {run.info['error']}", file=stderr)
    if args.json_report:
        report = {"command": args.command, "exit_code": code, "checks": run.checks,
                  "lines": run.lines}
        report.update({k: v for k, v in run.info.items() if k != "output"})
        with open(args.json_report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

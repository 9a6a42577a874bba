"""``octomod`` command line: one subcommand per library operation, JSON in and out.

Exit codes: 0 success, 1 domain error, 2 usage error.  Errors are written
to stdout as ``{"error": <class name>, "message": ...}``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bimodule, cyclic, modules, octonion, solver
from . import serialize as ser
from .errors import OctomodError
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _load(value):
    """Inline JSON, or ``@path`` to read it from a file."""
    if isinstance(value, str):
        text = Path(value[1:]).read_text() if value.startswith("@") else value
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON: {exc}") from None
    return value


def _need(args, name):
    value = getattr(args, name, None)
    if value is None or value == []:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _octs(args, count):
    raw = getattr(args, "oct", None) or []
    if len(raw) != count:
        raise UsageError(f"expected {count} --oct argument(s), got {len(raw)}")
    return [ser.octonion_from_json(_load(v)) for v in raw]


def _element(args):
    return ser.element_from_json(_load(_need(args, "element")))


def _sig(args, name="sig"):
    return ser.signature_from_json(_load_sig(_need(args, name)))


def _load_sig(value):
    if isinstance(value, str) and not value.lstrip().startswith(("[", "{", "@")):
        return value
    return _load(value)


def _oct_out(a):
    return ser.octonion_to_json(a)


def cmd_mul(a):
    x, y = _octs(a, 2)
    return _oct_out(x * y)


def cmd_conj(a):
    (x,) = _octs(a, 1)
    return _oct_out(octonion.conj(x))


def cmd_inverse(a):
    (x,) = _octs(a, 1)
    return _oct_out(octonion.inverse(x))


def cmd_associator(a):
    x, y, z = _octs(a, 3)
    return _oct_out(octonion.associator(x, y, z))


def cmd_cross(a):
    x, y = _octs(a, 2)
    return _oct_out(octonion.cross(x, y))


def cmd_assoc_subspace(a):
    x, y = _octs(a, 2)
    return ser.subspace_to_json(octonion.assoc_subspace(x, y))


def cmd_verify_identities(a):
    return {k: v["status"] for k, v in octonion.verify_contraction_identities().items()}


def cmd_left_mul(a):
    (p,) = _octs(a, 1)
    return ser.element_to_json(modules.left_mul(p, _element(a)))


def cmd_associative_part(a):
    sig = _sig(a)
    f = modules.conjugate_associative_part if a.conjugate else modules.associative_part
    return ser.subspace_to_json(f(sig))


def cmd_closure(a):
    return ser.subspace_to_json(modules.submodule_closure(_element(a)))


def cmd_is_cyclic(a):
    x = _element(a)
    return {"cyclic": modules.is_cyclic(x), "class": modules.cyclic_class(x)}


def cmd_re_part(a):
    return ser.element_to_json(bimodule.re_part(_element(a)))


def cmd_peirce(a):
    return [ser.element_to_json(p) for p in bimodule.peirce_decompose(_element(a))]


def cmd_right_mul(a):
    (p,) = _octs(a, 1)
    return ser.element_to_json(bimodule.right_mul(_element(a), p))


def cmd_canonical_bimodule(a):
    return ser.candidate_to_json(solver.canonical_bimodule(_sig(a)))


def cmd_verify_bimodule(a):
    cand = ser.candidate_from_json(_load(_need(a, "candidate")))
    return solver.verify_bimodule(cand).to_json()


def cmd_solve_bimodule(a):
    return ser.outcome_to_json(solver.solve_bimodule(_sig(a)))


def cmd_admits_bimodule(a):
    return {"admits": solver.admits_bimodule(_sig(a))}


def cmd_hom_dim(a):
    return {"dim": solver.hom_space_dim(_sig(a), _sig(a, "sig2"), a.mode)}


def cmd_classify_almost_linear(a):
    f = ser.matrix_from_json(_load(_need(a, "matrix")))
    if len(f) != 8 or any(len(r) != 8 for r in f):
        raise UsageError("--matrix must be an 8x8 array")
    q = solver.classify_almost_linear(f)
    return {"q": None if q is None else _oct_out(q)}


def cmd_decompose(a):
    x = _element(a)
    dec = cyclic.decompose(x, order=a.order)
    out = ser.decomposition_to_json(dec)
    out["length"] = dec.length
    out["dim"] = 8 * dec.length
    return out


def cmd_length(a):
    return {"length": cyclic.length(_element(a))}


def cmd_generated_submodule(a):
    return ser.subspace_to_json(cyclic.generated_submodule(_element(a)))


def cmd_sigma_class(a):
    return ser.sigma_to_json(cyclic.sigma_class(_element(a)))


def cmd_commutes(a):
    return {"commutes": cyclic.commutes_with_octonions(_element(a))}


def cmd_suite(a):
    checks = run_suite(a.name)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.detail}", file=sys.stderr)
    passed = all(c.passed for c in checks)
    return {"suite": a.name, "passed": passed, "checks": [c.to_json() for c in checks]}, 0 if passed else 1


COMMANDS = {
    "mul": cmd_mul,
    "conj": cmd_conj,
    "inverse": cmd_inverse,
    "associator": cmd_associator,
    "cross": cmd_cross,
    "assoc-subspace": cmd_assoc_subspace,
    "verify-identities": cmd_verify_identities,
    "left-mul": cmd_left_mul,
    "associative-part": cmd_associative_part,
    "closure": cmd_closure,
    "is-cyclic": cmd_is_cyclic,
    "re-part": cmd_re_part,
    "peirce": cmd_peirce,
    "right-mul": cmd_right_mul,
    "canonical-bimodule": cmd_canonical_bimodule,
    "verify-bimodule": cmd_verify_bimodule,
    "solve-bimodule": cmd_solve_bimodule,
    "admits-bimodule": cmd_admits_bimodule,
    "hom-dim": cmd_hom_dim,
    "classify-almost-linear": cmd_classify_almost_linear,
    "decompose": cmd_decompose,
    "length": cmd_length,
    "generated-submodule": cmd_generated_submodule,
    "sigma-class": cmd_sigma_class,
    "commutes": cmd_commutes,
    "suite": cmd_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="octomod", description="Exact octonion and octonionic-module computations.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--json", metavar="FILE", help="JSON object of named arguments")
        p.add_argument("--out", metavar="FILE", help="write the result here instead of stdout")
        p.add_argument("--element", help="module element JSON (or @file)")
        p.add_argument("--sig", help="signature n,m")
        p.add_argument("--sig2", help="second signature for hom-dim")
        p.add_argument("--oct", action="append", help="octonion JSON, repeat as needed")
        p.add_argument("--candidate", help="right-action candidate JSON (or @file)")
        p.add_argument("--matrix", help="8x8 real matrix JSON (or @file)")
        p.add_argument("--mode", choices=("left", "right", "bi"), default="left")
        p.add_argument("--order", choices=("high", "low"), default="high")
        p.add_argument("--conjugate", action="store_true", help="A^- instead of A")
        if name == "suite":
            p.add_argument("name", help=f"one of {', '.join(SUITES)}")
    return parser


def _merge_json_file(args) -> None:
    if not args.json:
        return
    try:
        data = json.loads(Path(args.json).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read --json file: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("--json file must hold an object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if attr in ("json", "out", "command"):
            continue
        if getattr(args, attr, None) in (None, [], False):
            if attr == "oct" and not isinstance(value, list):
                raise UsageError('"oct" must be a list of octonions')
            if attr == "oct" and value and not isinstance(value[0], list):
                value = [value]
            setattr(args, attr, value)


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        _merge_json_file(args)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        _emit({"error": "UsageError", "message": str(exc), "subcommands": list(COMMANDS)}, None)
        return 2
    except OctomodError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, None)
        return 1
    except (ValueError, KeyError, TypeError) as exc:
        _emit({"error": "UsageError", "message": f"malformed input: {exc}", "subcommands": list(COMMANDS)}, None)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    _emit(result, args.out)
    return code


def main() -> None:
    sys.exit(run())

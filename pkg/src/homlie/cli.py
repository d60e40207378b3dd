"""
Command line interface.

    homlie validate FILE
    homlie cohomology FILE [--rep NAME] [--s 0,1,2,3] [--max-degree K]
    homlie check FILE [--rep NAME] [--s 0,1,2] [--trials N] [--seed S]
    homlie reconstruct FILE [--rep NAME] [--s S]
    homlie catalog [--list] [--export NAME PATH [--family REP --s S]]

Every command prints a short human summary; ``--json`` prints the full report
instead and ``--out PATH`` also writes it to a file. Exit status is 0 when
everything holds, 1 when a mathematical identity is violated and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from .algebra import Representation, validate_hom_lie, validate_representation
from .catalog import NAMES, CatalogEntry, builtin, random_twisted
from .cohomology import (
    TheoremCheckResult, Witness, check_alpha_chain_map, check_beta_chain_map, check_d_squared,
    cohomology_dims, leibniz_trials, verify_iso,
)
from .fileformat import (
    FormatError, entry_from_json, entry_to_json, family_from_json, family_to_json,
    load_json, to_jsonable, write_json,
)
from .linalg import SingularMatrixError
from .reconstruction import OperatorFamily, reconstruct, roundtrip

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR = 0, 1, 2
STATUS = {EXIT_OK: "ok", EXIT_VIOLATED: "violated", EXIT_ERROR: "error"}


class InputError(Exception):
    pass


def lookup(name: str) -> CatalogEntry:
    m = re.fullmatch(r"random_(-?\d+)_(\d+)", name)
    if m:
        return random_twisted(int(m.group(1)), int(m.group(2)))
    try:
        return builtin(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _load_entry(path) -> CatalogEntry:
    try:
        return entry_from_json(load_json(path))
    except (FormatError, ValueError, ArithmeticError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _pick_reps(entry: CatalogEntry, name: str | None) -> dict[str, Representation]:
    if name is None:
        return dict(entry.representations)
    if name in entry.representations:
        return {name: entry.representations[name]}
    if name == "trivial":
        return {"trivial": Representation.trivial(entry.algebra)}
    raise InputError(f"no representation named {name!r}; file has "
                     f"{', '.join(entry.representations) or 'none'}")


def _shifts(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad shift list {text!r}") from None
    if not out or any(s < 0 for s in out):
        raise InputError("shifts must be non-negative integers")
    return out


def _result_json(r: TheoremCheckResult) -> dict:
    return {"name": r.name, "holds": r.holds, "witnesses": to_jsonable(r.witnesses[:5]),
            "witness_count": len(r.witnesses)}


# -- commands ----------------------------------------------------------

def cmd_validate(args, out):
    entry = _load_entry(args.path)
    reports = {"algebra": validate_hom_lie(entry.algebra)}
    if reports["algebra"].valid:
        for name, R in entry.representations.items():
            reports[f"representation:{name}"] = validate_representation(R)
    ok = all(r.valid for r in reports.values())
    for what, r in reports.items():
        out.append(f"{what}: {'valid' if r.valid else 'INVALID'}")
        for v in r.violations[:5]:
            out.append(f"  {v.identity} at {tuple(i + 1 for i in v.witness)}: "
                       f"{to_jsonable(v.lhs)} != {to_jsonable(v.rhs)}")
    code = EXIT_OK if ok else EXIT_VIOLATED
    return code, {"command": "validate", "reports": to_jsonable(reports)}


def cmd_cohomology(args, out):
    entry = _load_entry(args.path)
    name = args.rep or "trivial"
    R = _pick_reps(entry, name)[name]
    n = entry.algebra.dim
    kmax = n if args.max_degree is None else args.max_degree
    if not 0 <= kmax <= n:
        raise InputError(f"--max-degree must lie in 0..{n}")
    valid = validate_hom_lie(entry.algebra).valid and validate_representation(R).valid
    reports = [cohomology_dims(R, s, kmax) for s in _shifts(args.s)]
    for rep in reports:
        out.append(f"s = {rep.s}")
        out.append("   k  dimC  dimZ  dimB  dimH")
        for d in rep.degrees:
            out.append(f"  {d.k:2d} {d.dimC:5d} {d.dimZ:5d} {d.dimB:5d} {d.dimH:5d}")
    verdicts = []
    for a, b in zip(reports, reports[1:]):
        same = a.dimH == b.dimH
        verdicts.append({"s": a.s, "t": b.s, "equal": same})
        out.append(f"dim H(d^{a.s}) == dim H(d^{b.s}): {same}")
    if not valid:
        out.append(f"warning: {name} is not a valid representation of a Hom-Lie algebra")
    code = EXIT_OK if valid and all(v["equal"] for v in verdicts) else EXIT_VIOLATED
    return code, {"command": "cohomology", "representation": name, "valid_input": valid,
                  "reports": to_jsonable(reports), "isomorphism": verdicts}


def cmd_check(args, out):
    entry = _load_entry(args.path)
    reps = _pick_reps(entry, args.rep)
    shifts = _shifts(args.s)
    rng = random.Random(args.seed)
    results = []
    alg = validate_hom_lie(entry.algebra)
    results.append(("*", TheoremCheckResult("hom_lie_axioms",
                                            [_as_witness(v) for v in alg.violations])))
    for name, R in reps.items():
        rv = validate_representation(R)
        results.append((name, TheoremCheckResult("representation_axioms",
                                                 [_as_witness(v) for v in rv.violations])))
        for s in shifts:
            results.append((name, check_d_squared(R, s)))
            results.append((name, check_beta_chain_map(R, s)))
            results.append((name, check_alpha_chain_map(R, s)))
            if args.trials:
                results.extend((name, r) for r in leibniz_trials(R, s, args.trials, rng))
            results.append((name, verify_iso(R, s)))
    failing = [(name, r) for name, r in results if not r.holds]
    out.append(f"seed {args.seed}, trials {args.trials}, shifts {shifts}")
    out.append(f"{len(results) - len(failing)}/{len(results)} checks hold")
    if failing:
        name, r = failing[0]
        out.append(f"first failing identity: {r.name} (representation {name})")
    return (EXIT_VIOLATED if failing else EXIT_OK,
            {"command": "check", "seed": args.seed, "trials": args.trials, "shifts": shifts,
             "first_failure": failing[0][1].name if failing else None,
             "results": [dict(_result_json(r), representation=name) for name, r in results]})


def _as_witness(v):
    return Witness((v.identity, v.witness), v.lhs, v.rhs)


def cmd_reconstruct(args, out):
    try:
        doc = load_json(args.path)
    except (FormatError, OSError) as exc:
        raise InputError(f"{args.path}: {exc}") from None
    if doc.get("kind") == "operator_family":
        try:
            F = family_from_json(doc)
            result = reconstruct(F)
        except (FormatError, ArithmeticError) as exc:
            raise InputError(f"{args.path}: {exc}") from None
        for d in result.diagnostics:
            out.append(f"{d.name}: {'holds' if d.holds else 'FAILS'}")
        failing = result.failing()
        if failing:
            out.append(f"failing diagnostics: {', '.join(failing)}")
        return (EXIT_VIOLATED if failing else EXIT_OK,
                {"command": "reconstruct", "source": "operator_family", "s": F.s,
                 "rho": to_jsonable(result.rho), "bracket": to_jsonable(result.structure),
                 "failing": failing,
                 "diagnostics": [_result_json(d) for d in result.diagnostics]})
    entry = _load_entry(args.path)
    s = args.s
    if s < 0:
        raise InputError("--s must be non-negative")
    reps = _pick_reps(entry, args.rep)
    payload = {"command": "reconstruct", "source": "algebra", "s": s, "representations": {}}
    code = EXIT_OK
    for name, R in reps.items():
        F = OperatorFamily.from_representation(R, s)
        result = reconstruct(F)
        rt = roundtrip(R, s)
        diff = [w for w in rt.witnesses if w.inputs[0][0] in ("rho", "bracket")]
        out.append(f"{name}: diff {'empty' if not diff else f'{len(diff)} entries'}; "
                   + ", ".join(f"{d.name} {'holds' if d.holds else 'FAILS'}"
                               for d in result.diagnostics))
        if not rt.holds:
            code = EXIT_VIOLATED
        payload["representations"][name] = {
            "diff": to_jsonable(diff),
            "failing": result.failing(),
            "diagnostics": [_result_json(d) for d in result.diagnostics],
        }
    return code, payload


def cmd_catalog(args, out):
    if args.export is None:
        for name in NAMES:
            e = builtin(name)
            out.append(f"{name}: dim {e.algebra.dim}, representations "
                       f"{', '.join(e.representations)}")
        return EXIT_OK, {"command": "catalog", "names": list(NAMES)}
    name, path = args.export
    entry = lookup(name)
    if args.family is not None:
        if args.family not in entry.representations:
            raise InputError(f"{name} has no representation {args.family!r}")
        F = OperatorFamily.from_representation(entry.representations[args.family], args.s)
        write_json(family_to_json(F), path)
        out.append(f"wrote operator family of {name}/{args.family} at s = {args.s} to {path}")
    else:
        write_json(entry_to_json(entry), path)
        out.append(f"wrote {name} to {path}")
    return EXIT_OK, {"command": "catalog", "exported": name, "path": path}


# -- plumbing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homlie", description=__doc__.split("\n\n")[0].strip())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the JSON report here")
    common.add_argument("--json", action="store_true", help="print the JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check the Hom-Lie and representation axioms")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("cohomology", parents=[common], help="cohomology dimensions per shift")
    c.add_argument("path")
    c.add_argument("--rep")
    c.add_argument("--s", default="0,1,2,3")
    c.add_argument("--max-degree", type=int)
    c.set_defaults(func=cmd_cohomology)

    k = sub.add_parser("check", parents=[common], help="verify every identity on a file")
    k.add_argument("path")
    k.add_argument("--rep")
    k.add_argument("--s", default="0,1,2")
    k.add_argument("--trials", type=int, default=100)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(func=cmd_check)

    r = sub.add_parser("reconstruct", parents=[common],
                       help="recover rho and the bracket from coboundary operators")
    r.add_argument("path")
    r.add_argument("--rep")
    r.add_argument("--s", type=int, default=0)
    r.set_defaults(func=cmd_reconstruct)

    g = sub.add_parser("catalog", parents=[common], help="list or export built-in instances")
    g.add_argument("--list", action="store_true")
    g.add_argument("--export", nargs=2, metavar=("NAME", "PATH"))
    g.add_argument("--family", metavar="REP",
                   help="export the operator family of REP instead of the algebra")
    g.add_argument("--s", type=int, default=0)
    g.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    lines: list[str] = []
    try:
        code, payload = args.func(args, lines)
    except (InputError, SingularMatrixError) as exc:
        code, payload = EXIT_ERROR, {"command": args.command, "error": str(exc)}
        lines.append(f"error: {exc}")
    payload["status"] = STATUS[code]
    if args.out:
        write_json(payload, args.out)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
        print(f"status: {payload['status']}")
    return code


if __name__ == "__main__":
    sys.exit(main())

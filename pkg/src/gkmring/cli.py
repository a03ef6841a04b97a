"""Command-line interface: ``gkmring <command> ...``.

Exit status is 0 on success, 1 on validation or mathematical failure, and 2
on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import ring, systemfile
from .builders import (build_coadjoint_orbit, build_complete_conics, build_fiber_system,
                       root_system)
from .errors import GKMError, NotInSpan
from .gkm import satisfies, validate_system


class CommandFailed(Exception):
    def __init__(self, payload, text):
        self.payload = payload
        self.text = text


def _load(path):
    system = systemfile.load(path)
    report = validate_system(system)
    if not report.ok:
        raise CommandFailed({"valid": False, "errors": report.errors},
                            "invalid system:\n" + "\n".join(f"  error: {e}" for e in report.errors))
    return report.system


def _group_for(system, over):
    if over in ("sym", "full"):
        return "full"
    if system.weyl_group is None:
        raise CommandFailed({"error": "system declares no group"},
                            "invariants mode needs a \"group\" field in the system file")
    return system.weyl_group


def _gen_json(gens):
    return [{"degree": 2 * d, "polynomial_degree": d, "class": {k: str(p) for k, p in c.items()}}
            for d, c in gens.generators]


def _gen_text(gens):
    lines = []
    for k, (d, c) in enumerate(gens.generators):
        body = ", ".join(f"{vid}: {p}" for vid, p in c.items())
        lines.append(f"  e{k} [degree {2 * d}]: ({body})")
    return lines


def _named(system, name):
    if name not in system.named_classes:
        raise CommandFailed({"error": f"unknown class {name!r}"},
                            f"unknown class {name!r}; available: {sorted(system.named_classes)}")
    return system.named(name)


def cmd_validate(args):
    system = systemfile.load(args.file)
    report = validate_system(system)
    payload = {"valid": report.ok, "errors": report.errors, "warnings": report.warnings,
               "notes": report.notes}
    lines = ["valid" if report.ok else "invalid"]
    lines += [f"  error: {e}" for e in report.errors]
    lines += [f"  warning: {w}" for w in report.warnings]
    lines += [f"  note: {n}" for n in report.notes]
    if not report.ok:
        raise CommandFailed(payload, "\n".join(lines))
    return payload, "\n".join(lines)


def cmd_hilbert(args):
    system = _load(args.file)
    h = ring.hilbert_series(system, args.D)
    text = (f"Hilbert dims, polynomial degree 0..{args.D} (truncation D={args.D}):\n"
            + " ".join(map(str, h.dims)))
    return {"bound": args.D, "dims": h.dims}, text


def cmd_generators(args):
    system = _load(args.file)
    gens, verdict = ring.minimal_generators(system, args.D, _group_for(system, args.over))
    payload = {"bound": args.D, "over": args.over, "generators": _gen_json(gens),
               "betti": verdict.betti,
               "freeness": {"verdict": "PASS" if verdict.passed else "FAIL",
                            "verified_through": args.D, "quotient": [str(x) for x in verdict.quotient],
                            "message": verdict.message()},
               "warnings": verdict.warnings}
    lines = [f"minimal generators over {args.over} (truncation D={args.D}):"]
    lines += _gen_text(gens)
    lines.append("generator counts b_d: " + " ".join(map(str, verdict.betti)))
    lines.append("freeness: " + verdict.message())
    lines += [f"warning: {w}" for w in verdict.warnings]
    return payload, "\n".join(lines)


def cmd_betti(args):
    system = _load(args.file)
    try:
        betti = ring.ordinary_betti(system, args.D, args.mode)
    except ValueError as exc:
        raise CommandFailed({"error": str(exc)}, str(exc)) from None
    trimmed = ring.trim(betti)
    top = 2 * (len(trimmed) - 1)
    text = (f"ordinary Betti numbers, cohomological degrees 0,2,..,{max(top, 0)} "
            f"(mode {args.mode}, truncation D={args.D}):\n" + " ".join(map(str, trimmed)))
    return {"bound": args.D, "mode": args.mode, "betti": trimmed, "betti_full": betti}, text


def cmd_check(args):
    system = _load(args.file)
    ok, violation = satisfies(system, _named(system, args.klass))
    payload = {"class": args.klass, "satisfied": ok, "violations": []}
    if ok:
        return payload, "satisfied"
    payload["violations"].append({"kind": violation.kind, "index": violation.index,
                                  "witness": str(violation.witness), "detail": violation.detail})
    raise CommandFailed(payload, f"violated: {violation.kind} {violation.index}: {violation.detail}"
                                 f"\n  witness: {violation.witness}")


def cmd_coords(args):
    system = _load(args.file)
    c = _named(system, args.klass)
    gens, verdict = ring.minimal_generators(system, args.D, _group_for(system, args.over))
    try:
        coords = ring.module_coordinates(system, gens, c)
    except NotInSpan as exc:
        raise CommandFailed({"class": args.klass, "error": str(exc)}, f"not in span: {exc}") from None
    payload = {"bound": args.D, "class": args.klass, "generators": _gen_json(gens),
               "coordinates": [str(f) for f in coords]}
    lines = [f"coordinates of {args.klass} (truncation D={args.D}):"]
    lines += _gen_text(gens)
    lines += [f"  f{k} = {f}" for k, f in enumerate(coords)]
    return payload, "\n".join(lines)


def cmd_mult(args):
    system = _load(args.file)
    gens, verdict = ring.minimal_generators(system, args.D, _group_for(system, args.over))
    try:
        table = ring.structure_constants(system, gens, args.D)
    except (ValueError, NotInSpan) as exc:
        raise CommandFailed({"error": str(exc)}, str(exc)) from None
    n = len(gens)
    entries = [{"i": i, "j": j, "coordinates": [str(f) for f in table[(i, j)]]}
               for i in range(n) for j in range(i, n)]
    lines = [f"structure constants (truncation D={args.D}):"] + _gen_text(gens)
    for e in entries:
        terms = [f"({c})*e{k}" for k, c in enumerate(e["coordinates"]) if c != "0"]
        lines.append(f"  e{e['i']}*e{e['j']} = " + (" + ".join(terms) or "0"))
    return {"bound": args.D, "generators": _gen_json(gens), "table": entries}, "\n".join(lines)


def _parse_ints(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


def cmd_example(args):
    name = args.name
    if name == "conics":
        system = build_complete_conics()
    elif name == "coadjoint":
        rs = root_system(args.root_system)
        lam = _parse_ints(args.weight) if args.weight else (1,) * rs.rank
        system = build_coadjoint_orbit(rs, lam)
    else:
        case = {"p1": "P1", "ruled": "Ruled", "pv": "PV"}[name]
        chi = _parse_ints(args.chi) if args.chi else (1,)
        system = build_fiber_system(case, chi)
    text = systemfile.dumps(system)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return {"example": name, "output": args.output}, f"wrote {args.output}"
    return {"example": name, "system": systemfile.system_to_dict(system)}, text.rstrip("\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one machine-readable JSON document")

    parser = argparse.ArgumentParser(prog="gkmring", parents=[common],
                                     description="Graded structure of congruence-defined algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, bound=False, over=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        if name != "example":
            p.add_argument("file")
        if bound:
            p.add_argument("-D", type=int, default=ring.DEFAULT_BOUND,
                           help="truncation degree (polynomial degree; default 8)")
        if over:
            p.add_argument("--over", choices=("sym", "invariants"), default="sym")
        return p

    add("validate", cmd_validate, "check a system file")
    add("hilbert", cmd_hilbert, "graded dimensions", bound=True)
    add("generators", cmd_generators, "minimal generators and freeness check", bound=True, over=True)
    p = add("betti", cmd_betti, "ordinary Betti numbers", bound=True)
    p.add_argument("--mode", choices=("full", "weyl"), default="full")
    p = add("check", cmd_check, "test membership of a named class")
    p.add_argument("--class", dest="klass", required=True)
    p = add("coords", cmd_coords, "module coordinates of a named class", bound=True, over=True)
    p.add_argument("--class", dest="klass", required=True)
    add("mult", cmd_mult, "structure constants of the generators", bound=True, over=True)
    p = add("example", cmd_example, "write a built-in example system")
    p.add_argument("name", choices=("p1", "coadjoint", "conics", "ruled", "pv"))
    p.add_argument("--root-system", default="A2", choices=("A1", "A1xA1", "A2", "B2", "G2"))
    p.add_argument("--weight", help="comma-separated fundamental-weight coordinates")
    p.add_argument("--chi", help="comma-separated modulus for p1/ruled/pv (default 1)")
    p.add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    base = {"command": args.command}
    if hasattr(args, "file"):
        base["file"] = args.file
    status = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            payload, text = args.func(args)
        except CommandFailed as exc:
            payload, text, status = exc.payload, exc.text, 1
        except (GKMError, KeyError, ValueError) as exc:
            payload, text, status = {"error": str(exc)}, f"error: {exc}", 1
    if as_json:
        print(json.dumps({**base, "ok": status == 0, **payload}, indent=2))
    else:
        print(text, file=sys.stdout if status == 0 else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())

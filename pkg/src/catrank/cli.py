"""Command line front end: validate categories, compute invariants, emit examples.

Every command prints a single JSON document on stdout (indented with --pretty);
validation problems go to stderr as JSON.  Exit codes: 0 success, 1 invalid
input, 2 usage error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import corpus
from .exactq import mat_invert, rat_str
from .fincat import canonical_json, classify, from_json, validate
from .grouptheory import (
    build_group,
    nu_matrix,
    subgroup_classes,
    table_of_marks,
)
from .leinster import chi_L, coweighting, weighting, zeta_matrix
from .moebius import (
    euler_characteristics,
    mu_bar2_chains,
    nerve_euler_characteristic,
    omega_bar2,
)
from .orbitcat import (
    GCWComplex,
    chi_G,
    fixed_point_euler,
    gcw_from_json,
    orbit_category,
    verify_omega_relation,
)


def _fmt_label(l) -> str:
    if isinstance(l, tuple):  # subgroup class labels are tuples of elements
        return "(" + ",".join(str(e) for e in l) + ")"
    return str(l)


def _vec(v) -> dict:
    return {"labels": [_fmt_label(l) for l in v.labels],
            "entries": [rat_str(x) for x in v]}


def _mat(m) -> dict:
    return {"row_labels": [_fmt_label(l) for l in m.row_labels],
            "col_labels": [_fmt_label(l) for l in m.col_labels],
            "entries": [[rat_str(x) for x in m.row(i)] for i in range(m.rows)]}


def _class_name(cls) -> str:
    return "(" + ",".join(str(e) for e in cls.label) + ")"


def _emit(doc, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2))
    else:
        print(json.dumps(doc))


def _read_source(path: str) -> tuple[bytes, str]:
    if path == "-":
        data = sys.stdin.buffer.read()
        return data, "<stdin>"
    with open(path, "rb") as fh:
        return fh.read(), path


def _input_stanza(data: bytes, name: str) -> dict:
    return {"source": name, "sha256": hashlib.sha256(data).hexdigest()}


def _load_category(path: str):
    """Returns (report stub, category or None, violations)."""
    try:
        data, name = _read_source(path)
    except OSError as e:
        return None, None, [{"kind": "unreadable", "detail": str(e)}]
    stub = {"input": _input_stanza(data, name)}
    try:
        doc = json.loads(data)
    except ValueError as e:
        return stub, None, [{"kind": "not_json", "detail": str(e)}]
    try:
        cat = from_json(doc)
    except ValueError as e:
        return stub, None, [{"kind": "malformed", "detail": str(e)}]
    violations = validate(cat)
    return stub, (None if violations else cat), violations


def cmd_validate(args) -> int:
    stub, cat, violations = _load_category(args.path)
    if stub is None:
        print(json.dumps({"violations": violations}), file=sys.stderr)
        return 1
    ok = not violations
    doc = dict(stub)
    doc["valid"] = ok
    if ok:
        doc["objects"] = cat.n_objects
        doc["morphisms"] = cat.n_morphisms
    _emit(doc, args.pretty)
    if not ok:
        print(json.dumps({"violations": violations}), file=sys.stderr)
        return 1
    return 0


def cmd_euler(args) -> int:
    stub, cat, violations = _load_category(args.path)
    if cat is None:
        print(json.dumps({"violations": violations}), file=sys.stderr)
        return 1
    rep = classify(cat)
    invariants: dict = {}
    warnings: list[str] = []

    w = weighting(cat)
    if w.exists:
        invariants["weighting"] = dict(_vec(w.weighting), kernel_dim=w.kernel_dim)
    else:
        warnings.append("weighting omitted: the system zeta . k = 1 is inconsistent")
    cw = coweighting(cat)
    if cw.exists:
        invariants["coweighting"] = dict(_vec(cw.weighting), kernel_dim=cw.kernel_dim)
    else:
        warnings.append("coweighting omitted: the system zeta . k = 1 on the opposite is inconsistent")
    chi = chi_L(cat)
    invariants["chi_L"] = rat_str(chi) if chi != "undefined" else "undefined"

    if rep.is_ei:
        er = euler_characteristics(cat, max_chain_length=args.max_chain_length)
        invariants["chi_f"] = _vec(er.chi_f)
        invariants["chi"] = rat_str(er.chi)
        invariants["chi_f2"] = _vec(er.chi_f2)
        invariants["chi2"] = rat_str(er.chi2)
        invariants["omega_bar2"] = _mat(omega_bar2(cat))
        invariants["mu_bar2"] = _mat(mu_bar2_chains(cat, max_chain_length=args.max_chain_length))
    else:
        for name in ("chi_f", "chi", "chi_f2", "chi2", "omega_bar2", "mu_bar2"):
            warnings.append(f"{name} omitted: not an EI category")

    if rep.has_trivial_endomorphisms:
        try:
            invariants["chi_nerve"] = rat_str(nerve_euler_characteristic(cat))
        except ValueError:
            warnings.append("chi_nerve omitted: nonidentity morphisms form a cycle")
    else:
        warnings.append("chi_nerve omitted: nontrivial endomorphism")

    doc = dict(stub)
    doc["predicates"] = rep.flags()
    doc["invariants"] = invariants
    doc["warnings"] = warnings
    _emit(doc, args.pretty)
    return 0


def _group_report(g, spec) -> dict:
    raw = json.dumps(spec, sort_keys=True) if isinstance(spec, dict) else str(spec)
    return {"input": _input_stanza(raw.encode(), raw), "group_order": g.order}


def cmd_group(args) -> int:
    try:
        g = build_group(args.group)
    except ValueError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    classes = subgroup_classes(g)
    doc = _group_report(g, args.group)
    doc["classes"] = [_class_name(c) for c in classes]

    if args.group_cmd == "marks":
        doc["invariants"] = {"marks": _mat(table_of_marks(g).matrix),
                             "weyl_orders": [c.weyl_order for c in classes]}
    elif args.group_cmd == "nu":
        if g.order > args.cap:
            print(json.dumps({"error": f"group order {g.order} exceeds cap {args.cap}"}),
                  file=sys.stderr)
            return 1
        doc["invariants"] = {"nu": _mat(nu_matrix(g)),
                             "moduli": [c.weyl_order for c in classes]}
    elif args.group_cmd == "burnside":
        try:
            xi = [int(s) for s in args.xi.split(",")]
        except ValueError:
            print(json.dumps({"error": f"malformed xi: {args.xi!r}"}), file=sys.stderr)
            return 2
        if len(xi) != len(classes):
            print(json.dumps({"error": f"xi needs {len(classes)} entries, got {len(xi)}"}),
                  file=sys.stderr)
            return 2
        if g.order > args.cap:
            print(json.dumps({"error": f"group order {g.order} exceeds cap {args.cap}"}),
                  file=sys.stderr)
            return 1
        nu = nu_matrix(g)
        image = [sum(nu.get(i, j) * xi[j] for j in range(len(classes)))
                 for i in range(len(classes))]
        verdict = all(v.denominator == 1 and v.numerator % c.weyl_order == 0
                      for v, c in zip(image, classes))
        doc["invariants"] = {"burnside": {
            "xi": xi,
            "nu_xi": [rat_str(v) for v in image],
            "moduli": [c.weyl_order for c in classes],
            "satisfied": verdict,
        }}
    elif args.group_cmd == "orbitcat":
        if g.order > args.cap:
            print(json.dumps({"error": f"group order {g.order} exceeds cap {args.cap}"}),
                  file=sys.stderr)
            return 1
        # raw category document so the output pipes into euler/validate
        sys.stdout.write(canonical_json(orbit_category(g, cap=args.cap).category))
        return 0
    _emit(doc, args.pretty)
    return 0


def cmd_equivariant(args) -> int:
    if args.random is not None:
        try:
            g = build_group(args.random)
        except ValueError as e:
            print(json.dumps({"error": str(e)}), file=sys.stderr)
            return 2
        rng = random.Random(args.seed)
        classes = subgroup_classes(g)
        census = [{"dim": rng.randrange(0, 4),
                   "stabilizer": sorted(rng.choice(classes).representative)}
                  for _ in range(args.cells)]
        doc_in = {"group": args.random, "cells": census}
        data = json.dumps(doc_in, sort_keys=True).encode()
        name = f"<random seed={args.seed}>"
        x = gcw_from_json(doc_in)
    else:
        if args.path is None:
            print(json.dumps({"error": "equivariant needs a path or --random <group>"}),
                  file=sys.stderr)
            return 2
        try:
            data, name = _read_source(args.path)
        except OSError as e:
            print(json.dumps({"violations": [{"kind": "unreadable", "detail": str(e)}]}),
                  file=sys.stderr)
            return 1
        try:
            x = gcw_from_json(json.loads(data))
        except ValueError as e:
            print(json.dumps({"violations": [{"kind": "malformed", "detail": str(e)}]}),
                  file=sys.stderr)
            return 1
    if x.group.order > args.cap:
        print(json.dumps({"error": f"group order {x.group.order} exceeds cap {args.cap}"}),
              file=sys.stderr)
        return 1
    ok, lhs, rhs = verify_omega_relation(x)
    labels = [_class_name(c) for c in x.classes]
    doc = {"input": _input_stanza(data, name), "group_order": x.group.order,
           "classes": labels, "cells": len(x.cells)}
    if args.random is not None:
        doc["census"] = [{"dim": d, "stabilizer": sorted(x.classes[ci].representative)}
                         for d, ci in x.cells]
    doc["invariants"] = {
        "chi_G": {"labels": labels, "entries": [rat_str(v) for v in chi_G(x)]},
        "fixed_point_euler": {"labels": labels,
                              "entries": [fixed_point_euler(x, c) for c in x.classes]},
        "omega_relation": {
            "lhs": [rat_str(v) for v in lhs],
            "rhs": [rat_str(v) for v in rhs],
            "holds": ok,
        },
    }
    _emit(doc, args.pretty)
    return 0


def cmd_examples(args) -> int:
    if args.examples_cmd == "list":
        _emit({"examples": corpus.names()}, args.pretty)
        return 0
    try:
        cat = corpus.build(args.name, q=args.q)
    except ValueError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    sys.stdout.write(canonical_json(cat))
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catrank",
                                description="Exact Euler characteristics and "
                                            "Moebius inversion for finite categories.")
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    p.add_argument("--cap", type=int, default=64, help="largest group order accepted")
    p.add_argument("--max-chain-length", type=int, default=None,
                   help="truncate chain sums (default: number of iso classes)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized subcommands")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("validate", help="check a category document")
    v.add_argument("path", help="category JSON file, or - for stdin")
    v.set_defaults(fn=cmd_validate)

    e = sub.add_parser("euler", help="compute every applicable invariant")
    e.add_argument("path", help="category JSON file, or - for stdin")
    e.set_defaults(fn=cmd_euler)

    gp = sub.add_parser("group", help="finite group computations")
    gsub = gp.add_subparsers(dest="group_cmd", required=True)
    for name, brief in (("marks", "table of marks"),
                        ("nu", "integral congruence matrix"),
                        ("burnside", "check Burnside congruences for a tuple"),
                        ("orbitcat", "emit the orbit category as category JSON")):
        gs = gsub.add_parser(name, help=brief)
        gs.add_argument("group", help="group spec, e.g. cyclic:5, sym:3, dihedral:4")
        if name == "burnside":
            gs.add_argument("--xi", required=True,
                            help="comma-separated integers, one per subgroup class")
        gs.set_defaults(fn=cmd_group)
    geq = gsub.add_parser("equivariant", help="invariants of an equivariant cell census")
    geq.add_argument("path", nargs="?", default=None,
                     help="cell complex JSON file, or - for stdin")
    geq.add_argument("--random", metavar="GROUP", default=None,
                     help="generate a random census for this group instead "
                          "(deterministic for a given --seed)")
    geq.add_argument("--cells", type=int, default=6,
                     help="cell count for --random (default 6)")
    geq.set_defaults(fn=cmd_equivariant, group_cmd="equivariant")

    ex = sub.add_parser("examples", help="list or emit bundled example categories")
    esub = ex.add_subparsers(dest="examples_cmd", required=True)
    esub.add_parser("list", help="names of all bundled examples").set_defaults(fn=cmd_examples)
    em = esub.add_parser("emit", help="print one example as category JSON")
    em.add_argument("name")
    em.add_argument("--q", type=int, default=1, help="size parameter for subsets-q")
    em.set_defaults(fn=cmd_examples)

    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except AssertionError as e:
        print(json.dumps({"error": "internal assertion failed", "detail": str(e)}),
              file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

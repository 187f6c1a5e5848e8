"""Command line entry point.

Exit status is 0 when every asserted check passes, 1 when a check fails
and 2 on bad input.
"""
import argparse
import sys

from . import io
from .cluster import build_exchange_graph, initial_seed, mutate_path, seed_equivalent
from .coxeter import CoxeterElement, CoxeterGroup
from .framework import cambrian_framework, seed_map, verify_all
from .io import InputError
from .presets import FINITE, PRESETS, preset
from .rootspace import CyclicB, RootSystem, cartan_companion, is_finite_type
from .sortable import enumerate_sortables
from .suite import DEFAULT_SEED, failures, run_matrix, run_suite


def _matrix(args):
    if args.matrix and args.preset:
        raise InputError("give either --matrix or --preset, not both")
    if args.matrix:
        return io.load_matrix(args.matrix)
    if args.preset:
        try:
            return preset(args.preset)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    raise InputError("an exchange matrix is required (--matrix PATH or --preset NAME)")


def _emit(text, out):
    out.write(text)


def _default_length(B):
    rs = RootSystem(B)
    if is_finite_type(rs):
        group = CoxeterGroup(rs)
        return max(len(w) for w in group.elements(10 ** 6))
    return 6


def cmd_companion(args, out):
    B = _matrix(args)
    rs = RootSystem(B)
    data = {
        "matrix": io.matrix_json(B),
        "cartan_companion": [list(r) for r in cartan_companion(B)],
        "symmetrizer": io.vector(rs.delta),
        "omega": [[io.rational(x) for x in r] for r in rs.omega_table],
        "kappa": [[io.rational(x) for x in r] for r in rs.kappa_table],
        "euler": [[io.rational(x) for x in r] for r in rs.euler_table],
        "sym": [[io.rational(x) for x in r] for r in rs.sym_table],
        "finite_type": is_finite_type(rs),
    }
    try:
        data["nu"] = [[io.rational(x) for x in r] for r in rs.nu_matrix]
        data["eta"] = [[io.rational(x) for x in r] for r in rs.eta_matrix]
    except CyclicB:
        data["eta"] = None
    if args.format == "text":
        lines = [f"A = {data['cartan_companion']}", f"delta = {data['symmetrizer']}",
                 f"finite type: {data['finite_type']}"]
        _emit("\n".join(lines) + "\n", out)
    else:
        _emit(io.dumps(data), out)
    return 0


def _parse_path(text, n):
    if not text:
        return []
    try:
        path = [int(x) - 1 for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--path must be comma-separated integers, got {text!r}") from exc
    if any(not 0 <= e < n for e in path):
        raise InputError(f"--path indices must lie in 1..{n}")
    return path


def cmd_mutate(args, out):
    B = _matrix(args)
    path = _parse_path(args.path, len(B))
    seed = mutate_path(B, path)
    lam = seed_equivalent(seed, initial_seed(B))
    data = {"path": [e + 1 for e in path], "seed": io.seed_json(seed),
            "equivalent_to_initial": None if lam is None else [k + 1 for k in lam]}
    if args.format == "text":
        lines = [f"x{k + 1} = {x.to_string()}" for k, x in enumerate(seed.cluster)]
        lines.append(f"equivalent to initial: {data['equivalent_to_initial']}")
        _emit("\n".join(lines) + "\n", out)
    else:
        _emit(io.dumps(data), out)
    return 0


def cmd_exchange_graph(args, out):
    B = _matrix(args)
    g = build_exchange_graph(B, args.depth)
    if args.format == "dot":
        _emit(io.exchange_graph_dot(g), out)
    elif args.format == "text":
        _emit(f"seeds: {len(g)}\nclosed: {g.closed}\nedges: {len(g.edges())}\n", out)
    else:
        _emit(io.dumps(io.exchange_graph_json(g)), out)
    return 0


def cmd_sortables(args, out):
    B = _matrix(args)
    L = args.length if args.length is not None else _default_length(B)
    c = CoxeterElement(B)
    verts = enumerate_sortables(c, L)
    if args.format == "text":
        _emit("".join(v.name() + "\n" for v in verts), out)
    else:
        data = [{"word": [i + 1 for i in v.sorting_word.flat],
                 "blocks": [[i + 1 for i in b] for b in v.sorting_word.blocks],
                 "labels": [io.vector(v.labels[r]) for r in range(len(B))],
                 "cl": [io.vector(v.cl[r]) for r in range(len(B))]} for v in verts]
        _emit(io.dumps({"order": [i + 1 for i in c.order], "length": L, "sortables": data}), out)
    return 0


def cmd_cambrian(args, out):
    B = _matrix(args)
    L = args.length if args.length is not None else _default_length(B)
    fw = cambrian_framework(CoxeterElement(B), L)
    fmt = args.export or args.format
    if fmt == "dot":
        _emit(io.cambrian_dot(fw), out)
    elif fmt == "text":
        lines = [f"{fw.names[v]}: " + ", ".join(io.root_string(x) for x in fw.labels(v))
                 for v in range(fw.nvertices)]
        _emit("\n".join(lines) + "\n", out)
    else:
        _emit(io.dumps(io.cambrian_json(fw)), out)
    return 0


def _report(reports, args, out):
    bad = failures(reports)
    if args.format == "text":
        lines = []
        for rep in reports:
            for o in rep["orientations"]:
                order = "".join(f"s{i + 1}" for i in o["order"])
                for e in o["checks"]:
                    status = "PASS" if e["passed"] else ("FAIL" if e["asserted"] else "INFO")
                    lines.append(f"{status} {rep['type']} c={order} {e['check']}")
        lines.append(f"{'ALL PASS' if not bad else 'FAILURES: ' + str(len(bad))}")
        _emit("\n".join(lines) + "\n", out)
    else:
        _emit(io.dumps({"reports": reports, "failures": [list(f) for f in bad],
                        "passed": not bad}), out)
    return 1 if bad else 0


def cmd_verify(args, out):
    if args.suite == "finite-type":
        types = [t.strip() for t in (args.types or ",".join(FINITE)).split(",") if t.strip()]
        unknown = [t for t in types if t not in PRESETS]
        if unknown:
            raise InputError(f"unknown types: {', '.join(unknown)}")
        reports = run_suite(types, seed=args.seed)
    else:
        B = _matrix(args)
        L = args.length if args.length is not None else _default_length(B)
        reports = [run_matrix(B, L, seed=args.seed, all_orientations=args.all_orientations)]
    return _report(reports, args, out)


def cmd_export(args, out):
    B = _matrix(args)
    L = args.length if args.length is not None else _default_length(B)
    fw = cambrian_framework(CoxeterElement(B), L)
    if args.what == "seeds":
        a = seed_map(fw)
        data = {fw.names[v]: {"ports": [a.index[v][k] + 1 for k in range(fw.n)],
                              "seed": io.seed_json(a.seeds[v])} for v in sorted(a.seeds)}
        _emit(io.dumps(data), out)
    elif args.what == "conditions":
        reports = verify_all(fw)
        _emit(io.dumps([r.to_dict() for r in reports]), out)
        return 0 if all(r.passed for r in reports) else 1
    else:
        if args.format == "dot":
            _emit(io.cambrian_dot(fw), out)
        else:
            _emit(io.dumps(io.cambrian_json(fw)), out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="clusterframe",
                                description="Cluster algebras and Cambrian frameworks, exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text")):
        sp.add_argument("--matrix", help="JSON file {\"n\": int, \"b\": [[int]]}")
        sp.add_argument("--preset", help="named matrix: " + ", ".join(sorted(PRESETS)))
        sp.add_argument("--format", choices=formats, default=formats[0])

    sp = sub.add_parser("companion", help="Cartan companion, symmetrizer, forms")
    common(sp)
    sp.set_defaults(func=cmd_companion)

    sp = sub.add_parser("mutate", help="mutate the principal seed along a path")
    common(sp)
    sp.add_argument("--path", default="", help="1-based indices, e.g. 1,2,1")
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("exchange-graph", help="mutation closure up to relabelling")
    common(sp, ("json", "dot", "text"))
    sp.add_argument("--depth", type=int, default=50)
    sp.set_defaults(func=cmd_exchange_graph)

    sp = sub.add_parser("sortables", help="c-sortable elements up to a length")
    common(sp)
    sp.add_argument("--length", type=int)
    sp.set_defaults(func=cmd_sortables)

    sp = sub.add_parser("cambrian", help="Cambrian framework")
    common(sp, ("json", "dot", "text"))
    sp.add_argument("--length", type=int)
    sp.add_argument("--export", choices=("json", "dot", "text"))
    sp.set_defaults(func=cmd_cambrian)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=("finite-type", "matrix"), default="finite-type")
    sp.add_argument("--types", help="comma-separated presets")
    sp.add_argument("--length", type=int)
    sp.add_argument("--all-orientations", action="store_true")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed for sampled checks")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="export framework data")
    common(sp, ("json", "dot"))
    sp.add_argument("--what", choices=("framework", "seeds", "conditions"), default="framework")
    sp.add_argument("--length", type=int)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for name in ("length", "depth"):
        if getattr(args, name, None) is not None and getattr(args, name) < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return 2
    try:
        return args.func(args, out)
    except (InputError, CyclicB) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

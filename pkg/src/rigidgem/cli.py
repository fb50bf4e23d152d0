"""Command-line interface.

Exit codes: 0 success (or a Yes verdict), 1 negative verdict or failed
precondition, 2 usage or parse error, 3 Unknown verdict.
"""

from __future__ import annotations

import argparse
import itertools
import sys

from . import catalogue
from .errors import GemError, GemFormatError
from .gem import (
    Edge,
    euler_characteristic,
    f_vector,
    is_bipartite,
    is_contracted,
    residue_count,
)
from .gemio import format_gem, read_gem, write_gem
from .reduce import reduce_gem
from .rho import Kind, SwitchVariant, classify_pair, find_rho_pairs, preferred_variant, switch_generic
from .trace import read_trace, verify_trace
from .verify import Answer, is_crystallization, is_gem, is_orientable, is_sphere

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


def _emit(rows, fmt: str, out) -> None:
    for key, value in rows:
        if fmt == "tsv":
            out.write(f"{key}\t{value}\n")
        else:
            out.write(f"{key} {value}\n")


def cmd_info(args, out) -> int:
    G = read_gem(args.gem)
    rows = [("n", G.n), ("p", G.p)]
    for k in range(1, G.n + 1):
        for B in itertools.combinations(G.colours, k):
            rows.append((f"g_{','.join(map(str, B))}", residue_count(G, B)))
    rows += [
        ("f", " ".join(map(str, f_vector(G)))),
        ("chi", euler_characteristic(G)),
        ("bipartite", "yes" if is_bipartite(G) else "no"),
        ("contracted", "yes" if is_contracted(G) else "no"),
    ]
    _emit(rows, args.format, out)
    return EXIT_OK


def _verdict_line(v) -> str:
    if v.trace is not None and v.value is Answer.YES:
        steps = "; ".join(str(s) for s in v.trace)
        return f"{v.value.value} (trace: {steps})"
    return f"{v.value.value} ({v.evidence})"


def cmd_verify(args, out) -> int:
    G = read_gem(args.gem)
    if args.orientable:
        ok = is_orientable(G)
        out.write("Yes (bipartite)\n" if ok else "No (odd cycle)\n")
        return EXIT_OK if ok else EXIT_NO
    if args.sphere:
        v = is_sphere(G, seed=args.seed, budget=args.budget)
    elif args.crystallization:
        v = is_crystallization(G)
    else:
        v = is_gem(G, seed=args.seed)
    out.write(_verdict_line(v) + "\n")
    return {Answer.YES: EXIT_OK, Answer.NO: EXIT_NO, Answer.UNKNOWN: EXIT_UNKNOWN}[v.value]


def _pair_text(G, R) -> tuple:
    e = G.endpoints(R.e)
    f = G.endpoints(R.f)
    kind = "rho_n" if R.kind is Kind.RHO_N else "rho_n-1"
    d = "-" if R.d is None else R.d
    return kind, R.colour, f"{e[0]}-{e[1]}", f"{f[0]}-{f[1]}", d


def cmd_rho(args, out) -> int:
    G = read_gem(args.gem)
    pairs = find_rho_pairs(G)
    for R in pairs:
        kind, c, e, f, d = _pair_text(G, R)
        if args.format == "tsv":
            out.write(f"{kind}\t{c}\t{e}\t{f}\t{d}\n")
        else:
            out.write(f"{kind} colour {c} edges {e} {f} d {d}\n")
    if args.format != "tsv":
        out.write(f"{len(pairs)} pair(s)\n")
    return EXIT_OK


def cmd_switch(args, out) -> int:
    G = read_gem(args.gem)
    e, f = Edge(args.v1, args.c1), Edge(args.v2, args.c2)
    if args.variant == "preferred":
        R = classify_pair(G, e, f)
        if R is None:
            raise GemError("the edges are not a rho-pair; name a variant explicitly")
        variant = preferred_variant(G, R)
    else:
        variant = SwitchVariant(args.variant)
    H = switch_generic(G, e, f, variant)
    if args.output:
        write_gem(H, args.output)
        out.write(f"switched ({variant.value}); wrote {args.output}\n")
    else:
        out.write(format_gem(H))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    G = read_gem(args.gem)
    report = reduce_gem(G)
    steps = "; ".join(str(s) for s in report.trace) or "(none)"
    out.write(f"{report.summary()}, trace: {steps}\n")
    if args.output:
        write_gem(report.gem, args.output)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_text())
    return EXIT_OK if report.rigid else EXIT_NO


def cmd_enumerate(args, out) -> int:
    entries = catalogue.enumerate_rigid(
        args.dim, args.max_order, args.bipartite_only, budget=args.budget, jobs=args.jobs
    )
    text = catalogue.format_catalogue(entries, args.dim, args.max_order)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"{len(entries)} rigid crystallization(s); wrote {args.output}\n")
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify_trace(args, out) -> int:
    start = read_gem(args.start)
    trace = read_trace(args.trace)
    end = read_gem(args.end)
    res = verify_trace(start, trace, end)
    if res:
        out.write(f"ok ({len(trace)} steps)\n")
        return EXIT_OK
    where = "final gem" if res.step == 0 else f"step {res.step}"
    out.write(f"failed at {where}: {res.reason}\n")
    return EXIT_NO


def cmd_cat_merge(args, out) -> int:
    merged = catalogue.merge(catalogue.load_catalogue(p) for p in args.inputs)
    text = catalogue.format_catalogue(merged.entries, merged.dimension, merged.max_order)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"{len(merged.entries)} entries; wrote {args.output}\n")
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigidgem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def gem_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("gem", help="input .gem file")
        p.set_defaults(func=func)
        return p

    p = gem_cmd("info", cmd_info, "residue counts, f-vector, chi, bipartiteness")
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = gem_cmd("verify", cmd_verify, "gem / sphere / crystallization / orientability verdicts")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--gem", action="store_true", help="is this a gem of a manifold (default)")
    mode.add_argument("--sphere", action="store_true")
    mode.add_argument("--crystallization", action="store_true")
    mode.add_argument("--orientable", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="moves per reduction round")

    p = gem_cmd("rho", cmd_rho, "list rho-pairs")
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = gem_cmd("switch", cmd_switch, "switch a pair of equally coloured edges")
    for name in ("v1", "c1", "v2", "c2"):
        p.add_argument(name, type=int)
    p.add_argument("--variant", choices=("preferred", "UW_VZ", "UZ_VW"), default="preferred")
    p.add_argument("-o", "--output")

    p = gem_cmd("reduce", cmd_reduce, "crystallize and rigidify")
    p.add_argument("-o", "--output", help="write the resulting gem here")
    p.add_argument("--report", help="write the reduction report here")

    p = sub.add_parser("enumerate", help="census of rigid crystallizations")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--bipartite-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=catalogue.DEFAULT_BUDGET,
                   help="search nodes per shard")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-trace", help="replay a move trace")
    p.add_argument("start")
    p.add_argument("trace")
    p.add_argument("end")
    p.set_defaults(func=cmd_verify_trace)

    p = sub.add_parser("cat-merge", help="merge catalogue files")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cat_merge)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (GemFormatError, OSError) as exc:
        print(f"rigidgem: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GemError as exc:
        print(f"rigidgem: {exc}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    raise SystemExit(main())

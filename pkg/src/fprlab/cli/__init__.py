"""Command-line entry point.

Exit codes: 0 success, 1 a reproduced value differs from the stored one,
2 usage or input errors, 3 a size cap was exceeded.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from ..config import RunConfig, get_config, using
from ..errors import CapExceeded, FprlabError
from .report import envelope, render
from .spec import build_group, format_spec, load, parse_spec

__all__ = ["main", "parse_spec", "format_spec", "build_group", "load"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _cmd_classes(args, act):
    from ..classes import class_table
    from .report import class_rows
    t = class_table(act.group)
    return {"group_order": act.group.order(), "method": t.method, "rows": class_rows(t)}


def _cmd_fpr(args, act):
    from ..fpr import fpr_report
    from .report import fpr_result
    return fpr_result(fpr_report(act))


def _cmd_mu(args, act):
    from ..fpr import fpr_report
    rep = fpr_report(act)
    return {"degree": rep.degree, "mu": rep.mu, "fixity": rep.fixity,
            "involution_fixity": rep.involution_fixity, "has_involutions": rep.has_involutions,
            "has_derangement": rep.has_derangement,
            "derangement_witness": None if rep.derangement_witness is None
            else rep.derangement_witness.rep}


def _cmd_graph(args, act):
    from ..genspread import build_graph, chromatic_number, graph_stats
    from .report import graph_result
    g = build_graph(act.group)
    stats = graph_stats(g, args.budget)
    chrom = None
    if args.chromatic:
        chrom = chromatic_number(g.bitsets(), args.budget or get_config().budget,
                                 lower=stats.clique.value)
    return graph_result(stats, chrom)


def _cmd_spread(args, act):
    from ..genspread import spread_exact
    from .report import spread_result
    return spread_result(spread_exact(act.group, budget=args.budget))


def _cmd_uspread(args, act):
    from ..genspread import uspread_certify
    from ..permcore.perm import Permutation
    from .report import uspread_result
    y = Permutation.parse(args.y, act.degree)
    return uspread_result(uspread_certify(act.group, y, args.k))


def _cmd_pgen2(args, act):
    from ..genspread import prob_gen2
    v = prob_gen2(act.group, estimate=args.estimate, samples=args.samples)
    exact = act.group.order() <= get_config().caps.graph
    return {"value": v, "exact": exact, "samples": None if exact else args.samples}


def _cmd_genus_screen(args, act):
    from ..genus import genus_screen
    from .report import screen_result
    return screen_result(genus_screen(act, args.g, insoluble=args.insoluble_filter,
                                      kmax=args.kmax))


def _read_tuple(path, degree):
    from ..permcore.perm import Permutation
    with open(path) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [Permutation.parse(ln, degree) for ln in lines if ln]


def _cmd_genus_of(args, act):
    from ..genus import gen_tuple
    t = gen_tuple(_read_tuple(args.tuple, act.degree), act)
    return {"elements": t.elements, "indices": t.indices, "index_sum": sum(t.indices),
            "genus": t.genus}


def _cmd_ind_table(args, act):
    from ..genus import min_index_table
    return {"degree": act.degree, "min_index": min_index_table(act)}


def _cmd_base(args, act):
    from .. import bases
    from .report import base_result
    if args.qhat:
        v = bases.qhat(act, args.c)
        return {"c": args.c, "qhat": v, "certifies_b_at_most_c": v < 1}
    if args.prob:
        p = bases.random_base_prob(act, args.c, args.trials, args.seed)
        return {"c": p.c, "hits": p.hits, "trials": p.trials, "seed": p.seed,
                "estimate": p.estimate}
    return base_result(bases.base_report(act, budget=args.budget))


COMMANDS = {
    "classes": _cmd_classes, "fpr": _cmd_fpr, "mu": _cmd_mu, "graph": _cmd_graph,
    "spread": _cmd_spread, "uspread": _cmd_uspread, "pgen2": _cmd_pgen2,
    "genus-screen": _cmd_genus_screen, "genus-of": _cmd_genus_of,
    "ind-table": _cmd_ind_table, "base": _cmd_base,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="master seed (overrides FPRLAB_SEED)")
    common.add_argument("--config", help="key=value config file")
    common.add_argument("--format", choices=("json", "csv"), help="output format")
    common.add_argument("--budget", type=int, help="node budget for exhaustive searches")

    p = argparse.ArgumentParser(prog="fprlab", description="Exact fixed point ratio toolkit.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("spec", help="group[@action], e.g. sym:5@ksets:2")
        if name == "graph":
            sp.add_argument("--chromatic", action="store_true", help="also compute the chromatic number")
        if name == "uspread":
            sp.add_argument("--y", required=True, help="element y in cycle notation")
            sp.add_argument("--k", type=int, required=True)
        if name == "pgen2":
            sp.add_argument("--estimate", action="store_true")
            sp.add_argument("--samples", type=int, default=20000)
        if name == "genus-screen":
            sp.add_argument("--g", type=int, default=0)
            sp.add_argument("--insoluble-filter", action="store_true")
            sp.add_argument("--kmax", type=int, default=8)
        if name == "genus-of":
            sp.add_argument("--tuple", required=True, help="file with one permutation per line")
        if name == "base":
            mode = sp.add_mutually_exclusive_group()
            mode.add_argument("--exact", action="store_true")
            mode.add_argument("--prob", action="store_true")
            mode.add_argument("--qhat", action="store_true")
            sp.add_argument("--c", type=int)
            sp.add_argument("--trials", type=int, default=10000)
    rp = sub.add_parser("reproduce", parents=[common])
    rp.add_argument("which", nargs="*", help="table or entry names (default: all)")
    rp.add_argument("--long", action="store_true", help="include long-running entries")
    return p


def _config(args):
    cfg = RunConfig.from_file(args.config) if args.config else get_config()
    if args.seed is not None:
        cfg = dataclasses.replace(cfg, seed=args.seed)
    if args.format:
        cfg = dataclasses.replace(cfg, output=args.format)
    return cfg


def _reproduce(args, cfg, out):
    from .reproduce import reproduce_tables
    results = reproduce_tables(tuple(args.which), long=args.long)
    rows = [{"table": r.table, "name": r.name,
             "status": "skipped" if r.skipped else "pass" if r.passed else "fail",
             "expected": r.expected, "computed": r.computed} for r in results]
    failed = sum(r["status"] == "fail" for r in rows)
    env = envelope("reproduce", None, cfg.seed,
                   {"entries": rows, "passed": sum(r["status"] == "pass" for r in rows),
                    "failed": failed, "skipped": sum(r["status"] == "skipped" for r in rows)})
    out.write(render(env, cfg.output))
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
    except (OSError, ValueError) as exc:
        print(f"fprlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with using(cfg):
            if args.command == "reproduce":
                return _reproduce(args, cfg, out)
            if args.command == "base" and (args.prob or args.qhat) and args.c is None:
                print("fprlab: --c is required with --prob and --qhat", file=sys.stderr)
                return EXIT_USAGE
            g, a = parse_spec(args.spec)
            act = load(args.spec, cfg)
            result = COMMANDS[args.command](args, act)
            out.write(render(envelope(args.command, format_spec(g, a), cfg.seed, result),
                             cfg.output))
            return EXIT_OK
    except CapExceeded as exc:
        print(f"fprlab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FprlabError, OSError) as exc:
        print(f"fprlab: {exc}", file=sys.stderr)
        return EXIT_USAGE

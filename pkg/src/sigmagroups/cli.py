"""Command-line entry point: ``analyze``, ``verify`` and ``lattice`` subcommands."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .catalog import CatalogEntry, builtin_catalog, load_catalog
from .groups import DEFAULT_ORDER_CAP, GroupError
from .harness import SCOPES, analyze, sweep
from .lattice import enumerate_subgroups, to_dot, to_json
from .sigma import parse_partition

ANALYZE_CAP = DEFAULT_ORDER_CAP
SWEEP_MAX_ORDER = 100

log = logging.getLogger("sigmagroups")


def _entries(catalog: str | None, max_order: int) -> tuple[list[CatalogEntry], list]:
    if catalog is None:
        return builtin_catalog(max_order), []
    loaded = load_catalog(catalog)
    return list(loaded.entries), list(loaded.problems)


def resolve_group(ref: str, catalog: str | None = None) -> CatalogEntry:
    """A catalog entry by name, or by position when ``ref`` is an integer."""
    entries, _ = _entries(catalog, ANALYZE_CAP)
    if ref.isdigit():
        i = int(ref)
        if i >= len(entries):
            raise GroupError(f"catalog index {i} out of range (0..{len(entries) - 1})")
        return entries[i]
    for e in entries:
        if e.name == ref:
            return e
    raise GroupError(f"no group named {ref!r} in the catalog")


def cmd_analyze(args) -> int:
    entry = resolve_group(args.group, args.catalog)
    G = entry.build(ANALYZE_CAP)
    L = enumerate_subgroups(G, ANALYZE_CAP)
    rep = analyze(G, parse_partition(args.sigma), L, entry.name)
    print(json.dumps(rep.to_record(), sort_keys=True, indent=2))
    return 0


def cmd_verify(args) -> int:
    scopes = SCOPES if args.scope == "all" else (args.scope,)
    entries, problems = _entries(args.catalog, args.max_order)
    result = sweep(entries, scopes, args.partitions, jobs=args.jobs, max_order=args.max_order,
                   problems=problems)
    if args.out:
        result.write(args.out)
    s = result.summary
    print(f"cases: {s['cases']}  counterexamples: {s['counterexamples']}  "
          f"hypothesis holds: {s['hypothesis_holds']}  errors: {len(s['errors'])}")
    for scope, counts in s["by_scope"].items():
        print(f"  {scope}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    if s["lemma_instances_total"]:
        print(f"  lemma instances checked: {s['lemma_instances_total']}")
    for err in s["errors"]:
        print(f"  error: {err['name']}: {err['message']}", file=sys.stderr)
    return 0 if result.ok else 1


def cmd_lattice(args) -> int:
    entry = resolve_group(args.group, args.catalog)
    G = entry.build(ANALYZE_CAP)
    L = enumerate_subgroups(G, ANALYZE_CAP)
    sys.stdout.write(to_dot(L) if args.format == "dot" else to_json(L))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sigmagroups", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report on one group under one partition")
    a.add_argument("--group", required=True, help="catalog name or index")
    a.add_argument("--catalog", help="line-delimited catalog file (default: builtin)")
    a.add_argument("--sigma", required=True, help='"minimal", "one", or classes like "2,3|5"')
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="sweep a catalog and check every case")
    v.add_argument("--scope", choices=SCOPES + ("all",), default="all")
    v.add_argument("--catalog")
    v.add_argument("--max-order", type=int, default=SWEEP_MAX_ORDER)
    v.add_argument("--partitions", default="all", help='"all", "minimal", "one", or explicit text')
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="write line-delimited reports here")
    v.set_defaults(func=cmd_verify)

    lat = sub.add_parser("lattice", help="export the subgroup lattice")
    lat.add_argument("--group", required=True)
    lat.add_argument("--catalog")
    lat.add_argument("--format", choices=("dot", "json"), default="dot")
    lat.set_defaults(func=cmd_lattice)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

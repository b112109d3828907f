"""Groups to analyze: builtin families, catalog files, and prime-set partitions."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .groups import (
    DEFAULT_ORDER_CAP,
    CayleyGroup,
    GroupError,
    NamedFamilySpec,
    Permutation,
    family_generators,
    group_from_generators,
    parse_permutation,
)
from .sigma import SigmaPartition

MAX_PARTITION_PRIMES = 4


class CatalogError(GroupError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[str, ...]
    expected_order: int | None = None
    tags: tuple[str, ...] = ()

    def permutations(self) -> list[Permutation]:
        return [parse_permutation(g, self.degree) for g in self.generators]

    def build(self, order_cap: int = DEFAULT_ORDER_CAP) -> CayleyGroup:
        G = group_from_generators(self.permutations(), order_cap, name=self.name, degree=self.degree)
        if self.expected_order is not None and G.order != self.expected_order:
            raise CatalogError(f"{self.name}: closure has order {G.order}, expected {self.expected_order}")
        return G

    def to_record(self) -> dict:
        rec = {"name": self.name, "degree": self.degree, "generators": list(self.generators)}
        if self.expected_order is not None:
            rec["expected_order"] = self.expected_order
        if self.tags:
            rec["tags"] = list(self.tags)
        return rec


@dataclass(frozen=True)
class CatalogProblem:
    """A catalog line that could not be turned into a usable entry."""

    line: int
    name: str | None
    message: str


@dataclass
class LoadedCatalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    problems: list[CatalogProblem] = field(default_factory=list)


def _entry_from_spec(spec: NamedFamilySpec, order: int, tags: Iterable[str]) -> CatalogEntry:
    degree, gens, name = family_generators(spec)
    return CatalogEntry(name, degree, tuple(str(g) for g in gens), order, tuple(tags))


def _base_specs(max_order: int) -> list[tuple[NamedFamilySpec, int, str]]:
    specs: list[tuple[NamedFamilySpec, int, str]] = []
    for n in range(1, max_order + 1):
        specs.append((NamedFamilySpec("cyclic", (n,)), n, "cyclic"))
    for n in range(2, max_order // 2 + 1):
        specs.append((NamedFamilySpec("dihedral", (n,)), 2 * n, "dihedral"))
    for n, order in ((3, 6), (4, 24), (5, 120)):
        if order <= max_order:
            specs.append((NamedFamilySpec("symmetric", (n,)), order, "symmetric"))
    for n, order in ((4, 12), (5, 60)):
        if order <= max_order:
            specs.append((NamedFamilySpec("alternating", (n,)), order, "alternating"))
    if max_order >= 8:
        specs.append((NamedFamilySpec("quaternion"), 8, "quaternion"))
    for p in (2, 3, 5, 7):
        m = 3
        while p ** m <= max_order:
            specs.append((NamedFamilySpec("modular_p", (p, m)), p ** m, "modular"))
            m += 1
    return specs


# SL(2,3) acting on the 8 nonzero vectors of F_3^2
_SL23 = CatalogEntry("SL(2,3)", 8, ("(3 4 5)(6 8 7)", "(1 3 2 6)(4 5 8 7)"), 24, ("sl23",))


def builtin_catalog(max_order: int = 100) -> list[CatalogEntry]:
    """Named families up to ``max_order`` plus their pairwise direct products.

    Order: base families as listed, then products ``A x B`` for base entries
    A before-or-equal B (trivial factor excluded), sorted by (order, name).
    """
    if max_order < 1:
        return []
    base = _base_specs(max_order)
    entries = [_entry_from_spec(s, o, (t,)) for s, o, t in base]
    if max_order >= 24:
        entries.append(_SL23)
    nontrivial = [(s, o, t) for s, o, t in base if o > 1]
    products = []
    for i, (sa, oa, ta) in enumerate(nontrivial):
        for sb, ob, tb in nontrivial[i:]:
            if oa * ob <= max_order:
                spec = NamedFamilySpec("direct_product", (sa, sb))
                products.append(_entry_from_spec(spec, oa * ob, ("direct_product", ta, tb)))
    if max_order >= 48:
        for sb, ob, tb in nontrivial:
            if 24 * ob <= max_order:
                products.append(_product_with_sl23(sb, ob, tb))
    products.sort(key=lambda e: (e.expected_order, e.name))
    seen: set[str] = set()
    out = []
    for e in entries + products:
        if e.name not in seen:
            seen.add(e.name)
            out.append(e)
    return out


def _product_with_sl23(spec: NamedFamilySpec, order: int, tag: str) -> CatalogEntry:
    degree, gens, name = family_generators(spec)
    shifted = [Permutation(tuple(range(8)) + tuple(i + 8 for i in g.images)) for g in gens]
    first = [parse_permutation(t, 8) for t in _SL23.generators]
    widened = [Permutation(g.images + tuple(range(8, 8 + degree))) for g in first]
    return CatalogEntry(f"SL(2,3)x{name}", 8 + degree, tuple(str(g) for g in widened + shifted),
                        24 * order, ("direct_product", "sl23", tag))


def _entry_from_record(rec: dict) -> CatalogEntry:
    if not isinstance(rec, dict):
        raise CatalogError("record is not an object")
    try:
        name = rec["name"]
        degree = rec["degree"]
        gens = rec["generators"]
    except KeyError as exc:
        raise CatalogError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(name, str) or not isinstance(degree, int) or degree < 1:
        raise CatalogError("name must be text and degree a positive integer")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise CatalogError("generators must be a list of cycle strings")
    expected = rec.get("expected_order")
    if expected is not None and (not isinstance(expected, int) or expected < 1):
        raise CatalogError("expected_order must be a positive integer")
    tags = rec.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise CatalogError("tags must be a list of text")
    entry = CatalogEntry(name, degree, tuple(gens), expected, tuple(tags))
    entry.permutations()
    return entry


def load_catalog(path: str | Path, order_cap: int = DEFAULT_ORDER_CAP,
                 check_orders: bool = True) -> LoadedCatalog:
    """Read a line-delimited JSON catalog.

    Blank lines and lines starting with ``#`` are skipped.  Lines that fail
    to parse, and entries whose closure order disagrees with
    ``expected_order``, become problems; loading carries on past them.
    """
    out = LoadedCatalog()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            name = None
            try:
                rec = json.loads(line)
                name = rec.get("name") if isinstance(rec, dict) else None
                entry = _entry_from_record(rec)
                if check_orders and entry.expected_order is not None:
                    entry.build(order_cap)
            except (json.JSONDecodeError, GroupError) as exc:
                out.problems.append(CatalogProblem(lineno, name, str(exc)))
                continue
            out.entries.append(entry)
    return out


def dump_catalog(entries: Iterable[CatalogEntry], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps(e.to_record()) + "\n")


def _set_partitions(items: list[int]) -> list[list[list[int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for part in _set_partitions(rest):
        out.append([[first]] + part)
        for i in range(len(part)):
            out.append(part[:i] + [[first] + part[i]] + part[i + 1:])
    return out


def prime_partitions(primes: Iterable[int], cap: int = MAX_PARTITION_PRIMES) -> list[SigmaPartition]:
    """Every set partition of ``primes`` (unlisted primes become singletons).

    Classes are sorted internally and between themselves; the list is sorted
    from the finest partition to the coarsest, ties by class lists.
    """
    items = sorted(set(primes))
    if len(items) > cap:
        raise CatalogError(f"{len(items)} primes exceed the partition cap {cap}")
    parts = []
    for part in _set_partitions(items):
        classes = sorted(sorted(c) for c in part)
        parts.append(classes)
    parts.sort(key=lambda cs: (-len(cs), cs))
    return [SigmaPartition.from_classes(cs) for cs in parts]

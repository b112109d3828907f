"""Partitions of the primes and the sigma-predicates built on them.

A class of a partition is identified by its smallest prime; primes not
listed in any class form singleton classes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import (
    CayleyGroup,
    ElementSet,
    GroupError,
    is_permutable,
    prime_factorization,
    product_set,
)
from .lattice import SubgroupLattice, chief_series


class PartitionError(GroupError):
    pass


@dataclass(frozen=True)
class SigmaPartition:
    classes: tuple[tuple[int, ...], ...] = ()
    universal: bool = False  # one class holding every prime

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> SigmaPartition:
        seen: set[int] = set()
        out = []
        for c in classes:
            c = tuple(sorted(set(c)))
            if not c:
                raise PartitionError("empty class")
            for p in c:
                if not _is_prime(p):
                    raise PartitionError(f"{p} is not a prime")
                if p in seen:
                    raise PartitionError(f"prime {p} appears in two classes")
                seen.add(p)
            if len(c) > 1:
                out.append(c)
        return cls(tuple(sorted(out)))

    def lookup(self, p: int) -> int:
        """Class id (smallest member prime) of the class containing p."""
        if self.universal:
            return 2
        for c in self.classes:
            if p in c:
                return c[0]
        return p

    def members(self, cid: int, universe: Iterable[int]) -> list[int]:
        return [p for p in universe if self.lookup(p) == cid]

    @property
    def text(self) -> str:
        if self.universal:
            return "one"
        if not self.classes:
            return "minimal"
        return "|".join(",".join(map(str, c)) for c in self.classes)

    def __str__(self) -> str:
        return self.text


MINIMAL = SigmaPartition()
ONE = SigmaPartition(universal=True)


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == {n: 1}


def parse_partition(text: str) -> SigmaPartition:
    """``"minimal"``, ``"one"``, or classes like ``"2,3|5"``."""
    t = text.strip()
    if t == "minimal":
        return MINIMAL
    if t == "one":
        return ONE
    if not t:
        raise PartitionError("empty partition text")
    classes = []
    for chunk in t.split("|"):
        cls = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise PartitionError(f"bad prime token {tok!r} in {text!r}")
            cls.append(int(tok))
        classes.append(cls)
    return SigmaPartition.from_classes(classes)


def sigma_of(partition: SigmaPartition, n: int) -> frozenset[int]:
    """Ids of the classes meeting the prime divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    return frozenset(partition.lookup(p) for p in prime_factorization(n))


def is_pi_number(partition: SigmaPartition, n: int, pi: Iterable[int]) -> bool:
    return sigma_of(partition, n) <= frozenset(pi)


def is_sigma_primary(partition: SigmaPartition, n: int) -> bool:
    return len(sigma_of(partition, n)) <= 1


def sigma_part(partition: SigmaPartition, n: int, pi: Iterable[int]) -> int:
    """Largest divisor of n that is a pi-number."""
    pi = frozenset(pi)
    out = 1
    for p, e in prime_factorization(n).items():
        if partition.lookup(p) in pi:
            out *= p ** e
    return out


def _check_lattice(G: CayleyGroup, L: SubgroupLattice) -> None:
    if L.group is not G:
        raise GroupError("lattice belongs to a different group")


def hall_nodes(L: SubgroupLattice, partition: SigmaPartition, pi: Iterable[int],
               within: int | None = None) -> list[int]:
    """Lattice nodes that are Hall pi-subgroups of node ``within`` (default G)."""
    top = L.top if within is None else within
    target = sigma_part(partition, L.orders[top], pi)
    down = L.down[top]
    return [i for i in L.nodes_of_order(target) if (down >> i) & 1]


def hall_subgroups(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition,
                   pi: Iterable[int]) -> list[ElementSet]:
    _check_lattice(G, L)
    return [L.nodes[i] for i in hall_nodes(L, partition, pi)]


@dataclass(frozen=True)
class HallSet:
    """One Hall sigma_i-subgroup per class of sigma(G), keyed by class id."""

    parent: CayleyGroup = field(repr=False)
    members: dict[int, ElementSet] = field(hash=False)
    nodes: dict[int, int] = field(default_factory=dict, hash=False)

    def __iter__(self):
        return iter(self.members.values())


def _hall_choices(L: SubgroupLattice, partition: SigmaPartition) -> tuple[list[int], list[list[int]]]:
    cids = sorted(sigma_of(partition, L.group.order))
    return cids, [hall_nodes(L, partition, [c]) for c in cids]


def _hall_set(L: SubgroupLattice, cids: Sequence[int], nodes: Sequence[int]) -> HallSet:
    return HallSet(L.group, {c: L.nodes[i] for c, i in zip(cids, nodes)}, dict(zip(cids, nodes)))


def complete_hall_sets(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition,
                       limit: int | None = None) -> list[HallSet]:
    _check_lattice(G, L)
    cids, choices = _hall_choices(L, partition)
    combos = itertools.product(*choices)
    if limit is not None:
        combos = itertools.islice(combos, limit)
    return [_hall_set(L, cids, c) for c in combos]


def is_sigma_group(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition) -> bool:
    _check_lattice(G, L)
    return all(_hall_choices(L, partition)[1])


def _permutable_nodes(L: SubgroupLattice, a: int, b: int) -> bool:
    cache = L.cache.setdefault("permutable", {})
    key = (a, b) if a <= b else (b, a)
    if key not in cache:
        cache[key] = is_permutable(L.group, L.nodes[a], L.nodes[b])
    return cache[key]


def sigma_bases(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition,
                limit: int | None = None) -> list[HallSet]:
    """Complete Hall sigma-sets whose members permute pairwise."""
    _check_lattice(G, L)
    cids, choices = _hall_choices(L, partition)
    out: list[HallSet] = []

    def extend(chosen: list[int]) -> bool:
        if len(chosen) == len(cids):
            out.append(_hall_set(L, cids, chosen))
            return limit is not None and len(out) >= limit
        for h in choices[len(chosen)]:
            if all(_permutable_nodes(L, h, k) for k in chosen):
                if extend(chosen + [h]):
                    return True
        return False

    extend([])
    return out


def chief_factors_sigma_primary(L: SubgroupLattice, partition: SigmaPartition) -> bool:
    return all(is_sigma_primary(partition, f) for f in chief_series(L.group, L).factor_orders)


def is_sigma_soluble(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition) -> bool:
    _check_lattice(G, L)
    return chief_factors_sigma_primary(L, partition)


def is_sigma_nilpotent_node(L: SubgroupLattice, partition: SigmaPartition, k: int) -> bool:
    """Sigma-nilpotency of the subgroup at node k, read off the lattice."""
    for c in sigma_of(partition, L.orders[k]):
        halls = hall_nodes(L, partition, [c], within=k)
        if not halls or not all(L.normal_in(h, k) for h in halls):
            return False
    return True


def is_sigma_nilpotent(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition) -> bool:
    _check_lattice(G, L)
    return is_sigma_nilpotent_node(L, partition, L.top)


@dataclass(frozen=True)
class DispersiveWitness:
    ordering: tuple[int, ...]
    series: tuple[ElementSet, ...]
    hall_set: HallSet
    series_nodes: tuple[int, ...] = ()

    def to_record(self) -> dict:
        return {
            "ordering": list(self.ordering),
            "series_orders": [len(s) for s in self.series],
            "series_nodes": list(self.series_nodes),
            "hall_nodes": [self.hall_set.nodes[c] for c in self.ordering],
        }


def _orderings(cids: Sequence[int], ordering: Sequence[int] | None) -> Iterable[tuple[int, ...]]:
    if ordering is None:
        return itertools.permutations(sorted(cids))
    if sorted(ordering) != sorted(cids) or len(set(ordering)) != len(ordering):
        raise PartitionError(f"ordering {list(ordering)} does not enumerate sigma(G) = {sorted(cids)}")
    return [tuple(ordering)]


def is_sigma_dispersive(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition,
                        ordering: Sequence[int] | None = None) -> DispersiveWitness | None:
    """Search for a normal series ``1 = G_1 < ... < G_(t+1) = G`` with
    ``G_i H_i = G_(i+1)`` for Hall sigma-subgroups ``H_i``.

    Orderings of sigma(G) are tried in lexicographic order of class ids and
    candidates in canonical node order; the first witness found is returned.
    Since ``G_i`` is normal and of order coprime to a Hall subgroup ``H``
    for a new class, ``G_i H`` equals a normal subgroup N of order
    ``|G_i| |H|`` exactly when H lies in N.
    """
    _check_lattice(G, L)
    cids, choices = _hall_choices(L, partition)
    orderings = _orderings(cids, ordering)
    if not all(choices):
        return None
    halls = dict(zip(cids, choices))
    normals = [i for i, f in enumerate(L.normal_flags) if f]

    def search(order: tuple[int, ...], step: int, cur: int) -> list[tuple[int, int]] | None:
        if step == len(order):
            return [] if cur == L.top else None
        c = order[step]
        target = L.orders[cur] * L.orders[halls[c][0]]
        for n in normals:
            if L.orders[n] != target or not (L.down[n] >> cur) & 1:
                continue
            h = next((h for h in halls[c] if (L.down[n] >> h) & 1), None)
            if h is None:
                continue
            rest = search(order, step + 1, n)
            if rest is not None:
                return [(n, h)] + rest
        return None

    for order in orderings:
        found = search(order, 0, 0)
        if found is not None:
            series_nodes = (0,) + tuple(n for n, _ in found)
            hall = _hall_set(L, order, [h for _, h in found])
            return DispersiveWitness(order, tuple(L.nodes[i] for i in series_nodes), hall, series_nodes)
    return None


def verify_dispersive_witness(G: CayleyGroup, partition: SigmaPartition, w: DispersiveWitness) -> bool:
    """Re-check a witness from scratch on the group table."""
    from .groups import is_normal

    cids = sorted(sigma_of(partition, G.order)) if G.order > 1 else []
    if sorted(w.ordering) != cids or len(w.series) != len(cids) + 1:
        return False
    if w.series[0].bits != 1 or w.series[-1].bits != G.full_bits:
        return False
    for s in w.series:
        if not s.is_subgroup() or not is_normal(G, s):
            return False
    for i, c in enumerate(w.ordering):
        H = w.hall_set.members.get(c)
        if H is None or not H.is_subgroup():
            return False
        # Hall sigma_c-subgroup: order is a sigma_c-number, index a sigma_c'-number
        if sigma_of(partition, len(H)) - {c} or c in sigma_of(partition, G.order // len(H)):
            return False
        if not len(w.series[i]) < len(w.series[i + 1]):
            return False
        if product_set(G, w.series[i], H) != w.series[i + 1]:
            return False
    return True


def has_sylow_tower(G: CayleyGroup, L: SubgroupLattice) -> bool:
    return is_sigma_dispersive(G, L, MINIMAL) is not None

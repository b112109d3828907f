"""Subgroup lattices: enumeration, cover relation, n-maximal depths, chief series."""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import bits as _bits
from .groups import (
    CayleyGroup,
    ElementSet,
    GroupError,
    commutator_subgroup,
)

DEFAULT_LATTICE_CAP = 128


class LatticeCapExceeded(GroupError):
    pass


class InsolubleGroupError(GroupError):
    pass


def _canonical_key(group: CayleyGroup, bits: int):
    return (bits.bit_count(), tuple(_bits.iter_bits(bits)))


class SubgroupLattice:
    """All subgroups of a group, in canonical order.

    Nodes are sorted by order, then by their sorted element-index lists.
    Node ``i`` has element bitset ``masks[i]``.  Relations between nodes are
    kept as node bitsets (bit ``j`` of ``down[i]`` set iff node j <= node i).
    """

    def __init__(self, group: CayleyGroup, masks: Sequence[int], gens: dict[int, list[int]],
                 joins: dict[int, set[int]]):
        self.group = group
        order = sorted(masks, key=lambda b: _canonical_key(group, b))
        self.masks: list[int] = order
        self.index: dict[int, int] = {b: i for i, b in enumerate(order)}
        self.gens: list[list[int]] = [gens[b] for b in order]
        self.nodes: list[ElementSet] = [ElementSet(group, b) for b in order]
        self.orders: list[int] = [b.bit_count() for b in order]
        self.top = len(order) - 1
        n_nodes = len(order)

        # covers: the minimal joins <H, g> are exactly the subgroups covering H
        self.covered_by: list[list[int]] = [[] for _ in range(n_nodes)]
        self.maximal_in: list[list[int]] = [[] for _ in range(n_nodes)]
        for h_bits, ks in joins.items():
            h = self.index[h_bits]
            cands = sorted(ks, key=lambda b: b.bit_count())
            minimal: list[int] = []
            for k in cands:
                if not any(m & ~k == 0 for m in minimal):
                    minimal.append(k)
            for k in sorted(self.index[m] for m in minimal):
                self.covered_by[h].append(k)
                self.maximal_in[k].append(h)
        for lst in self.maximal_in:
            lst.sort()

        self.down: list[int] = [0] * n_nodes
        for k in range(n_nodes):
            acc = 1 << k
            for h in self.maximal_in[k]:
                acc |= self.down[h]
            self.down[k] = acc
        self.up: list[int] = [0] * n_nodes
        for h in range(n_nodes - 1, -1, -1):
            acc = 1 << h
            for k in self.covered_by[h]:
                acc |= self.up[k]
            self.up[h] = acc

        # depths[i]: bit n set iff node i is n-maximal in G
        self.depths: list[int] = [0] * n_nodes
        self.depths[self.top] = 1
        for k in range(n_nodes - 1, -1, -1):
            d = self.depths[k] << 1
            for h in self.maximal_in[k]:
                self.depths[h] |= d

        conj = group.conj
        self.normalizer: list[int] = []
        for b in order:
            member = _bits.to_bool(b, group.order)
            nbits = _bits.from_bool(member[conj[:, np.flatnonzero(member)]].all(axis=1))
            self.normalizer.append(self.index[nbits])
        self.normal_flags: list[bool] = [self.normalizer[i] == self.top for i in range(n_nodes)]
        self._by_order: dict[int, list[int]] = {}
        for i, o in enumerate(self.orders):
            self._by_order.setdefault(o, []).append(i)
        # per-analysis memo tables (permutability, residuals, ...)
        self.cache: dict = {}

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self) -> str:
        return f"SubgroupLattice({self.group.name or '?'}, {len(self)} subgroups)"

    def node_of(self, H: ElementSet | int) -> int:
        bits = H if isinstance(H, int) else H.bits
        try:
            return self.index[bits]
        except KeyError:
            raise GroupError("not a subgroup in this lattice") from None

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Edges ``(H, K)`` with H maximal in K, as node indices."""
        return [(h, k) for k in range(len(self)) for h in self.maximal_in[k]]

    @property
    def depth_sets(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for i, d in enumerate(self.depths):
            for n in _bits.iter_bits(d):
                out.setdefault(n, set()).add(i)
        return {n: frozenset(s) for n, s in sorted(out.items())}

    @property
    def max_depth(self) -> int:
        return max(d.bit_length() - 1 for d in self.depths)

    def nodes_of_order(self, n: int) -> list[int]:
        return self._by_order.get(n, [])

    def meet(self, a: int, b: int) -> int:
        return self.index[self.masks[a] & self.masks[b]]

    def join(self, a: int, b: int) -> int:
        """Smallest common overgroup; the lowest canonical index among common overgroups."""
        common = self.up[a] & self.up[b]
        return (common & -common).bit_length() - 1

    @property
    def normal_subgroups_within(self) -> list[int]:
        """Node bitset per node k of the subgroups normal in k."""
        if "normal_within" not in self.cache:
            out = [0] * len(self)
            for h in range(len(self)):
                for k in _bits.iter_bits(self.up[h] & self.down[self.normalizer[h]]):
                    out[k] |= 1 << h
            self.cache["normal_within"] = out
        return self.cache["normal_within"]

    def subgroups_of(self, k: int) -> list[int]:
        return list(_bits.iter_bits(self.down[k]))

    def overgroups_of(self, h: int) -> list[int]:
        return list(_bits.iter_bits(self.up[h]))

    def normal_in(self, h: int, k: int) -> bool:
        """Whether node h is a normal subgroup of node k (h <= k assumed)."""
        return (self.down[self.normalizer[h]] >> k) & 1 == 1

    def maximal_subgroups(self, k: int | None = None) -> list[int]:
        return list(self.maximal_in[self.top if k is None else k])


def _prime_power_cyclics(G: CayleyGroup) -> list[tuple[int, int]]:
    """One (generator, bits) pair per cyclic subgroup of prime-power order > 1."""
    out: dict[int, int] = {}
    orders = G.element_orders
    for x in range(1, G.order):
        if len(_factor_primes(int(orders[x]))) != 1:
            continue
        bits = 1
        y = x
        while y != 0:
            bits |= 1 << y
            y = G.mul(y, x)
        out.setdefault(bits, x)
    return sorted(((g, b) for b, g in out.items()), key=lambda t: _canonical_key(G, t[1]))


def _factor_primes(n: int) -> list[int]:
    from .groups import prime_factorization
    return list(prime_factorization(n)) if n > 1 else []


def enumerate_subgroups(G: CayleyGroup, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Build the full subgroup lattice by repeated single-element extension.

    Every subgroup is generated by its elements of prime-power order, so it
    suffices to extend each known subgroup H by one cyclic subgroup of
    prime-power order at a time.  The distinct extensions of H that are
    minimal under inclusion are the subgroups covering H.
    """
    if G.order > cap:
        raise LatticeCapExceeded(f"order {G.order} exceeds lattice cap {cap}")
    pp = _prime_power_cyclics(G)
    gens: dict[int, list[int]] = {1: []}
    joins: dict[int, set[int]] = {}
    queue = [1]
    while queue:
        h = queue.pop()
        member = _bits.to_bool(h, G.order)
        found: set[int] = set()
        # <H, c> for c already inside a found extension K is contained in K;
        # it still has to be computed since it may be a smaller cover
        for g, c in pp:
            if c & ~h == 0:
                continue
            k, kg = G._extend(h, gens[h], g, member)
            found.add(k)
            if k not in gens:
                gens[k] = kg
                queue.append(k)
        joins[h] = found
    return SubgroupLattice(G, list(gens), gens, joins)


def n_maximal_set(L: SubgroupLattice, n: int) -> frozenset[int]:
    """Nodes that end some maximal chain of length n from G."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return frozenset(i for i, d in enumerate(L.depths) if (d >> n) & 1)


def normal_subgroups(G: CayleyGroup, L: SubgroupLattice) -> list[int]:
    return [i for i, f in enumerate(L.normal_flags) if f]


@dataclass(frozen=True)
class ChiefSeries:
    chain: tuple[ElementSet, ...]
    factor_orders: tuple[int, ...]


def chief_series(G: CayleyGroup, L: SubgroupLattice,
                 choose: Callable[[list[int]], int] | None = None) -> ChiefSeries:
    """A chief series built greedily through the normal subgroups of G.

    By default the next term is the first (canonical order) normal subgroup
    that minimally contains the current one; ``choose`` may pick any of the
    minimal candidates instead.
    """
    normals = normal_subgroups(G, L)
    cur = 0
    chain = [cur]
    while cur != L.top:
        over = [k for k in normals if k != cur and (L.down[k] >> cur) & 1]
        minimal = [k for k in over if not any(j != k and (L.down[k] >> j) & 1 for j in over)]
        cur = minimal[0] if choose is None else choose(minimal)
        chain.append(cur)
    factors = tuple(L.orders[b] // L.orders[a] for a, b in zip(chain, chain[1:]))
    return ChiefSeries(tuple(L.nodes[i] for i in chain), factors)


def _prime_power(n: int) -> tuple[int, int] | None:
    from .groups import prime_factorization
    fac = prime_factorization(n)
    return next(iter(fac.items())) if len(fac) == 1 else None


def rank(G: CayleyGroup, L: SubgroupLattice) -> int:
    """Largest k such that G has a chief factor of order p^k (soluble G only)."""
    if G.order == 1:
        return 0
    factors = chief_series(G, L).factor_orders
    ks = []
    for f in factors:
        pp = _prime_power(f)
        if pp is None:
            raise InsolubleGroupError(f"{G.name} is not soluble (chief factor of order {f})")
        ks.append(pp[1])
    return max(ks)


def derived_series(G: CayleyGroup) -> list[ElementSet]:
    series = [G.whole()]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_soluble(G: CayleyGroup) -> bool:
    return derived_series(G)[-1].bits == 1


def frattini_subgroup(G: CayleyGroup, L: SubgroupLattice) -> ElementSet:
    bits = G.full_bits
    for m in L.maximal_in[L.top]:
        bits &= L.masks[m]
    return ElementSet(G, bits)


def lattice_for(G: CayleyGroup, cap: int = DEFAULT_LATTICE_CAP, warn_above: int = 128) -> SubgroupLattice:
    if G.order > warn_above:
        warnings.warn(f"lattice of {G.name} (order {G.order}) may be slow", RuntimeWarning, stacklevel=2)
    return enumerate_subgroups(G, cap)


# ---------------------------------------------------------------------------
# export


def to_dot(L: SubgroupLattice) -> str:
    """Cover DAG in Graphviz syntax; normal subgroups drawn double-circled."""
    lines = [f'digraph "{L.group.name}" {{', "  rankdir=BT;"]
    for i, o in enumerate(L.orders):
        shape = "doublecircle" if L.normal_flags[i] else "circle"
        lines.append(f'  n{i} [label="{o}:{i}", shape={shape}];')
    for h, k in L.covers:
        lines.append(f"  n{h} -> n{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(L: SubgroupLattice) -> str:
    doc = {
        "group": L.group.name,
        "order": L.group.order,
        "nodes": [
            {
                "index": i,
                "order": L.orders[i],
                "elements": [int(x) for x in _bits.iter_bits(b)],
                "normal": L.normal_flags[i],
                "depths": list(_bits.iter_bits(L.depths[i])),
            }
            for i, b in enumerate(L.masks)
        ],
        "covers": [list(e) for e in L.covers],
    }
    return json.dumps(doc, sort_keys=True) + "\n"

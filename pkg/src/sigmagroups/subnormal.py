"""Subnormality and sigma-subnormality with witness chains."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import bits as _bits
from .groups import CayleyGroup, ElementSet, core_in, is_normal, normal_closure, \
    is_permutable, product_set
from .lattice import SubgroupLattice
from .sigma import SigmaPartition, _check_lattice, is_sigma_primary, sigma_of

NORMAL = "normal"
SIGMA_PRIMARY = "sigma-primary-quotient"


def is_subnormal(G: CayleyGroup, H: ElementSet) -> bool:
    """Iterate normal closures ``H^G >= (H^G)^... `` until they stop shrinking."""
    cur = G.whole()
    while True:
        nxt = normal_closure(G, H, cur)
        if nxt == H:
            return True
        if nxt == cur:
            return False
        cur = nxt


@dataclass(frozen=True)
class SubnormalWitness:
    chain: tuple[ElementSet, ...]
    step_kinds: tuple[str, ...]
    chain_nodes: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.step_kinds)

    def to_record(self) -> dict:
        return {"chain": list(self.chain_nodes), "step_kinds": list(self.step_kinds)}


def _residual(L: SubgroupLattice, partition: SigmaPartition, k: int, cid: int) -> int:
    """Node of the smallest normal subgroup N of node k with k/N a sigma_cid-group.

    It is generated by the elements of k whose order is a sigma_cid'-number.
    """
    cache = L.cache.setdefault(("residual", partition), {})
    key = (k, cid)
    if key not in cache:
        G = L.group
        outside = _outside_elements(L, partition, cid)
        bits, _ = G._generate(L.masks[k] & outside)
        cache[key] = L.index[bits]
    return cache[key]


def _outside_elements(L: SubgroupLattice, partition: SigmaPartition, cid: int) -> int:
    cache = L.cache.setdefault(("outside", partition), {})
    if cid not in cache:
        orders = L.group.element_orders
        cache[cid] = _bits.from_indices(
            x for x in range(L.group.order) if cid not in sigma_of(partition, int(orders[x])))
    return cache[cid]


def step_candidates(L: SubgroupLattice, partition: SigmaPartition, k: int) -> int:
    """Node bitset of H <= k with H normal in k or |k : core_k(H)| sigma-primary.

    ``k / core_k(H)`` is a sigma_i-group iff ``core_k(H)`` (equivalently H)
    contains the sigma_i-residual of k, so the second alternative is a union
    of overgroup sets of residuals.
    """
    cache = L.cache.setdefault(("steps", partition), {})
    if k not in cache:
        acc = L.normal_subgroups_within[k]
        for cid in sigma_of(partition, L.orders[k]):
            acc |= L.up[_residual(L, partition, k, cid)]
        cache[k] = acc & L.down[k]
    return cache[k]


class SigmaSubnormalSearch:
    """Breadth-first search down from ``top`` along sigma-subnormal steps.

    After construction ``reached`` is the node bitset of all subgroups that
    are sigma-subnormal in ``top``, and ``parent`` links give a shortest
    chain from each of them up to ``top``.
    """

    def __init__(self, L: SubgroupLattice, partition: SigmaPartition, top: int | None = None):
        self.lattice = L
        self.partition = partition
        self.top = L.top if top is None else top
        self.parent: dict[int, int] = {self.top: -1}
        reached = 1 << self.top
        queue = deque([self.top])
        while queue:
            k = queue.popleft()
            fresh = step_candidates(L, partition, k) & ~reached
            reached |= fresh
            for h in _bits.iter_bits(fresh):
                self.parent[h] = k
                queue.append(h)
        self.reached = reached

    def __contains__(self, node: int) -> bool:
        return (self.reached >> node) & 1 == 1

    def witness(self, node: int) -> SubnormalWitness | None:
        if node not in self:
            return None
        L = self.lattice
        chain = [node]
        while self.parent[chain[-1]] >= 0:
            chain.append(self.parent[chain[-1]])
        kinds = tuple(NORMAL if L.normal_in(a, b) else SIGMA_PRIMARY for a, b in zip(chain, chain[1:]))
        return SubnormalWitness(tuple(L.nodes[i] for i in chain), kinds, tuple(chain))


def sigma_subnormal_search(L: SubgroupLattice, partition: SigmaPartition,
                           top: int | None = None) -> SigmaSubnormalSearch:
    cache = L.cache.setdefault(("search", partition), {})
    key = L.top if top is None else top
    if key not in cache:
        cache[key] = SigmaSubnormalSearch(L, partition, key)
    return cache[key]


def is_sigma_subnormal(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition,
                       A: ElementSet) -> SubnormalWitness | None:
    """Shortest chain from A to G whose steps are normal or have sigma-primary quotient."""
    _check_lattice(G, L)
    return sigma_subnormal_search(L, partition).witness(L.node_of(A))


def verify_subnormal_witness(G: CayleyGroup, partition: SigmaPartition, A: ElementSet,
                             w: SubnormalWitness) -> bool:
    """Check every step of a witness against its declared kind, from the table."""
    chain = w.chain
    if not chain or chain[0] != A or chain[-1].bits != G.full_bits:
        return False
    if len(w.step_kinds) != len(chain) - 1:
        return False
    for lo, hi, kind in zip(chain, chain[1:], w.step_kinds):
        if not (lo.is_subgroup() and hi.is_subgroup() and lo <= hi):
            return False
        if kind == NORMAL:
            if not is_normal(G, lo, hi):
                return False
        elif kind == SIGMA_PRIMARY:
            if not is_sigma_primary(partition, len(hi) // len(core_in(G, hi, lo))):
                return False
        else:
            return False
    return True


def sigma_subnormal_nodes(L: SubgroupLattice, partition: SigmaPartition, top: int | None = None) -> int:
    return sigma_subnormal_search(L, partition, top).reached


def subnormal_nodes(L: SubgroupLattice, top: int | None = None) -> int:
    """Node bitset of subgroups joined to ``top`` by a chain of normal steps."""
    cache = L.cache.setdefault("subnormal", {})
    top = L.top if top is None else top
    if top not in cache:
        within = L.normal_subgroups_within
        reached = 1 << top
        queue = deque([top])
        while queue:
            k = queue.popleft()
            fresh = within[k] & ~reached
            reached |= fresh
            queue.extend(_bits.iter_bits(fresh))
        cache[top] = reached
    return cache[top]


def all_in(nodes: int, reached: int) -> bool:
    return nodes & ~reached == 0


def m_sigma(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition) -> int:
    """Least n >= 1 with every n-maximal subgroup sigma-subnormal (0 for the trivial group)."""
    _check_lattice(G, L)
    return least_good_depth(L, sigma_subnormal_nodes(L, partition))


def depth_set_bits(L: SubgroupLattice, n: int) -> int:
    cache = L.cache.setdefault("depth_bits", {})
    if n not in cache:
        cache[n] = _bits.from_indices(i for i, d in enumerate(L.depths) if (d >> n) & 1)
    return cache[n]


def least_good_depth(L: SubgroupLattice, reached: int) -> int:
    """Least n >= 1 such that all n-maximal subgroups lie in ``reached``."""
    if L.group.order == 1:
        return 0
    n = 1
    while not all_in(depth_set_bits(L, n), reached):
        n += 1
    return n


def is_irreducible_pair(G: CayleyGroup, L: SubgroupLattice, A: ElementSet, B: ElementSet) -> bool:
    """A permutes with B and A is maximal in the subgroup AB."""
    _check_lattice(G, L)
    if not is_permutable(G, A, B):
        return False
    ab = L.node_of(product_set(G, A, B))
    return L.node_of(A) in L.maximal_in[ab]

"""Instance-by-instance checks of the structural facts behind the sweeps.

Each check counts the instances it examined and records any violation.
Checks that would visit a quadratic number of subgroup pairs visit at most
``PAIR_BUDGET`` of them, chosen by a fixed stride so runs are reproducible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import bits as _bits
from .groups import CayleyGroup, classify_p_group, is_nilpotent, product_set, quotient_group
from .lattice import (
    SubgroupLattice,
    enumerate_subgroups,
    frattini_subgroup,
    is_soluble,
    rank,
)
from .sigma import (
    MINIMAL,
    ONE,
    SigmaPartition,
    chief_factors_sigma_primary,
    complete_hall_sets,
    hall_nodes,
    is_sigma_dispersive,
    is_sigma_nilpotent_node,
    is_sigma_primary,
    sigma_bases,
    sigma_of,
    sigma_part,
    verify_dispersive_witness,
)
from .subnormal import (
    all_in,
    depth_set_bits,
    sigma_subnormal_nodes,
    sigma_subnormal_search,
    subnormal_nodes,
    verify_subnormal_witness,
)

PAIR_BUDGET = 4000
QUOTIENT_BUDGET = 4
BASIS_BUDGET = 24
WITNESS_BUDGET = 8

SUBGROUP_GROUP_CACHE = "subgroup_groups"


@dataclass
class Tally:
    instances: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    def check(self, name: str, ok: bool, **detail) -> None:
        self.instances[name] = self.instances.get(name, 0) + 1
        if not ok:
            self.violations.append({"lemma": name, **detail})


def _strided(items: list, budget: int) -> list:
    if len(items) <= budget:
        return items
    step = len(items) / budget
    return [items[int(i * step)] for i in range(budget)]


def _nodes(bits: int) -> list[int]:
    return list(_bits.iter_bits(bits))


# ---------------------------------------------------------------------------
# per (group, partition)


def check_sigma_subnormal_lemmas(L: SubgroupLattice, partition: SigmaPartition, tally: Tally,
                                 quotients: list) -> None:
    G = L.group
    S = sigma_subnormal_nodes(L, partition)
    s_nodes = _nodes(S)
    all_nodes = list(range(len(L)))

    # A sigma-subnormal in G => A meet K sigma-subnormal in K
    pairs = _strided([(a, k) for k in all_nodes for a in s_nodes], PAIR_BUDGET)
    for a, k in pairs:
        inside = sigma_subnormal_nodes(L, partition, top=k)
        meet = L.meet(a, k)
        tally.check("meet-with-subgroup", (inside >> meet) & 1 == 1, group=G.name, A=a, K=k)

    # K sigma-subnormal in A, A sigma-subnormal in G => K sigma-subnormal in G
    for a in s_nodes:
        inner = sigma_subnormal_nodes(L, partition, top=a)
        for k in _nodes(inner):
            tally.check("transitive", (S >> k) & 1 == 1, group=G.name, A=a, K=k)

    # intersections and joins of sigma-subnormal subgroups
    pairs = _strided([(a, k) for a, k in itertools.combinations(s_nodes, 2)], PAIR_BUDGET)
    for a, k in pairs:
        tally.check("meet-join-closed", (S >> L.meet(a, k)) & 1 == 1 and (S >> L.join(a, k)) & 1 == 1,
                    group=G.name, A=a, K=k)

    # transfer to and from quotients G/N
    for N, Q, LQ, proj in quotients:
        SQ = sigma_subnormal_nodes(LQ, partition)
        for a in s_nodes:
            image = np.zeros(Q.order, dtype=bool)
            image[proj[_bits.to_indices(L.masks[a], G.order)]] = True
            q = LQ.index[_bits.from_bool(image)]
            tally.check("quotient-image", (SQ >> q) & 1 == 1, group=G.name, N=N, A=a)
        for q in _nodes(SQ):
            pre = _bits.from_bool(_bits.to_bool(LQ.masks[q], Q.order)[proj])
            tally.check("quotient-preimage", (S >> L.index[pre]) & 1 == 1, group=G.name, N=N, Q=q)

    # A sigma-subnormal, H a Hall Pi-subgroup, A not a Pi'-group => A meet H is a Hall Pi-subgroup of A
    classes = sorted(sigma_of(partition, G.order)) if G.order > 1 else []
    for r in range(1, len(classes) + 1):
        for pi in itertools.combinations(classes, r):
            for h in hall_nodes(L, partition, pi):
                for a in s_nodes:
                    if sigma_of(partition, L.orders[a]) & frozenset(pi) if L.orders[a] > 1 else False:
                        meet = L.meet(a, h)
                        ok = meet != 0 and L.orders[meet] == sigma_part(partition, L.orders[a], pi)
                        tally.check("hall-meet", ok, group=G.name, A=a, H=h, pi=list(pi))

    # a sigma-subnormal sigma-Hall subgroup is normal
    for a in s_nodes:
        order = L.orders[a]
        index = G.order // order
        if order > 1 and index > 1 and not (sigma_of(partition, order) & sigma_of(partition, index)):
            tally.check("subnormal-hall-is-normal", L.normal_flags[a], group=G.name, A=a)

    # subnormal => sigma-subnormal; equality when every class meets pi(G) in one prime
    sub = subnormal_nodes(L)
    tally.check("subnormal=>sigma-subnormal", all_in(sub, S), group=G.name)
    if len(G.prime_factorization) == len(classes):
        for a in all_nodes:
            tally.check("prime-classes-coincide", ((S >> a) & 1) == ((sub >> a) & 1), group=G.name, A=a)

    # once all n-maximal subgroups are sigma-subnormal, deeper levels are too and one level up is sigma-nilpotent
    for n in range(1, L.max_depth + 2):
        if not all_in(depth_set_bits(L, n), S):
            continue
        tally.check("depth-propagates", all_in(depth_set_bits(L, n + 1), S), group=G.name, n=n)
        if n > 1:
            for m in _nodes(depth_set_bits(L, n - 1)):
                tally.check("nilpotent-one-level-up", is_sigma_nilpotent_node(L, partition, m), group=G.name, n=n, M=m)

    # witnesses re-verified from the table
    search = sigma_subnormal_search(L, partition)
    for a in _strided(s_nodes, WITNESS_BUDGET):
        w = search.witness(a)
        tally.check("subnormal-witness", verify_subnormal_witness(G, partition, L.nodes[a], w),
                    group=G.name, A=a)


def _elementary_abelian_sylow(L: SubgroupLattice, h: int) -> bool:
    G = L.group
    order = L.orders[h]
    fac = G.prime_factorization
    primes = [p for p in fac if order % p == 0]
    if len(primes) != 1:
        return False
    p = primes[0]
    if order != p ** fac[p]:
        return False
    idx = _bits.to_indices(L.masks[h], G.order)
    sub = G.table[np.ix_(idx, idx)]
    return bool((sub == sub.T).all() and (G.element_orders[idx] <= p).all())


def check_sigma_core_lemmas(L: SubgroupLattice, partition: SigmaPartition, case, tally: Tally) -> None:
    G = L.group
    soluble_sigma = case.sigma_soluble
    classes = sorted(sigma_of(partition, G.order)) if G.order > 1 else []

    for hs in complete_hall_sets(G, L, partition, limit=BASIS_BUDGET):
        for c, H in hs.members.items():
            order, index = len(H), G.order // len(H)
            ok = order * index == G.order and sigma_of(partition, order) <= {c} \
                and c not in sigma_of(partition, index)
            tally.check("hall-arithmetic", ok, group=G.name, cls=c)

    if case.sigma_nilpotent:
        for ordering in itertools.permutations(classes):
            w = is_sigma_dispersive(G, L, partition, ordering)
            tally.check("nilpotent=>dispersive", w is not None and verify_dispersive_witness(G, partition, w),
                        group=G.name, ordering=list(ordering))
    if case.witness is not None:
        tally.check("dispersive-witness", bool(case.witness_ok), group=G.name)

    if soluble_sigma:
        bases = sigma_bases(G, L, partition, limit=BASIS_BUDGET)
        if is_soluble(G):
            tally.check("soluble=>sigma-basis", bool(bases), group=G.name)
        # irreducible pairs inside a sigma-basis: the larger partner is an elementary abelian Sylow subgroup
        perm_cache = L.cache.setdefault("product_nodes", {})
        for basis in bases:
            members = [basis.nodes[c] for c in classes]
            for hi, hj in itertools.permutations(members, 2):
                key = (hi, hj) if hi <= hj else (hj, hi)
                if key not in perm_cache:
                    prod = product_set(G, L.nodes[hi], L.nodes[hj]).bits
                    perm_cache[key] = L.index.get(prod, -1)
                ab = perm_cache[key]
                if ab >= 0 and hi in L.maximal_in[ab]:
                    tally.check("irreducible-pair-elementary", _elementary_abelian_sylow(L, hj), group=G.name, Hi=hi, Hj=hj)
        # maximal subgroups have sigma-primary index, and every class occurs as such an index
        maximals = L.maximal_in[L.top]
        for m in maximals:
            tally.check("maximal-index-primary", is_sigma_primary(partition, G.order // L.orders[m]), group=G.name, M=m)
        for c in classes:
            ok = any(sigma_of(partition, G.order // L.orders[m]) <= {c} for m in maximals)
            tally.check("maximal-index-each-class", ok, group=G.name, cls=c)
        # pointwise: subgroups of a sigma-soluble group are sigma-soluble
        for k in _strided(list(range(len(L))), 64):
            tally.check("subgroup-sigma-soluble", _sigma_soluble_node(L, partition, k), group=G.name, K=k)


def _sigma_soluble_node(L: SubgroupLattice, partition: SigmaPartition, k: int) -> bool:
    """Every chief factor of the subgroup at node k is sigma-primary."""
    within = L.normal_subgroups_within[k]
    cur = 0
    while cur != k:
        over = [j for j in _bits.iter_bits(within) if j != cur and (L.down[j] >> cur) & 1]
        nxt = min(over, key=lambda j: (L.orders[j], j))
        if not is_sigma_primary(partition, L.orders[nxt] // L.orders[cur]):
            return False
        cur = nxt
    return True


# ---------------------------------------------------------------------------
# per group


def subgroup_group(L: SubgroupLattice, h: int) -> CayleyGroup:
    """The subgroup at node h as a standalone group (elements in index order)."""
    cache = L.cache.setdefault(SUBGROUP_GROUP_CACHE, {})
    if h not in cache:
        G = L.group
        idx = _bits.to_indices(L.masks[h], G.order)
        relabel = np.full(G.order, -1, dtype=np.int32)
        relabel[idx] = np.arange(len(idx))
        table = relabel[G.table[np.ix_(idx, idx)]]
        cache[h] = CayleyGroup(table, [G.element_perms[i] for i in idx], name=f"{G.name}[{h}]")
    return cache[h]


def sylow_nodes(L: SubgroupLattice, p: int) -> list[int]:
    return L.nodes_of_order(p ** L.group.prime_factorization[p])


def check_group_lemmas(L: SubgroupLattice, tally: Tally) -> None:
    G = L.group
    soluble = is_soluble(G)
    tally.check("minimal-sigma-soluble==soluble", chief_factors_sigma_primary(L, MINIMAL) == soluble, group=G.name)
    tally.check("one-partition-sigma-soluble", chief_factors_sigma_primary(L, ONE), group=G.name)
    if is_nilpotent(G):
        for part in _partitions(G):
            tally.check("nilpotent=>sigma-nilpotent", is_sigma_nilpotent_node(L, part, L.top), group=G.name,
                        partition=part.text)
    if not soluble or G.order == 1:
        return
    primes = G.primes
    reached = subnormal_nodes(L)

    # when some n <= |pi(G)| + 1 has all n-maximal subgroups subnormal, each Sylow subgroup
    # is normal or cyclic, cyclic times C_p, modular, or quaternion
    qualifying = [n for n in range(1, len(primes) + 2) if all_in(depth_set_bits(L, n), reached)]
    if qualifying:
        allowed = {"cyclic", "cyclic_times_p", "modular", "quaternion"}
        for p in primes:
            for s in sylow_nodes(L, p):
                if L.normal_flags[s]:
                    tally.check("sylow-type", True, group=G.name, P=s)
                    continue
                tag = classify_p_group(subgroup_group(L, s))
                tally.check("sylow-type", tag in allowed, group=G.name, P=s, tag=tag)

    # rank at most two: the Sylow subgroup for the largest prime p > 3 is normal, and a
    # Sylow tower exists when 2 or 3 does not divide |G|
    r = rank(G, L)
    if r <= 2:
        top = primes[-1]
        if top > 3:
            normal = all(L.normal_flags[s] for s in sylow_nodes(L, top))
            tally.check("rank-two-top-sylow-normal", normal, group=G.name, p=top, rank=r)
        if 2 not in primes or 3 not in primes:
            tally.check("rank-two-sylow-tower", is_sigma_dispersive(G, L, MINIMAL) is not None, group=G.name, rank=r)

    # Frattini lift: G/Phi(G) has a tower for an ordering => G has one for the same ordering
    phi = frattini_subgroup(G, L)
    if phi.bits != 1:
        Q, _ = quotient_group(G, phi)
        LQ = enumerate_subgroups(Q)
        for ordering in itertools.permutations(primes):
            wq = is_sigma_dispersive(Q, LQ, MINIMAL, ordering)
            w = is_sigma_dispersive(G, L, MINIMAL, ordering)
            if wq is not None:
                tally.check("frattini-lift-tower", w is not None and verify_dispersive_witness(G, MINIMAL, w),
                            group=G.name, ordering=list(ordering))
            if w is not None:
                tally.check("frattini-quotient-tower", wq is not None, group=G.name, ordering=list(ordering))


def _partitions(G: CayleyGroup) -> list[SigmaPartition]:
    from .catalog import prime_partitions
    return prime_partitions(G.primes)


def quotients_for(L: SubgroupLattice) -> list:
    """A few quotients G/N by proper nontrivial normal subgroups, with their lattices."""
    G = L.group
    if "quotients" not in L.cache:
        normals = [i for i, f in enumerate(L.normal_flags) if f and 0 < i < L.top]
        out = []
        for n in _strided(normals, QUOTIENT_BUDGET):
            Q, proj = quotient_group(G, L.nodes[n])
            out.append((n, Q, enumerate_subgroups(Q), proj))
        L.cache["quotients"] = out
    return L.cache["quotients"]


def run_lemmas(G: CayleyGroup, L: SubgroupLattice, cases, name: str):
    """One report per partition case, plus one per-group report (partition "-")."""
    from .harness import COUNTEREXAMPLE, HOLDS, NOT_APPLICABLE, VerdictReport

    def report(tally: Tally, case, partition_text: str) -> VerdictReport:
        status = COUNTEREXAMPLE if tally.violations else (HOLDS if tally.instances else NOT_APPLICABLE)
        flags = case.flags() if case is not None else {
            "sigma_group": False, "sigma_soluble": False, "sigma_nilpotent": False, "sigma_dispersive": False}
        return VerdictReport(
            scope="lemmas",
            group_name=name,
            partition_text=partition_text,
            order=G.order,
            sigma_size=case.t if case is not None else len(G.prime_factorization),
            flags=flags,
            m_sigma=case.m_sigma if case is not None else -1,
            witnesses={},
            theorem_status=status,
            details={"instances": dict(sorted(tally.instances.items())),
                     "violations": tally.violations[:20]},
        )

    quotients = quotients_for(L)
    out = []
    for case in cases:
        tally = Tally()
        check_sigma_subnormal_lemmas(L, case.partition, tally, quotients)
        check_sigma_core_lemmas(L, case.partition, case, tally)
        out.append(report(tally, case, case.partition.text))
    tally = Tally()
    check_group_lemmas(L, tally)
    out.append(report(tally, None, "-"))
    return out

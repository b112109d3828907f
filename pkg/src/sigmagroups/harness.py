"""Per-case verdicts and catalog sweeps for the dispersiveness theorem and its corollaries."""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import bits as _bits
from .catalog import CatalogEntry, prime_partitions
from .groups import CayleyGroup, GroupError
from .lattice import SubgroupLattice, enumerate_subgroups, is_soluble
from .sigma import (
    MINIMAL,
    ONE,
    SigmaPartition,
    is_sigma_dispersive,
    is_sigma_group,
    is_sigma_nilpotent,
    is_sigma_soluble,
    parse_partition,
    sigma_of,
    verify_dispersive_witness,
)
from .subnormal import (
    all_in,
    depth_set_bits,
    least_good_depth,
    sigma_subnormal_search,
    subnormal_nodes,
    verify_subnormal_witness,
)

log = logging.getLogger(__name__)

HOLDS = "hypothesis_holds_conclusion_holds"
FAILS = "hypothesis_fails"
NOT_APPLICABLE = "not_applicable"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

SCOPES = ("thm13", "cor14", "cor15", "lemmas")
SAMPLE_CHAINS = 3


@dataclass
class VerdictReport:
    scope: str
    group_name: str
    partition_text: str
    order: int
    sigma_size: int
    flags: dict
    m_sigma: int
    witnesses: dict
    theorem_status: str
    reason: str | None = None
    details: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return asdict(self)

    def flags_consistent(self) -> bool:
        f = self.flags
        if f.get("sigma_nilpotent") and not f.get("sigma_dispersive"):
            return False
        if f.get("sigma_dispersive") and not f.get("sigma_group"):
            return False
        return True


@dataclass
class CaseAnalysis:
    """Everything the sweeps need to know about one (group, partition) pair."""

    group: CayleyGroup
    lattice: SubgroupLattice
    partition: SigmaPartition
    t: int
    sigma_group: bool
    sigma_soluble: bool
    sigma_nilpotent: bool
    witness: object
    witness_ok: bool | None
    reached: int
    m_sigma: int

    def hypothesis(self, n: int) -> bool:
        """Every n-maximal subgroup is sigma-subnormal (vacuous when there are none)."""
        return all_in(depth_set_bits(self.lattice, n), self.reached)

    def flags(self) -> dict:
        return {
            "sigma_group": self.sigma_group,
            "sigma_soluble": self.sigma_soluble,
            "sigma_nilpotent": self.sigma_nilpotent,
            "sigma_dispersive": self.witness is not None,
        }


def analyze_case(G: CayleyGroup, L: SubgroupLattice, partition: SigmaPartition) -> CaseAnalysis:
    t = len(sigma_of(partition, G.order)) if G.order > 1 else 0
    witness = is_sigma_dispersive(G, L, partition)
    search = sigma_subnormal_search(L, partition)
    return CaseAnalysis(
        group=G,
        lattice=L,
        partition=partition,
        t=t,
        sigma_group=is_sigma_group(G, L, partition),
        sigma_soluble=is_sigma_soluble(G, L, partition),
        sigma_nilpotent=is_sigma_nilpotent(G, L, partition),
        witness=witness,
        witness_ok=None if witness is None else verify_dispersive_witness(G, partition, witness),
        reached=search.reached,
        m_sigma=least_good_depth(L, search.reached),
    )


def _chain_witnesses(case: CaseAnalysis, depth: int) -> tuple[list[dict], dict | None, int]:
    """Sample chains for depth-maximal subgroups, first failing node, and verified count."""
    L = case.lattice
    search = sigma_subnormal_search(L, case.partition)
    chains, failing, bad = [], None, 0
    for node in _bits.iter_bits(depth_set_bits(L, depth)):
        w = search.witness(node)
        if w is None:
            if failing is None:
                failing = {"node": node, "order": L.orders[node]}
            continue
        if len(chains) < SAMPLE_CHAINS:
            if not verify_subnormal_witness(case.group, case.partition, L.nodes[node], w):
                bad += 1
            chains.append({"node": node, **w.to_record()})
    return chains, failing, bad


def _base_report(case: CaseAnalysis, scope: str, name: str) -> VerdictReport:
    return VerdictReport(
        scope=scope,
        group_name=name,
        partition_text=case.partition.text,
        order=case.group.order,
        sigma_size=case.t,
        flags=case.flags(),
        m_sigma=case.m_sigma,
        witnesses={"dispersive": None if case.witness is None else case.witness.to_record()},
        theorem_status=NOT_APPLICABLE,
        details={"dispersive_verified": case.witness_ok},
    )


def _conclusion(case: CaseAnalysis) -> bool:
    return case.witness is not None and bool(case.witness_ok)


def thm13_report(case: CaseAnalysis, name: str) -> VerdictReport:
    rep = _base_report(case, "thm13", name)
    chains, failing, bad = _chain_witnesses(case, case.t + 1)
    rep.witnesses["subnormal_chains"] = chains
    rep.witnesses["non_subnormal"] = failing
    rep.details["chain_failures"] = bad
    if not case.sigma_soluble:
        rep.reason = "not sigma-soluble" + ("" if case.sigma_group else "; not a sigma-group")
        return rep
    if not case.hypothesis(case.t + 1):
        rep.theorem_status = FAILS
    elif _conclusion(case) and not bad:
        rep.theorem_status = HOLDS
    else:
        rep.theorem_status = COUNTEREXAMPLE
    return rep


def cor14_report(case: CaseAnalysis, name: str) -> VerdictReport:
    rep = _base_report(case, "cor14", name)
    if not case.sigma_soluble:
        rep.reason = "not sigma-soluble"
        return rep
    per_n = {}
    for n in range(0, case.t + 1):
        if not case.hypothesis(n + 1):
            per_n[str(n)] = FAILS
        else:
            per_n[str(n)] = HOLDS if _conclusion(case) else COUNTEREXAMPLE
    rep.details["per_n"] = per_n
    if COUNTEREXAMPLE in per_n.values():
        rep.theorem_status = COUNTEREXAMPLE
    elif HOLDS in per_n.values():
        rep.theorem_status = HOLDS
    else:
        rep.theorem_status = FAILS
    return rep


def cor15_report(case: CaseAnalysis, name: str) -> VerdictReport:
    """Minimal partition only: subnormal n-maximal subgroups and |pi(G)| >= n - 1 give a Sylow tower."""
    rep = _base_report(case, "cor15", name)
    G, L = case.group, case.lattice
    if not is_soluble(G):
        rep.reason = "not soluble"
        return rep
    reached = subnormal_nodes(L)
    m = least_good_depth(L, reached)
    n_primes = len(G.prime_factorization)
    qualifying = [n for n in range(1, n_primes + 2) if all_in(depth_set_bits(L, n), reached)]
    rep.details["m_subnormal"] = m
    rep.details["qualifying_n"] = qualifying
    if not qualifying:
        rep.theorem_status = FAILS
    elif _conclusion(case):
        rep.theorem_status = HOLDS
    else:
        rep.theorem_status = COUNTEREXAMPLE
    return rep


def analyze(G: CayleyGroup, partition: SigmaPartition, L: SubgroupLattice | None = None,
            name: str | None = None) -> VerdictReport:
    """Full report for one group under one partition (theorem status as for the main theorem)."""
    L = L or enumerate_subgroups(G)
    rep = thm13_report(analyze_case(G, L, partition), name or G.name)
    rep.scope = "analyze"
    return rep


# ---------------------------------------------------------------------------
# sweeps


def partitions_for(G: CayleyGroup, scope: str) -> list[SigmaPartition]:
    if scope == "all":
        return prime_partitions(G.primes)
    if scope == "minimal":
        return [MINIMAL]
    if scope == "one":
        return [ONE]
    return [parse_partition(scope)]


@dataclass
class GroupResult:
    index: int
    name: str
    records: list[dict]
    error: str | None = None
    lemma_counts: dict = field(default_factory=dict)


def run_group(index: int, entry: CatalogEntry, scopes: Sequence[str], partition_scope: str,
              lattice_cap: int = 128) -> GroupResult:
    """All requested scopes for one catalog entry; errors are captured, not raised."""
    from .lemmas import run_lemmas

    try:
        G = entry.build()
        L = enumerate_subgroups(G, lattice_cap)
    except GroupError as exc:
        return GroupResult(index, entry.name, [], error=str(exc))
    records: list[dict] = []
    counts: dict[str, int] = {}
    parts = partitions_for(G, partition_scope)
    cases = [analyze_case(G, L, p) for p in parts]
    for case in cases:
        if "thm13" in scopes:
            records.append(thm13_report(case, entry.name).to_record())
        if "cor14" in scopes:
            records.append(cor14_report(case, entry.name).to_record())
    if "cor15" in scopes:
        minimal = next((c for c in cases if c.partition == MINIMAL), None)
        if minimal is None:
            minimal = analyze_case(G, L, MINIMAL)
        records.append(cor15_report(minimal, entry.name).to_record())
    if "lemmas" in scopes:
        for rep in run_lemmas(G, L, cases, entry.name):
            for k, v in rep.details.get("instances", {}).items():
                counts[k] = counts.get(k, 0) + v
            records.append(rep.to_record())
    return GroupResult(index, entry.name, records, lemma_counts=counts)


def _run_group_star(args):
    return run_group(*args)


@dataclass
class SweepResult:
    records: list[dict]
    summary: dict

    @property
    def ok(self) -> bool:
        return self.summary["counterexamples"] == 0 and not self.summary["errors"]

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.write(json.dumps({"summary": self.summary}, sort_keys=True) + "\n")


def summarize(records: Iterable[dict], errors: list[dict], lemma_counts: dict) -> dict:
    by_scope: dict[str, dict[str, int]] = {}
    cases = cx = inconsistent = 0
    certs = {"dispersive_emitted": 0, "dispersive_verified": 0, "chains_emitted": 0, "chains_failed": 0}
    for rec in records:
        cases += 1
        disp = rec["witnesses"].get("dispersive")
        if disp is not None:
            certs["dispersive_emitted"] += 1
            certs["dispersive_verified"] += rec["details"].get("dispersive_verified") is True
        certs["chains_emitted"] += len(rec["witnesses"].get("subnormal_chains") or [])
        certs["chains_failed"] += rec["details"].get("chain_failures", 0)
        bucket = by_scope.setdefault(rec["scope"], {})
        bucket[rec["theorem_status"]] = bucket.get(rec["theorem_status"], 0) + 1
        if rec["theorem_status"] == COUNTEREXAMPLE:
            cx += 1
        f = rec["flags"]
        if (f["sigma_nilpotent"] and not f["sigma_dispersive"]) or (f["sigma_dispersive"] and not f["sigma_group"]):
            inconsistent += 1
    return {
        "cases": cases,
        "counterexamples": cx,
        "hypothesis_holds": sum(b.get(HOLDS, 0) for b in by_scope.values()),
        "inconsistent_flags": inconsistent,
        "certificates": certs,
        "by_scope": {k: dict(sorted(v.items())) for k, v in sorted(by_scope.items())},
        "errors": errors,
        "lemma_instances": dict(sorted(lemma_counts.items())),
        "lemma_instances_total": sum(lemma_counts.values()),
    }


def sweep(entries: Sequence[CatalogEntry], scopes: Sequence[str] = ("thm13",), partition_scope: str = "all",
          jobs: int = 1, max_order: int | None = None, lattice_cap: int = 128,
          problems: Sequence = ()) -> SweepResult:
    """Run the requested scopes over catalog entries.

    Work is split per group across ``jobs`` processes; results are merged in
    catalog order so the output does not depend on scheduling.
    """
    todo = [(i, e, tuple(scopes), partition_scope, lattice_cap) for i, e in enumerate(entries)
            if max_order is None or e.expected_order is None or e.expected_order <= max_order]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_group_star, todo, chunksize=1))
    else:
        results = [run_group(*args) for args in todo]
    results.sort(key=lambda r: r.index)
    records: list[dict] = []
    errors = [{"line": p.line, "name": p.name, "message": p.message} for p in problems]
    counts: dict[str, int] = {}
    for r in results:
        if r.error:
            errors.append({"line": None, "name": r.name, "message": r.error})
        records.extend(r.records)
        for k, v in r.lemma_counts.items():
            counts[k] = counts.get(k, 0) + v
    return SweepResult(records, summarize(records, errors, counts))

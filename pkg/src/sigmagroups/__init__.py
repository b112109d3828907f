"""Finite permutation groups, their subgroup lattices, and sigma-theoretic predicates."""
from .catalog import CatalogEntry, builtin_catalog, dump_catalog, load_catalog, prime_partitions
from .groups import (
    CayleyGroup,
    ElementSet,
    GroupError,
    NamedFamilySpec,
    Permutation,
    classify_p_group,
    direct_product,
    group_from_generators,
    make_family,
    parse_permutation,
    quotient_group,
)
from .harness import VerdictReport, analyze, sweep
from .lattice import SubgroupLattice, chief_series, enumerate_subgroups, frattini_subgroup, rank, to_dot, to_json
from .sigma import (
    MINIMAL,
    ONE,
    SigmaPartition,
    complete_hall_sets,
    has_sylow_tower,
    is_sigma_dispersive,
    is_sigma_group,
    is_sigma_nilpotent,
    is_sigma_soluble,
    parse_partition,
    sigma_bases,
    verify_dispersive_witness,
)
from .subnormal import is_sigma_subnormal, is_subnormal, m_sigma, verify_subnormal_witness

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "builtin_catalog", "dump_catalog", "load_catalog", "prime_partitions",
    "CayleyGroup", "ElementSet", "GroupError", "NamedFamilySpec", "Permutation", "classify_p_group",
    "direct_product", "group_from_generators", "make_family", "parse_permutation", "quotient_group",
    "VerdictReport", "analyze", "sweep",
    "SubgroupLattice", "chief_series", "enumerate_subgroups", "frattini_subgroup", "rank", "to_dot", "to_json",
    "MINIMAL", "ONE", "SigmaPartition", "complete_hall_sets", "has_sylow_tower", "is_sigma_dispersive",
    "is_sigma_group", "is_sigma_nilpotent", "is_sigma_soluble", "parse_partition", "sigma_bases",
    "verify_dispersive_witness",
    "is_sigma_subnormal", "is_subnormal", "m_sigma", "verify_subnormal_witness",
]

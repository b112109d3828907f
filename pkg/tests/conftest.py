import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from sigmagroups import bits  # noqa: E402
from sigmagroups.catalog import builtin_catalog  # noqa: E402
from sigmagroups.lattice import enumerate_subgroups  # noqa: E402

# small groups with varied structure, compared against the brute-force oracles
ORACLE_GROUPS = ("C1", "C6", "C8", "C12", "D8", "D10", "D12", "S3", "S4", "A4", "Q8", "M(2,4)",
                 "SL(2,3)", "C2xD4", "C3xS3", "C2xA4", "D4xS3", "C4xC4", "C3xQ8")


@lru_cache(maxsize=None)
def catalog_entry(name):
    for e in builtin_catalog(200):
        if e.name == name:
            return e
    raise KeyError(name)


@lru_cache(maxsize=None)
def group_and_lattice(name):
    G = catalog_entry(name).build()
    return G, enumerate_subgroups(G)


def as_perms(G, mask):
    """Element bitset -> frozenset of raw image tuples."""
    return frozenset(G.element_perms[i].images for i in bits.iter_bits(mask))


@lru_cache(maxsize=None)
def oracle_subgroups(name):
    G, _ = group_and_lattice(name)
    return oracles.all_subgroups(as_perms(G, G.full_bits))


@pytest.fixture(params=ORACLE_GROUPS)
def small(request):
    G, L = group_and_lattice(request.param)
    return request.param, G, L


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

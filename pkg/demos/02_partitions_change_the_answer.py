"""The same group under different partitions of its primes.

Coarser partitions make more quotients primary, so more subgroups become
sigma-subnormal and dispersiveness gets easier.
"""
from sigmagroups import analyze, builtin_catalog, enumerate_subgroups, prime_partitions

entries = {e.name: e for e in builtin_catalog(100)}
for name in ("S4", "SL(2,3)", "A5", "D4xS3", "C5xA4"):
    G = entries[name].build()
    L = enumerate_subgroups(G)
    print(f"{name} (order {G.order})")
    for part in prime_partitions(G.primes):
        rep = analyze(G, part, L)
        f = rep.flags
        print(f"  {part.text:>8}: t={rep.sigma_size} m_sigma={rep.m_sigma} "
              f"soluble={f['sigma_soluble']!s:5} dispersive={f['sigma_dispersive']!s:5} -> {rep.theorem_status}")
        if rep.witnesses["dispersive"]:
            d = rep.witnesses["dispersive"]
            print(f"{'':12}ordering {d['ordering']}, series orders {d['series_orders']}")

"""A walk through the subgroup lattice of S4.

Run with ``python3 demos/01_symmetric_group_tour.py``.
"""
from sigmagroups import MINIMAL, ONE, builtin_catalog, enumerate_subgroups, has_sylow_tower, m_sigma, rank
from sigmagroups.groups import parse_permutation
from sigmagroups.lattice import chief_series, n_maximal_set
from sigmagroups.subnormal import is_sigma_subnormal, is_subnormal

entry = next(e for e in builtin_catalog(24) if e.name == "S4")
G = entry.build()
L = enumerate_subgroups(G)
print(f"{entry.name}: order {G.order}, {len(L)} subgroups")

for n in range(L.max_depth + 1):
    orders = sorted(L.orders[i] for i in n_maximal_set(L, n))
    print(f"  {n}-maximal subgroup orders: {orders}")

cs = chief_series(G, L)
print("chief factor orders:", cs.factor_orders, "rank:", rank(G, L))

# the subgroup generated by a transposition sits three steps below the top
t = G.subset([0, G.index_of(parse_permutation("(1 2)", 4))])
print("<(1 2)> subnormal?", is_subnormal(G, t))
w = is_sigma_subnormal(G, L, ONE, t)
print("with a single class it is reached in", len(w), "step(s):", w.step_kinds)

print("m_sigma, finest partition:", m_sigma(G, L, MINIMAL))
print("m_sigma, one class:", m_sigma(G, L, ONE))
print("Sylow tower:", has_sylow_tower(G, L))

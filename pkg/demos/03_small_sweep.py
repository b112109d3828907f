"""A sweep over the builtin catalog up to order 36, all scopes.

The report file lands in the working directory as ``demo_report.jsonl``.
"""
import json
import time

from sigmagroups import builtin_catalog, sweep
from sigmagroups.harness import SCOPES

start = time.perf_counter()
res = sweep(builtin_catalog(36), SCOPES, "all", max_order=36)
res.write("demo_report.jsonl")
print(f"done in {time.perf_counter() - start:.1f}s")
s = res.summary
print(json.dumps({k: s[k] for k in ("cases", "counterexamples", "hypothesis_holds", "certificates")}, indent=2))
for scope, counts in s["by_scope"].items():
    print(scope, counts)
busiest = sorted(s["lemma_instances"].items(), key=lambda kv: -kv[1])[:5]
print("most exercised lemma checks:", busiest)

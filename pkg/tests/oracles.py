"""Slow reference implementations that work on raw permutation tuples.

Nothing here touches the package's Cayley tables or bitsets; tests compare
the engine against these.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

Perm = tuple


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def parse_cycles(text: str, degree: int) -> Perm:
    img = list(range(degree))
    for chunk in text.replace(")", ")\n").splitlines():
        chunk = chunk.strip().strip("()").replace(",", " ")
        pts = [int(x) - 1 for x in chunk.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def closure(gens, degree: int) -> frozenset:
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def elem_order(p: Perm) -> int:
    e = tuple(range(len(p)))
    k, x = 1, p
    while x != e:
        x = compose(x, p)
        k += 1
    return k


def all_subgroups(elements: frozenset) -> set[frozenset]:
    """Fixed point of 'join a known subgroup with one more element'."""
    degree = len(next(iter(elements)))
    trivial = closure([], degree)
    gens = {trivial: []}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for g in sorted(elements - H):
                K = closure(gens[H] + [g], degree)
                if K not in gens:
                    gens[K] = gens[H] + [g]
                    new.append(K)
        frontier = new
    return set(gens)


def conjugate(x: Perm, g: Perm) -> Perm:
    return compose(compose(inverse(g), x), g)


def is_normal(H: frozenset, K: frozenset) -> bool:
    return all(conjugate(h, k) in H for h in H for k in K)


def core(H: frozenset, K: frozenset) -> frozenset:
    out = set(H)
    for k in K:
        out &= {conjugate(h, k) for h in H}
    return frozenset(out)


def prime_divisors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def maximal_subgroups(K: frozenset, subs: set[frozenset]) -> list[frozenset]:
    proper = [H for H in subs if H < K]
    return [H for H in proper if not any(H < M < K for M in proper)]


def n_maximal(G: frozenset, subs: set[frozenset], n: int) -> set[frozenset]:
    level = {G}
    for _ in range(n):
        level = {M for K in level for M in maximal_subgroups(K, subs)}
    return level


def class_of(p: int, classes) -> int:
    for c in classes:
        if p in c:
            return min(c)
    return p


def sigma_classes(n: int, classes) -> set[int]:
    return {class_of(p, classes) for p in prime_divisors(n)}


def sigma_subnormal_set(G: frozenset, subs: set[frozenset], classes) -> set[frozenset]:
    """Downward closure from G along the two allowed step kinds, by exhaustive search."""
    reached = {G}
    stack = [G]
    while stack:
        K = stack.pop()
        for H in subs:
            if H <= K and H not in reached:
                if is_normal(H, K) or len(sigma_classes(len(K) // len(core(H, K)), classes)) <= 1:
                    reached.add(H)
                    stack.append(H)
    return reached


def subnormal_set(G: frozenset, subs: set[frozenset]) -> set[frozenset]:
    reached = {G}
    stack = [G]
    while stack:
        K = stack.pop()
        for H in subs:
            if H <= K and H not in reached and is_normal(H, K):
                reached.add(H)
                stack.append(H)
    return reached


def is_abelian(H) -> bool:
    return all(compose(a, b) == compose(b, a) for a in H for b in H)


def product(A, B) -> frozenset:
    return frozenset(compose(a, b) for a in A for b in B)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n == 0:
        return 1
    from math import comb
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


def abelian_invariants(H: frozenset) -> list[int]:
    """Invariant factors of an abelian group from counts of elements killed by p^k."""
    e = tuple(range(len(next(iter(H)))))
    out = []
    for p in prime_divisors(len(H)):
        p_part = 1
        n = len(H)
        while n % p == 0:
            n //= p
            p_part *= p
        counts = [1]
        k = 0
        while counts[-1] < p_part:
            k += 1
            counts.append(sum(1 for x in H if _power(x, p ** k) == e))
        # factors of order >= p^k: log_p(c_k / c_(k-1))
        ge = [_log(counts[k] // counts[k - 1], p) for k in range(1, len(counts))] + [0]
        for k in range(len(ge) - 1):
            out += [p ** (k + 1)] * (ge[k] - ge[k + 1])
    return sorted(out, reverse=True)


def _power(x, k):
    e = tuple(range(len(x)))
    out = e
    for _ in range(k % elem_order(x)):
        out = compose(out, x)
    return out


def _log(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def orderings(items):
    return list(itertools.permutations(sorted(items)))

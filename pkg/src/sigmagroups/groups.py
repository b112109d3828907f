"""Finite groups as Cayley tables, with subset algebra on dense bitsets.

Permutations act on the right: ``x^(p*q) == (x^p)^q``, so ``p * q`` means
"apply p, then q".  The same convention holds for table products:
``table[a, b]`` is the index of ``a*b``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import bits as _bits

DEFAULT_ORDER_CAP = 200

__all__ = [
    "DEFAULT_ORDER_CAP",
    "GroupError",
    "OrderCapExceeded",
    "PermutationParseError",
    "Permutation",
    "parse_permutation",
    "prime_factorization",
    "CayleyGroup",
    "ElementSet",
    "group_from_generators",
    "NamedFamilySpec",
    "family_generators",
    "make_family",
    "direct_product",
    "quotient_group",
    "product_set",
    "is_permutable",
    "generated_subgroup",
    "core_in",
    "is_normal",
    "normalizer",
    "normal_closure",
    "commutator_subgroup",
    "center",
    "is_abelian",
    "is_nilpotent",
    "classify_p_group",
]


class GroupError(ValueError):
    pass


class OrderCapExceeded(GroupError):
    def __init__(self, cap: int, reached: int):
        super().__init__(f"closure exceeds order cap {cap} (reached {reached} elements)")
        self.cap = cap
        self.reached = reached


class PermutationParseError(GroupError):
    pass


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupError(f"not a bijection on 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise GroupError("degree mismatch")
        img = other.images
        return Permutation(tuple(img[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation with 1-based points, e.g. ``"(1 2)(3 4)"``."""
    if degree < 1:
        raise PermutationParseError(f"degree must be positive, got {degree}")
    stripped = text.strip()
    if not stripped:
        raise PermutationParseError("empty permutation text")
    pos = 0
    images = list(range(degree))
    used: set[int] = set()
    for m in _CYCLE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise PermutationParseError(f"malformed permutation text: {text!r}")
        pos = m.end()
        tokens = m.group(1).replace(",", " ").split()
        points = []
        for tok in tokens:
            if not tok.isdigit():
                raise PermutationParseError(f"bad point {tok!r} in {text!r}")
            p = int(tok)
            if p < 1 or p > degree:
                raise PermutationParseError(f"point {p} outside 1..{degree}")
            if p in used:
                raise PermutationParseError(f"point {p} repeated in {text!r}")
            used.add(p)
            points.append(p - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    if stripped[pos:].strip() or pos == 0:
        raise PermutationParseError(f"malformed permutation text: {text!r}")
    return Permutation(tuple(images))


def prime_factorization(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == {n: 1}


# ---------------------------------------------------------------------------
# groups and element sets


class CayleyGroup:
    """A finite group materialized as a full multiplication table.

    Elements are the indices ``0..order-1`` with 0 the identity.  Instances
    are treated as immutable; derived tables are computed lazily and cached.
    """

    def __init__(self, table: np.ndarray, element_perms: Sequence[Permutation], name: str = ""):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise GroupError("table must be a nonempty square array")
        if len(element_perms) != n:
            raise GroupError("need one permutation per element")
        if not (table[0] == np.arange(n)).all():
            raise GroupError("index 0 must be the identity")
        self.table = table
        self.table.setflags(write=False)
        self.element_perms = tuple(element_perms)
        self.name = name
        self.order = n
        self.identity = 0
        inverse = np.argmin(table, axis=1).astype(np.int32)
        if not (table[np.arange(n), inverse] == 0).all():
            raise GroupError("table has an element without inverse")
        self.inverse = inverse
        self.inverse.setflags(write=False)
        self.prime_factorization = prime_factorization(n)
        self._rows = table.tolist()

    def __repr__(self) -> str:
        return f"CayleyGroup({self.name or '?'}, order={self.order})"

    @property
    def primes(self) -> list[int]:
        return sorted(self.prime_factorization)

    @property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inverse[a]), -k
        out, base = 0, a
        while k:
            if k & 1:
                out = self._rows[out][base]
            base = self._rows[base][base]
            k >>= 1
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        rows = self._rows
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = rows[y][x]
                k += 1
            orders[x] = k
        orders.setflags(write=False)
        return orders

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g^-1 x g``."""
        left = self.table[self.inverse, :]
        out = self.table[left, np.arange(self.order)[:, None]]
        out.setflags(write=False)
        return out

    @cached_property
    def commutators(self) -> np.ndarray:
        """``commutators[x, y]`` is the index of ``x^-1 y^-1 x y``."""
        inv = self.inverse
        left = self.table[inv[:, None], inv[None, :]]
        out = self.table[left, self.table]
        out.setflags(write=False)
        return out

    def is_latin_square(self) -> bool:
        target = np.arange(self.order)
        return bool((np.sort(self.table, axis=1) == target).all()
                    and (np.sort(self.table, axis=0) == target[:, None]).all())

    def is_associative(self, sample: int | None = None, seed: int = 0) -> bool:
        t = self.table
        if sample is None:
            for a in range(self.order):
                # (a*b)*c == a*(b*c) for all b, c at once
                if not (t[t[a]] == t[a][t]).all():
                    return False
            return True
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.order, size=(3, sample))
        return bool((t[t[a, b], c] == t[a, t[b, c]]).all())

    def subset(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet(self, _bits.from_indices(indices))

    def whole(self) -> ElementSet:
        return ElementSet(self, self.full_bits)

    def trivial(self) -> ElementSet:
        return ElementSet(self, 1)

    def index_of(self, perm: Permutation) -> int:
        return self._perm_index[perm]

    @cached_property
    def _perm_index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.element_perms)}

    # -- closure on bitsets -------------------------------------------------

    def _extend(self, base_bits: int, gens: list[int], g: int,
                base_member: np.ndarray | None = None) -> tuple[int, list[int]]:
        """Bits and generators of ``<base, g>``, where base = ``<gens>``.

        Coset enumeration: the result is a union of right cosets ``base*r``;
        it is grown until it is closed under right multiplication by every
        generator.
        """
        if base_member is None:
            base_member = _bits.to_bool(base_bits, self.order)
        base_idx = np.flatnonzero(base_member)
        member = base_member.copy()
        new_gens = gens + [g]
        rows = self._rows
        reps = [0]
        i = 0
        while i < len(reps):
            row = rows[reps[i]]
            for s in new_gens:
                x = row[s]
                if not member[x]:
                    member[self.table[base_idx, x]] = True
                    reps.append(x)
            i += 1
        return _bits.from_bool(member), new_gens

    def _generate(self, seed_bits: int, base_bits: int = 1,
                  base_gens: list[int] | None = None) -> tuple[int, list[int]]:
        cur, gens = base_bits, list(base_gens or [])
        for s in _bits.iter_bits(seed_bits & ~base_bits):
            if not (cur >> s) & 1:
                cur, gens = self._extend(cur, gens, s)
        return cur, gens


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of a group's elements as a dense bitset."""

    group: CayleyGroup = field(repr=False)
    bits: int

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementSet) and other.group is self.group and other.bits == self.bits

    def __hash__(self) -> int:
        return hash((id(self.group), self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return bool((self.bits >> x) & 1)

    def __iter__(self):
        return _bits.iter_bits(self.bits)

    def _check(self, other: ElementSet) -> None:
        if other.group is not self.group:
            raise GroupError("element sets belong to different groups")

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.group, self.bits & other.bits)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.group, self.bits | other.bits)

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.bits != other.bits

    def indices(self) -> np.ndarray:
        return _bits.to_indices(self.bits, self.group.order)

    def as_bool(self) -> np.ndarray:
        return _bits.to_bool(self.bits, self.group.order)

    def is_subgroup(self) -> bool:
        if not self.bits & 1:
            return False
        idx = self.indices()
        member = self.as_bool()
        g = self.group
        return bool(member[g.table[np.ix_(idx, idx)]].all() and member[g.inverse[idx]].all())

    def __repr__(self) -> str:
        return f"ElementSet({self.group.name or '?'}, order={len(self)})"


def _as_set(G: CayleyGroup, s: ElementSet) -> ElementSet:
    if s.group is not G:
        raise GroupError("element set does not belong to this group")
    return s


# ---------------------------------------------------------------------------
# construction


def group_from_generators(gens: Sequence[Permutation], order_cap: int = DEFAULT_ORDER_CAP,
                          name: str = "", degree: int | None = None) -> CayleyGroup:
    """Breadth-first closure of the generators; identity first, discovery order after."""
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise GroupError("generators must share one degree")
    elif degree is None:
        degree = 1
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    gen_images = [g.images for g in gens]
    right = [[0] * 0 for _ in gens]
    parent = [0]
    via = [-1]
    i = 0
    while i < len(elements):
        x = elements[i]
        for k, img in enumerate(gen_images):
            y = tuple(img[j] for j in x)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= order_cap:
                    raise OrderCapExceeded(order_cap, j + 1)
                index[y] = j
                elements.append(y)
                parent.append(i)
                via.append(k)
            right[k].append(j)
        i += 1
    n = len(elements)
    right_arr = [np.asarray(r, dtype=np.int32) for r in right]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for k in range(1, n):
        table[:, k] = right_arr[via[k]][table[:, parent[k]]]
    return CayleyGroup(table, [Permutation(e) for e in elements], name=name)


def _from_multiplication(elements: Sequence, mul, gens: Sequence, order_cap: int, name: str) -> CayleyGroup:
    """Group given abstractly, realized through its right regular permutation action."""
    pos = {e: i for i, e in enumerate(elements)}
    perms = [Permutation(tuple(pos[mul(e, g)] for e in elements)) for g in gens]
    return group_from_generators(perms, order_cap, name=name, degree=len(elements))


FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion",
            "modular_p", "direct_product", "from_generators")


@dataclass(frozen=True)
class NamedFamilySpec:
    """``family`` plus its parameters.

    cyclic (n,), dihedral (n,) for the group of order 2n, symmetric (n,),
    alternating (n,), quaternion (), modular_p (p, m), direct_product
    (spec, spec), from_generators (degree, [cycle strings]).
    """

    family: str
    params: tuple = ()


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return Permutation(tuple(images))


def _quaternion_mul(x, y):
    # units of the quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    (sx, ax), (sy, ay) = x, y
    if ax == 0:
        return (sx * sy, ay)
    if ay == 0:
        return (sx * sy, ax)
    if ax == ay:
        return (-sx * sy, 0)
    third = 6 - ax - ay
    sign = 1 if (ay - ax) % 3 == 1 else -1
    return (sx * sy * sign, third)


def family_generators(spec: NamedFamilySpec) -> tuple[int, list[Permutation], str]:
    """Degree, permutation generators and display name for a family member."""
    fam, params = spec.family, tuple(spec.params)
    if fam not in FAMILIES:
        raise GroupError(f"unknown family {fam!r}")
    if fam in ("cyclic", "dihedral", "symmetric", "alternating"):
        if len(params) != 1 or not isinstance(params[0], int) or params[0] < 1:
            raise GroupError(f"{fam} needs one positive integer parameter")
        (n,) = params
    if fam == "cyclic":
        return n, ([_cycle(range(n), n)] if n > 1 else []), f"C{n}"
    if fam == "dihedral":
        if n == 1:
            return 2, [_cycle([0, 1], 2)], "D2"
        if n == 2:
            return 4, [_cycle([0, 1], 4), _cycle([2, 3], 4)], "D4"
        refl = Permutation(tuple((n - i) % n for i in range(n)))
        return n, [_cycle(range(n), n), refl], f"D{2 * n}"
    if fam == "symmetric":
        if n == 1:
            return 1, [], "S1"
        gens = [_cycle([0, 1], n)] + ([_cycle(range(n), n)] if n > 2 else [])
        return n, gens, f"S{n}"
    if fam == "alternating":
        gens = [_cycle([i, i + 1, i + 2], n) for i in range(n - 2)]
        return n, gens, f"A{n}"
    if fam == "quaternion":
        units = [(s, a) for s in (1, -1) for a in range(4)]
        pos = {e: i for i, e in enumerate(units)}
        gens = [Permutation(tuple(pos[_quaternion_mul(e, g)] for e in units)) for g in ((1, 1), (1, 2))]
        return 8, gens, "Q8"
    if fam == "modular_p":
        if len(params) != 2:
            raise GroupError("modular_p needs (p, m)")
        p, m = params
        if not _is_prime(p) or m < 3:
            raise GroupError(f"modular_p needs a prime p and m >= 3, got ({p}, {m})")
        mod = p ** (m - 1)
        r = 1 + p ** (m - 2)
        s = pow(r, -1, mod)
        # a^i b^j * a^k b^l = a^(i + k s^j) b^(j + l), from b^-1 a b = a^r
        elements = [(i, j) for j in range(p) for i in range(mod)]
        pos = {e: t for t, e in enumerate(elements)}

        def mul(x, y):
            return ((x[0] + y[0] * pow(s, x[1], mod)) % mod, (x[1] + y[1]) % p)

        gens = [Permutation(tuple(pos[mul(e, g)] for e in elements)) for g in ((1, 0), (0, 1))]
        return len(elements), gens, f"M({p},{m})"
    if fam == "from_generators":
        if len(params) != 2:
            raise GroupError("from_generators needs (degree, [cycle strings])")
        degree, texts = params
        return degree, [parse_permutation(t, degree) for t in texts], "<" + ", ".join(texts) + ">"
    # direct_product: generators on disjoint point sets
    if len(params) != 2:
        raise GroupError("direct_product needs two sub-specs")
    da, ga, na = family_generators(params[0])
    db, gb, nb = family_generators(params[1])
    degree = da + db
    gens = [Permutation(g.images + tuple(range(da, degree))) for g in ga]
    gens += [Permutation(tuple(range(da)) + tuple(i + da for i in g.images)) for g in gb]
    return degree, gens, f"{na}x{nb}"


def make_family(spec: NamedFamilySpec, order_cap: int = DEFAULT_ORDER_CAP) -> CayleyGroup:
    if spec.family == "direct_product":
        if len(spec.params) != 2:
            raise GroupError("direct_product needs two sub-specs")
        return direct_product(make_family(spec.params[0], order_cap),
                              make_family(spec.params[1], order_cap), order_cap)
    degree, gens, name = family_generators(spec)
    return group_from_generators(gens, order_cap, name=name, degree=degree)


def direct_product(G: CayleyGroup, H: CayleyGroup, order_cap: int = DEFAULT_ORDER_CAP) -> CayleyGroup:
    """Pairs ``(g, h)`` indexed lexicographically as ``g*|H| + h``."""
    n, m = G.order, H.order
    if n * m > order_cap:
        raise OrderCapExceeded(order_cap, n * m)
    table = (G.table[:, None, :, None] * m + H.table[None, :, None, :]).reshape(n * m, n * m)
    da = G.element_perms[0].degree
    perms = [Permutation(a.images + tuple(i + da for i in b.images))
             for a in G.element_perms for b in H.element_perms]
    return CayleyGroup(table, perms, name=f"{G.name}x{H.name}")


def quotient_group(G: CayleyGroup, N: ElementSet) -> tuple[CayleyGroup, np.ndarray]:
    """``G/N`` and the projection (element index -> coset index).

    Cosets are numbered by their smallest element index, so the coset of the
    identity is 0.  Elements of the quotient act on cosets by right
    multiplication.
    """
    _as_set(G, N)
    if not N.is_subgroup():
        raise GroupError("N is not a subgroup")
    if not is_normal(G, N, G.whole()):
        raise GroupError("N is not normal")
    n_idx = N.indices()
    proj = np.full(G.order, -1, dtype=np.int32)
    reps = []
    for x in range(G.order):
        if proj[x] < 0:
            proj[G.table[x, n_idx]] = len(reps)
            reps.append(x)
    reps_arr = np.asarray(reps)
    qtable = proj[G.table[np.ix_(reps_arr, reps_arr)]]
    k = len(reps)
    perms = [Permutation(tuple(int(v) for v in qtable[:, j])) for j in range(k)]
    name = f"{G.name}/N{len(N)}"
    return CayleyGroup(qtable, perms, name=name), proj


# ---------------------------------------------------------------------------
# subset algebra


def product_set(G: CayleyGroup, A: ElementSet, B: ElementSet) -> ElementSet:
    a, b = _as_set(G, A).indices(), _as_set(G, B).indices()
    out = np.zeros(G.order, dtype=bool)
    out[G.table[np.ix_(a, b)]] = True
    return ElementSet(G, _bits.from_bool(out))


def is_permutable(G: CayleyGroup, A: ElementSet, B: ElementSet) -> bool:
    return product_set(G, A, B) == product_set(G, B, A)


def generated_subgroup(G: CayleyGroup, seed: ElementSet) -> ElementSet:
    bits, _ = G._generate(_as_set(G, seed).bits)
    return ElementSet(G, bits)


def is_normal(G: CayleyGroup, H: ElementSet, K: ElementSet | None = None) -> bool:
    """Whether H is normalized by every element of K (default: all of G)."""
    k_idx = np.arange(G.order) if K is None else _as_set(G, K).indices()
    member = _as_set(G, H).as_bool()
    return bool(member[G.conj[np.ix_(k_idx, H.indices())]].all())


def normalizer(G: CayleyGroup, H: ElementSet) -> ElementSet:
    member = _as_set(G, H).as_bool()
    return ElementSet(G, _bits.from_bool(member[G.conj[:, H.indices()]].all(axis=1)))


def core_in(G: CayleyGroup, K: ElementSet, H: ElementSet) -> ElementSet:
    """Intersection of the K-conjugates of H: the largest subgroup of H normal in K."""
    if not _as_set(G, H) <= _as_set(G, K):
        raise GroupError("core_in needs H contained in K")
    member = H.as_bool()
    # y lies in every H^k iff k y k^-1 lies in H for all k in K
    return ElementSet(G, _bits.from_bool(member[G.conj[K.indices()]].all(axis=0)))


def normal_closure(G: CayleyGroup, H: ElementSet, K: ElementSet | None = None) -> ElementSet:
    """Smallest subgroup normalized by K (default G) that contains H."""
    k_idx = np.arange(G.order) if K is None else _as_set(G, K).indices()
    seed = np.zeros(G.order, dtype=bool)
    seed[G.conj[np.ix_(k_idx, _as_set(G, H).indices())]] = True
    return generated_subgroup(G, ElementSet(G, _bits.from_bool(seed)))


def commutator_subgroup(G: CayleyGroup, K: ElementSet | None = None) -> ElementSet:
    k_idx = np.arange(G.order) if K is None else _as_set(G, K).indices()
    seed = np.zeros(G.order, dtype=bool)
    seed[G.commutators[np.ix_(k_idx, k_idx)]] = True
    return generated_subgroup(G, ElementSet(G, _bits.from_bool(seed)))


def center(G: CayleyGroup) -> ElementSet:
    return ElementSet(G, _bits.from_bool((G.table == G.table.T).all(axis=1)))


def is_abelian(G: CayleyGroup) -> bool:
    return bool((G.table == G.table.T).all())


def upper_central_series(G: CayleyGroup) -> list[ElementSet]:
    """``1 = Z_0 <= Z_1 <= ...`` until it stabilizes; x is in Z_(i+1) iff all [x, g] lie in Z_i."""
    series = [G.trivial()]
    while True:
        member = series[-1].as_bool()
        nxt = ElementSet(G, _bits.from_bool(member[G.commutators].all(axis=1)))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent(G: CayleyGroup) -> bool:
    return upper_central_series(G)[-1].bits == G.full_bits


def classify_p_group(P: CayleyGroup) -> str:
    """Structural tag of a p-group.

    One of ``cyclic``, ``cyclic_times_p`` (abelian of type (p^a, p)),
    ``modular`` (nonabelian, generated by a, b with a^(p^(m-1)) = b^p = 1
    and b^-1 a b = a^(1 + p^(m-2)), |P| = p^m), ``quaternion`` (order 8
    only) or ``other``, tested in that order.
    """
    fac = P.prime_factorization
    if len(fac) > 1:
        raise GroupError(f"order {P.order} is not a prime power")
    if P.order == 1:
        return "cyclic"
    (p, m), = fac.items()
    orders = P.element_orders
    if (orders == P.order).any():
        return "cyclic"
    if is_abelian(P):
        # type (p^a, p): exponent |P|/p and exactly p^2 elements of order dividing p
        if orders.max() == P.order // p and int((p % orders == 0).sum()) == p * p:
            return "cyclic_times_p"
        return "other"
    if m >= 3:
        r = 1 + p ** (m - 2)
        big = np.flatnonzero(orders == p ** (m - 1))
        small = np.flatnonzero(orders == p)
        for a in big:
            a = int(a)
            target = P.power(a, r)
            cyc = P._generate(1 << a)[0]
            for b in small:
                b = int(b)
                if (cyc >> b) & 1:
                    continue
                if P.conj[b, a] == target:
                    return "modular"
    if P.order == 8 and int((orders == 2).sum()) == 1:
        return "quaternion"
    return "other"

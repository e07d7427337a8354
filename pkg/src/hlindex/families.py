"""Generators for the graph families the analysis targets: projective-plane
incidence graphs over GF(p^k) (the sqrt(d-1) lower-bound construction),
cycles with pendant paths, a small catalog of named graphs, configuration
model random cubic graphs, and exhaustive enumeration of small subcubic
graphs up to isomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graphs import (
    CANONICAL_LIMIT_DEFAULT,
    Graph,
    build,
    canonical_code,
    is_connected,
)
from .spectral import integer_charpoly


# -- finite field GF(p^k) ------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Arithmetic for GF(p^k), elements encoded as integers 0..q-1.

    An element integer is the base-p encoding of its polynomial coefficient
    vector (constant term in the lowest digit).  The modulus is the
    lexicographically smallest monic irreducible polynomial of degree k,
    ordered by its (c_0, ..., c_{k-1}) coefficient tuple.
    """

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]  # c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        digits = _digits(a, self.p, self.k)
        return _undigits([(-d) % self.p for d in digits], self.p)

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        for b in range(1, self.q):
            if self.mul_table[a][b] == 1:
                return b
        raise AssertionError("field element without inverse")


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(digits, p: int) -> int:
    x = 0
    for d in reversed(digits):
        x = x * p + d
    return x


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus)
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by x^k = -modulus(x) (monic)
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(k):
                prod[deg - k + j] = (prod[deg - k + j] - c * modulus[j]) % p
    prod = prod[:k]
    prod += [0] * (k - len(prod))
    return prod


def _is_irreducible(modulus: list[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..k//2 divides it."""
    k = len(modulus)
    poly = modulus + [1]  # full coefficient list, degree k

    def poly_mod(num: list[int], den: list[int]) -> list[int]:
        num = num[:]
        dd = len(den) - 1
        inv_lead = pow(den[-1], -1, p)
        for i in range(len(num) - 1, dd - 1, -1):
            c = (num[i] * inv_lead) % p
            if c:
                for j in range(dd + 1):
                    num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
        return num

    for deg in range(1, k // 2 + 1):
        for enc in range(p**deg):
            den = _digits(enc, p, deg) + [1]
            rem = poly_mod(poly, den)
            if all(c == 0 for c in rem):
                return False
    return True


def field_build(p: int, k: int) -> FieldSpec:
    """GF(p^k) with full add/mul tables (q up to 2^16 accepted, tables built
    eagerly only at the sizes this package uses; q above 1024 is rejected to
    keep table memory sane)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**k
    if q > 2**16:
        raise ValueError(f"field order {q} exceeds 2^16")
    if q > 1024:
        raise ValueError(f"field order {q} exceeds the table limit 1024")
    modulus = None
    for enc in range(q):
        cand = _digits(enc, p, k)
        if _is_irreducible(cand, p):
            modulus = cand
            break
    if modulus is None:
        raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")
    add_table = tuple(
        tuple(
            _undigits(
                [(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p
            )
            for b in range(q)
        )
        for a in range(q)
    )
    mul_table = tuple(
        tuple(
            _undigits(_poly_mul_mod(_digits(a, p, k), _digits(b, p, k), modulus, p), p)
            for b in range(q)
        )
        for a in range(q)
    )
    return FieldSpec(p=p, k=k, q=q, modulus=tuple(modulus), add_table=add_table, mul_table=mul_table)


# -- projective plane incidence graph ------------------------------------


def _projective_points(F: FieldSpec) -> list[tuple[int, int, int]]:
    """Nonzero triples over GF(q) up to scalars, first nonzero coordinate 1,
    in lexicographic order."""
    pts = []
    q = F.q
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if (x, y, z) == (0, 0, 0):
                    continue
                # canonical iff first nonzero coordinate is 1
                lead = x if x != 0 else (y if y != 0 else z)
                if lead == 1:
                    pts.append((x, y, z))
    return pts


def pg2_incidence(p: int, k: int) -> Graph:
    """Point-line incidence graph of the projective plane of order q = p^k.

    Bipartite and (q+1)-regular on 2(q^2+q+1) vertices: points first (indices
    0..q^2+q), then lines, both in lexicographic order of their canonical
    coordinate triples; a point (x,y,z) joins a line (a,b,c) iff
    xa + yb + zc = 0 in GF(q).
    """
    F = field_build(p, k)
    pts = _projective_points(F)
    npts = len(pts)
    assert npts == F.q**2 + F.q + 1
    edges = []
    for i, (x, y, z) in enumerate(pts):
        for j, (a, b, c) in enumerate(pts):
            s = F.add(F.add(F.mul(x, a), F.mul(y, b)), F.mul(z, c))
            if s == 0:
                edges.append((i, npts + j))
    return build(2 * npts, edges)


# -- cycle with pendant paths ---------------------------------------------


def cycle_with_pendants(t: list[int] | tuple[int, ...]) -> Graph:
    """The k-cycle with a pendant path of length t_i attached at cycle vertex i.

    Cycle vertices are 0..k-1; pendant vertices follow in attachment order.
    """
    k = len(t)
    if k < 3:
        raise ValueError("need at least 3 cycle vertices")
    if any(ti < 0 for ti in t):
        raise ValueError("pendant path lengths must be >= 0")
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for i, ti in enumerate(t):
        prev = i
        for _ in range(ti):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build(nxt, edges)


# -- named graphs ----------------------------------------------------------


def _petersen() -> Graph:
    # Kneser construction: 2-subsets of {0..4}, adjacent iff disjoint
    import itertools

    pairs = list(itertools.combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [
        (idx[a], idx[b])
        for a in pairs
        for b in pairs
        if idx[a] < idx[b] and not set(a) & set(b)
    ]
    return build(10, edges)


def _prism() -> Graph:
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return build(6, edges)


NAMED_FIXED = {
    "k4": lambda: build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]),
    "k3,3": lambda: build(6, [(i, 3 + j) for i in range(3) for j in range(3)]),
    "k1,3": lambda: build(4, [(0, 1), (0, 2), (0, 3)]),
    "prism": _prism,
    "petersen": _petersen,
    "heawood": lambda: pg2_incidence(2, 1),
}


def named(name: str) -> Graph:
    """A graph from the catalog: K4, K3,3, K1,3, prism, petersen, heawood,
    and the parametric families Cn / Pn."""
    key = name.strip().lower()
    if key in NAMED_FIXED:
        return NAMED_FIXED[key]()
    if key.startswith("c") and key[1:].isdigit():
        n = int(key[1:])
        if n < 3:
            raise ValueError("cycles need n >= 3")
        return build(n, [(i, (i + 1) % n) for i in range(n)])
    if key.startswith("p") and key[1:].isdigit():
        n = int(key[1:])
        if n < 1:
            raise ValueError("paths need n >= 1")
        return build(n, [(i, i + 1) for i in range(n - 1)])
    valid = sorted(NAMED_FIXED) + ["C<n>", "P<n>"]
    raise ValueError(f"unknown graph name {name!r}; valid names: {', '.join(valid)}")


# -- random cubic graphs ----------------------------------------------------


def random_cubic(n: int, seed: int | None = None) -> Graph:
    """Uniform-flavored simple 3-regular graph via the configuration model.

    Pairs the 3n half-edges uniformly at random and resamples the whole
    pairing whenever a loop or parallel edge shows up, so every returned
    graph is simple and 3-regular.
    """
    if n % 2 != 0:
        raise ValueError("a 3-regular graph needs an even number of vertices")
    if n < 4:
        raise ValueError("a simple 3-regular graph needs n >= 4")
    rng = random.Random(seed)
    stubs_template = [v for v in range(n) for _ in range(3)]
    while True:
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return build(n, sorted(edges))


# -- exhaustive subcubic enumeration -----------------------------------------

ENUMERATION_LIMIT = 10


def _invariant_key(G: Graph) -> tuple:
    """Exact isomorphism-invariant bucket key (integer charpoly + degrees)."""
    return (G.n, G.m, tuple(sorted(G.degrees)), tuple(integer_charpoly(G)))


class _Deduper:
    """Keeps one representative per isomorphism class.

    Graphs are bucketed by an exact invariant; canonical codes are computed
    lazily, only when a bucket collision forces an exact comparison.
    """

    def __init__(self):
        self.buckets: dict[tuple, list[list]] = {}
        self.count = 0

    def add(self, G: Graph) -> bool:
        key = _invariant_key(G)
        bucket = self.buckets.setdefault(key, [])
        if bucket:
            code = canonical_code(G)
            for entry in bucket:
                if entry[1] is None:
                    entry[1] = canonical_code(entry[0])
                if entry[1] == code:
                    return False
            bucket.append([G, code])
        else:
            bucket.append([G, None])
        self.count += 1
        return True

    def graphs(self) -> list[Graph]:
        return [entry[0] for bucket in self.buckets.values() for entry in bucket]


def _extensions(G: Graph, connected_only: bool) -> Iterator[Graph]:
    """All one-vertex extensions of G keeping maximum degree <= 3."""
    import itertools

    eligible = [v for v in range(G.n) if G.degree(v) <= 2]
    sizes = range(1, 4) if connected_only else range(0, 4)
    base = G.edges()
    for size in sizes:
        for subset in itertools.combinations(eligible, size):
            edges = [(u, v) for u, v, _ in base]
            edges.extend((u, G.n) for u in subset)
            yield build(G.n + 1, edges)


def enumerate_subcubic(n: int, connected_only: bool = False) -> list[Graph]:
    """Exactly one representative per isomorphism class of simple graphs with
    maximum degree <= 3 on n vertices, sorted by canonical code.

    Works by extending every class on n-1 vertices by one new vertex (every
    subcubic graph minus a vertex is subcubic, and connected graphs always
    have a removable non-cut vertex), deduplicating as it goes.
    """
    if not (1 <= n <= ENUMERATION_LIMIT):
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_LIMIT}")
    level = [build(1, [])]
    for size in range(2, n + 1):
        dedup = _Deduper()
        for parent in level:
            for child in _extensions(parent, connected_only):
                dedup.add(child)
        level = dedup.graphs()
    if n == 1:
        return level
    return sorted(level, key=canonical_code)

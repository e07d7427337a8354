"""Loop-free graphs and multigraphs with the structural operations the rest
of the package builds on: induced subgraphs, delete-and-add surgery, vertex
identification, balls, components, a canonical code for isomorphism
rejection, and the graph6 / edge-list interchange formats.

Vertices are always the dense integers 0..n-1.  Operations that delete or
merge vertices renumber the survivors and (where the callers need it) return
an old->new index map.  Graphs are immutable after construction and safe to
share between threads or processes.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

# Parallel edges never need multiplicity above 3 here: surgeries on subcubic
# graphs create at most double edges, identification at most triples one.
MAX_MULTIPLICITY = 3

CANONICAL_LIMIT_DEFAULT = 10


class Graph:
    """Immutable undirected graph or multigraph on vertices 0..n-1.

    Edges are stored as a multiplicity map on unordered pairs; no loops,
    multiplicity capped at MAX_MULTIPLICITY.  Use :func:`build` (or the
    format parsers) rather than calling the constructor with raw data.
    """

    __slots__ = ("n", "allow_parallel", "_mult", "_adj", "_deg", "_hash")

    def __init__(self, n: int, mult: dict[tuple[int, int], int], allow_parallel: bool):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        deg = [0] * n
        clean: dict[tuple[int, int], int] = {}
        for (u, v), c in mult.items():
            if c == 0:
                continue
            if c < 0:
                raise ValueError(f"negative multiplicity on edge ({u},{v})")
            if u == v:
                raise ValueError(f"loop edge ({u},{u}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            if c > 1 and not allow_parallel:
                raise ValueError(f"parallel edge ({u},{v}) in a simple graph")
            if c > MAX_MULTIPLICITY:
                raise ValueError(
                    f"edge ({u},{v}) multiplicity {c} exceeds cap {MAX_MULTIPLICITY}"
                )
            clean[(u, v)] = clean.get((u, v), 0) + c
            adj[u].append((v, c))
            adj[v].append((u, c))
            deg[u] += c
            deg[v] += c
        for row in adj:
            row.sort()
        self.n = n
        self.allow_parallel = bool(allow_parallel)
        self._mult = clean
        self._adj = tuple(tuple(row) for row in adj)
        self._deg = tuple(deg)
        self._hash = hash((n, tuple(sorted(clean.items()))))

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count, parallel edges counted with multiplicity."""
        return sum(self._mult.values())

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def max_degree(self) -> int:
        return max(self._deg, default=0)

    @property
    def average_degree(self) -> float:
        """Edge-to-vertex ratio m/n (so 1.5 for K4); the mean valence is twice this."""
        if self.n == 0:
            raise ValueError("average degree of the empty graph is undefined")
        return self.m / self.n

    @property
    def is_simple(self) -> bool:
        return all(c <= 1 for c in self._mult.values())

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._mult.get((u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, multiplicity) pairs of v."""
        return self._adj[v]

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted (u, v, multiplicity) triples with u < v."""
        return [(u, v, c) for (u, v), c in sorted(self._mult.items())]

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as pairs, parallel edges repeated."""
        out = []
        for u, v, c in self.edges():
            out.extend([(u, v)] * c)
        return out

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for (u, v), c in self._mult.items():
            a[u, v] = c
            a[v, u] = c
        return a

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmask, ignoring multiplicities."""
        masks = [0] * self.n
        for (u, v) in self._mult:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        kind = "Multigraph" if not self.is_simple else "Graph"
        return f"{kind}(n={self.n}, m={self.m})"


def build(
    n: int, edges: Iterable[tuple[int, int]], allow_parallel: bool = False
) -> Graph:
    """Construct a graph from an edge list; repeated pairs accumulate multiplicity.

    Rejects loops, endpoints outside 0..n-1, and (when allow_parallel is
    false) any repeated pair.
    """
    mult: dict[tuple[int, int], int] = {}
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + 1
        if mult[key] > 1 and not allow_parallel:
            raise ValueError(f"duplicate edge ({key[0]},{key[1]}) in a simple graph")
    return Graph(n, mult, allow_parallel)


def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on `keep`, plus the old->new index map."""
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} is not in 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(kept)}
    mult = {
        (index[u], index[v]): c
        for (u, v), c in G._mult.items()
        if u in index and v in index
    }
    return Graph(len(kept), mult, allow_parallel=True), index


def surgery(
    G: Graph, delete: Iterable[int], add: Iterable[tuple[int, int]]
) -> tuple[Graph, dict[int, int]]:
    """(G - delete) + add, the delete-vertices-then-add-edges move.

    Added pairs may duplicate surviving edges of G, producing a multigraph.
    Returns the new graph and the old->new index map for the survivors.
    """
    gone = set(delete)
    add = list(add)
    for u, v in add:
        if u in gone or v in gone:
            raise ValueError(f"added edge ({u},{v}) touches a deleted vertex")
        if u == v:
            raise ValueError(f"added edge ({u},{u}) would be a loop")
    kept = [v for v in range(G.n) if v not in gone]
    index = {v: i for i, v in enumerate(kept)}
    mult: dict[tuple[int, int], int] = {}
    for (u, v), c in G._mult.items():
        if u in index and v in index:
            mult[(index[u], index[v])] = c
    for u, v in add:
        a, b = index[u], index[v]
        key = (a, b) if a < b else (b, a)
        mult[key] = mult.get(key, 0) + 1
    return Graph(len(kept), mult, allow_parallel=True), index


def identify(G: Graph, u: int, v: int) -> Graph:
    """Merge u and v into one vertex, dropping any u-v edges as loops.

    The merged vertex takes min(u,v)'s slot; vertices above max(u,v) shift
    down by one.  Parallel edges arising from common neighbors are retained.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"vertices must be in 0..{G.n - 1}")
    lo, hi = min(u, v), max(u, v)

    def remap(x: int) -> int:
        if x == hi:
            x = lo
        return x - 1 if x > hi else x

    mult: dict[tuple[int, int], int] = {}
    for (a, b), c in G._mult.items():
        ra, rb = remap(a), remap(b)
        if ra == rb:
            continue  # the u-v edge became a loop
        key = (ra, rb) if ra < rb else (rb, ra)
        mult[key] = mult.get(key, 0) + c
    return Graph(G.n - 1, mult, allow_parallel=True)


def bfs_distances(G: Graph, source: int, cutoff: int | None = None) -> dict[int, int]:
    """Breadth-first distances from source, optionally stopping at cutoff."""
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier and (cutoff is None or d < cutoff):
        d += 1
        nxt = []
        for x in frontier:
            for y, _ in G._adj[x]:
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def ball(G: Graph, v: int, r: int) -> set[int]:
    """All vertices at distance <= r from v."""
    if r < 0:
        raise ValueError("radius must be >= 0")
    return set(bfs_distances(G, v, cutoff=r))


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y, _ in G._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return len(bfs_distances(G, 0)) == G.n


# -- canonical code ----------------------------------------------------
#
# The code of a simple graph is its lexicographically minimal column-major
# upper-triangle adjacency bitstring over all vertex orderings (the same cell
# order graph6 uses), prefixed by the vertex count.  Computed by
# branch-and-bound over partial orderings: candidates at each position are
# tried in ascending column-bits order, branches whose partial string exceeds
# the best known are cut, and automorphisms discovered when two complete
# orderings tie are reused to skip equivalent siblings.


def canonical_code(G: Graph, limit: int = CANONICAL_LIMIT_DEFAULT) -> bytes:
    """Canonical byte string: equal codes iff the simple graphs are isomorphic."""
    if not G.is_simple:
        raise ValueError("canonical_code is defined for simple graphs only")
    if G.n > limit:
        raise ValueError(f"canonical_code supports n <= {limit}, got {G.n}")
    n = G.n
    if n == 0:
        return b"\x00"
    cols = _minimal_columns(G.adjacency_masks())
    bits = []
    for j, col in enumerate(cols, start=1):
        bits.extend((col >> (j - 1 - i)) & 1 for i in range(j))
    packed = bytearray([n])
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i : i + 8]:
            byte = (byte << 1) | b
        byte <<= 8 - min(8, len(bits) - i)
        packed.append(byte)
    return bytes(packed)


def _minimal_columns(masks: list[int]) -> list[int]:
    """Minimal column tuple (col_1..col_{n-1}) over all vertex orderings."""
    n = len(masks)
    if n == 1:
        return []
    best: list[int] | None = None
    best_order: list[int] | None = None
    order = [0] * n
    placed_mask = 0
    cols: list[int] = []  # columns of positions 1..depth-1
    autos: list[list[int]] = []  # automorphisms discovered at tied leaves

    def dfs(depth: int):
        nonlocal best, best_order, placed_mask
        placed = order[:depth]
        scored = []
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            mv = masks[v]
            col = 0
            for p in placed:
                col = (col << 1) | ((mv >> p) & 1)
            scored.append((col, v))
        scored.sort()
        tried: list[int] = []
        for col, v in scored:
            if best is not None and depth > 0:
                # fresh compare of cols+[col] against best[:depth]; best may
                # have improved via an earlier sibling of this very loop
                verdict = 0
                for i in range(depth):
                    a = cols[i] if i < depth - 1 else col
                    b = best[i]
                    if a != b:
                        verdict = -1 if a < b else 1
                        break
                if verdict > 0:
                    # the node's prefix never exceeds best, so the divergence
                    # is at this col; candidates are sorted, nothing survives
                    break
            # skip candidates equivalent to an already-tried sibling under an
            # automorphism that fixes every placed vertex
            skip = False
            for a in autos:
                if a[v] in tried and all(a[p] == p for p in placed):
                    skip = True
                    break
            if skip:
                tried.append(v)
                continue
            order[depth] = v
            placed_mask |= 1 << v
            if depth > 0:
                cols.append(col)
            if depth == n - 1:
                if best is None or cols < best:
                    best = cols.copy()
                    best_order = order.copy()
                elif cols == best and best_order is not None:
                    a = [0] * n
                    for pos in range(n):
                        a[best_order[pos]] = order[pos]
                    autos.append(a)
            else:
                dfs(depth + 1)
            if depth > 0:
                cols.pop()
            placed_mask &= ~(1 << v)
            tried.append(v)

    dfs(0)
    assert best is not None
    return best


def canonical_form(G: Graph, limit: int = CANONICAL_LIMIT_DEFAULT) -> Graph:
    """A canonically labeled copy of G (same code for all isomorphic inputs)."""
    if not G.is_simple:
        raise ValueError("canonical_form is defined for simple graphs only")
    if G.n > limit:
        raise ValueError(f"canonical_form supports n <= {limit}, got {G.n}")
    if G.n <= 1:
        return G
    cols = _minimal_columns(G.adjacency_masks())
    edges = []
    for j, col in enumerate(cols, start=1):
        for i in range(j):
            if (col >> (j - 1 - i)) & 1:
                edges.append((i, j))
    return build(G.n, edges)


# -- graph6 ------------------------------------------------------------


def encode_graph6(G: Graph) -> str:
    """graph6 text for a simple graph (standard length prefix, n <= 258047)."""
    if not G.is_simple:
        raise ValueError("graph6 encodes simple graphs only")
    n = G.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError(f"graph6 short/extended form supports n <= 258047, got {n}")
    bits = []
    for v in range(1, n):
        row = G._adj[v]
        mask = 0
        for u, _ in row:
            if u < v:
                mask |= 1 << u
        bits.extend((mask >> u) & 1 for u in range(v))
    body = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 line; malformed input is rejected with the bad position."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    for pos, val in enumerate(data):
        if not (0 <= val <= 63):
            raise ValueError(f"graph6 byte out of range at position {pos}: {s[pos]!r}")
    if data[0] == 63:  # '~': extended length
        if len(data) < 4:
            raise ValueError("graph6 extended header truncated at position 1")
        if data[1] == 63:
            raise ValueError("graph6 long form (n > 258047) is not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
        body_start = 4
    else:
        n = data[0]
        body = data[1:]
        body_start = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ValueError(
            f"graph6 body too short at position {body_start + len(body)}: "
            f"need {need} bytes for n={n}, got {len(body)}"
        )
    if len(body) > need:
        raise ValueError(f"graph6 trailing bytes at position {body_start + need}")
    bits = []
    for val in body:
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise ValueError(
                f"graph6 nonzero padding bit at position {body_start + k // 6}"
            )
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return build(n, edges)


# -- plain edge-list format ---------------------------------------------


def format_edge_list(G: Graph) -> str:
    """Text form: first line "n m", then one "u v" line per edge (with multiplicity)."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edge_list())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" + edge-lines format; repeated lines become parallel edges."""
    rows = [ln for ln in (r.strip() for r in text.splitlines()) if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"edge-list header must be two integers, got {rows[0]!r}")
    if len(rows) - 1 != m:
        raise ValueError(f"edge-list declares m={m} but has {len(rows) - 1} edge lines")
    edges = []
    for lineno, row in enumerate(rows[1:], start=2):
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"edge line {lineno} must be 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"edge line {lineno} must be two integers, got {row!r}")
    return build(n, edges, allow_parallel=True)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G together with a shifted copy of H."""
    mult = dict(G._mult)
    for (u, v), c in H._mult.items():
        mult[(u + G.n, v + G.n)] = c
    return Graph(G.n + H.n, mult, allow_parallel=True)

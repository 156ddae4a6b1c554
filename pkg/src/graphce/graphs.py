"""Simple undirected graphs on labelled vertices, stored as packed adjacency bit rows.

Vertices are 0-indexed internally; the CLI and file formats use 1-indexed
qubit labels.  The upper-triangle edge-bit order used by graph6, edge masks
and canonical forms is column-major: (0,1), (0,2), (1,2), (0,3), ...
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import GF2Matrix, GF2Vector

CANONICAL_MAX_VERTICES = 8
GRAPH6_MAX_VERTICES = 62


class DuplicateEdgeWarning(UserWarning):
    """Emitted when an edge list repeats an edge; duplicates are collapsed."""


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class QubitSet:
    """A subset of {0, ..., universe-1} stored as a bitmask."""

    universe: int
    members: int = 0

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise ValueError(f"negative universe {self.universe}")
        if self.members >> self.universe:
            raise ValueError(f"members 0x{self.members:x} exceed universe {self.universe}")

    @classmethod
    def from_members(cls, universe: int, members: Iterable[int]) -> QubitSet:
        mask = 0
        for m in members:
            if not 0 <= m < universe:
                raise ValueError(f"member {m} out of range for universe {universe}")
            mask |= 1 << m
        return cls(universe, mask)

    @classmethod
    def full(cls, universe: int) -> QubitSet:
        return cls(universe, (1 << universe) - 1)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __iter__(self):
        return (i for i in range(self.universe) if (self.members >> i) & 1)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.universe and bool((self.members >> i) & 1)

    def complement(self) -> QubitSet:
        return QubitSet(self.universe, ~self.members & ((1 << self.universe) - 1))

    def isdisjoint(self, other: QubitSet) -> bool:
        return not (self.members & other.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits beyond vertex range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.adj[u] >> v) & 1) != ((self.adj[v] >> u) & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if (self.adj[u] >> v) & 1]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 0-indexed endpoint pairs; duplicate edges collapse with a warning."""
    adj = [0] * n
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge {key} collapsed", DuplicateEdgeWarning, stacklevel=2)
            continue
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


FAMILY_KINDS = ("linear", "ring", "star", "complete", "snowflake")


def family(kind: str, n: int) -> Graph:
    """A named graph family member.

    linear/ring/star/complete are on n vertices (ring needs n >= 3).
    snowflake(n) has 2n vertices: a complete core 0..n-1 plus pendant
    vertex i+n attached to core vertex i.
    """
    if n < 1:
        raise ValueError(f"family size must be >= 1, got {n}")
    if kind == "linear":
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "ring":
        if n < 3:
            raise ValueError(f"ring requires n >= 3, got {n}")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        return from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "complete":
        return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "snowflake":
        core = [(u, v) for u in range(n) for v in range(u + 1, n)]
        pendants = [(i, i + n) for i in range(n)]
        return from_edges(2 * n, core + pendants)
    raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")


def neighborhood(graph: Graph, a: int) -> QubitSet:
    """Vertices joined to a by a single edge."""
    if not 0 <= a < graph.n:
        raise ValueError(f"vertex {a} out of range for n={graph.n}")
    return QubitSet(graph.n, graph.adj[a])


def biadjacency(graph: Graph, a_set: QubitSet, b_set: QubitSet) -> GF2Matrix:
    """The |A| x |B| submatrix of the adjacency matrix with rows in A, columns in B.

    Row i / column j refer to the i-th and j-th members of A and B in
    ascending vertex order.  A and B must be disjoint.
    """
    if not a_set.isdisjoint(b_set):
        raise ValueError("biadjacency requires disjoint vertex sets")
    b_members = list(b_set)
    rows = []
    for a in a_set:
        bits = 0
        for j, b in enumerate(b_members):
            bits |= ((graph.adj[a] >> b) & 1) << j
        rows.append(GF2Vector(len(b_members), bits))
    return GF2Matrix(len(rows), len(b_members), tuple(rows))


def is_connected(graph: Graph) -> bool:
    """Breadth-first reachability from vertex 0 covers all vertices."""
    if graph.n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                reach |= graph.adj[v]
            f >>= 1
            v += 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << graph.n) - 1


def induced_subgraph(graph: Graph, keep: QubitSet) -> Graph:
    """The subgraph on `keep`, relabelled 0..|keep|-1 in ascending vertex order."""
    members = list(keep)
    index = {v: i for i, v in enumerate(members)}
    adj = [0] * len(members)
    for v in members:
        row = graph.adj[v] & keep.members
        w = 0
        r = row
        while r:
            if r & 1:
                adj[index[v]] |= 1 << index[w]
            r >>= 1
            w += 1
    return Graph(len(members), tuple(adj))


# --- upper-triangle edge masks ------------------------------------------------
#
# Pair p (column-major index) sits at mask bit P-1-p, so that the integer
# order of masks coincides with the lexicographic order of the bit sequence.


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Column-major index of the pair (i, j) with i < j."""
    if not i < j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    return j * (j - 1) // 2 + i


def graph_to_mask(graph: Graph) -> int:
    total = pair_count(graph.n)
    mask = 0
    for i, j in graph.edges():
        mask |= 1 << (total - 1 - pair_index(i, j))
    return mask


def mask_to_graph(mask: int, n: int) -> Graph:
    total = pair_count(n)
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if (mask >> (total - 1 - pair_index(i, j))) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# --- graph6 -------------------------------------------------------------------


def write_graph6(graph: Graph) -> str:
    """Encode in graph6 short form (printable bytes, n <= 62)."""
    n = graph.n
    if n > GRAPH6_MAX_VERTICES:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_VERTICES}, got {n}")
    total = pair_count(n)
    mask = graph_to_mask(graph)
    out = [chr(63 + n)]
    # body bits in pair order, padded with zeros to a 6-bit boundary
    ngroups = (total + 5) // 6
    padded = mask << (6 * ngroups - total)
    for g in range(ngroups):
        out.append(chr(63 + ((padded >> (6 * (ngroups - 1 - g))) & 0x3F)))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 short-form string; strict about length and padding."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside printable graph6 range", off)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error("malformed length byte (long form not supported)", 0)
    total = pair_count(n)
    ngroups = (total + 5) // 6
    if len(s) - 1 != ngroups:
        raise Graph6Error(f"expected {ngroups} body bytes for n={n}, got {len(s) - 1}", min(len(s), 1 + ngroups))
    padded = 0
    for ch in s[1:]:
        padded = (padded << 6) | (ord(ch) - 63)
    pad_bits = 6 * ngroups - total
    if padded & ((1 << pad_bits) - 1):
        raise Graph6Error("trailing padding bits nonzero", len(s) - 1)
    return mask_to_graph(padded >> pad_bits, n)


# --- edge-list text format ------------------------------------------------------
#
# First line "n", then one "u v" pair per line, 1-indexed.


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' pair, got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge label ({u}, {v}) out of range 1..{n}")
        edges.append((u - 1, v - 1))
    return from_edges(n, edges)


def write_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)]
    lines += [f"{u + 1} {v + 1}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


# --- canonical form -------------------------------------------------------------


def canonical_form(graph: Graph, max_vertices: int = CANONICAL_MAX_VERTICES) -> bytes:
    """Canonical byte key: equal for two graphs iff they are isomorphic.

    The key encodes the minimum upper-triangle edge mask over all vertex
    orderings.  The lexicographic minimum always extends a prefix whose next
    adjacency column is minimal, so the search only branches on minimal-column
    candidates, collapses candidates that are interchangeable by a
    transposition automorphism, and prunes prefixes that already exceed the
    best ordering found.
    """
    n = graph.n
    if n > max_vertices:
        raise ValueError(f"canonical_form limited to n <= {max_vertices}, got {n}")
    total = pair_count(n)
    if n <= 1:
        return bytes([n])
    adj = graph.adj
    best: list[int] | None = None

    def rec(placed: list[int], remaining: list[int], cols: list[int]) -> None:
        nonlocal best
        depth = len(placed)
        if best is not None:
            for d in range(depth):
                if cols[d] < best[d]:
                    break
                if cols[d] > best[d]:
                    return
        if depth == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        scored = []
        for v in remaining:
            c = 0
            for u in placed:
                c = (c << 1) | ((adj[u] >> v) & 1)
            scored.append((c, v))
        cmin = min(c for c, _ in scored)
        # collapse interchangeable candidates: identical adjacency away from the pair
        group: list[int] = []
        for c, v in scored:
            if c != cmin:
                continue
            keep = True
            for u in group:
                pair_bits = (1 << u) | (1 << v)
                if (adj[v] | pair_bits) == (adj[u] | pair_bits):
                    keep = False
                    break
            if keep:
                group.append(v)
        for v in group:
            rec(placed + [v], [w for w in remaining if w != v], cols + [cmin])

    rec([], list(range(n)), [])
    assert best is not None
    mask = 0
    for depth, c in enumerate(best):
        mask = (mask << depth) | c
    return bytes([n]) + mask.to_bytes((total + 7) // 8, "big")


def permute(graph: Graph, order: Sequence[int]) -> Graph:
    """Relabelled copy: new vertex i is old vertex order[i]."""
    if sorted(order) != list(range(graph.n)):
        raise ValueError("order must be a permutation of the vertices")
    inv = {old: new for new, old in enumerate(order)}
    return from_edges(graph.n, [(inv[u], inv[v]) for u, v in graph.edges()])


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Uniformly-seeded random connected graph: random spanning tree plus coin-flip extras."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < 0.5:
                edges.add((u, v))
    return from_edges(n, sorted(edges))

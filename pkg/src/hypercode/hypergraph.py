"""Hypergraphs, incidence matrices, and the edge-parity subset search.

A hypergraph is a vertex count plus an ordered multiset of edges; repeated
edges are kept (deduplicating would silently change the code length) and
each edge is a nonempty set of vertices stored as a sorted tuple.  Vertices
are 0-based everywhere in the library; 1-based labels appear only in
human-facing CLI output.

For a vertex subset S, ``eonv(H, S)`` is the set of edges containing an odd
number of vertices of S.  Minimizing its nonzero size over all subsets is
one of the two minimum-distance engines; it is implemented here as a
Gray-code walk so each step costs one row XOR and one popcount.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .gf2core import BitMatrix, BitVector
from .limits import EnumerationCapError, resolve_enum_cap

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus an ordered multiset of nonempty edges."""

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        normalized = []
        for edge in self.edges:
            t = tuple(sorted(edge))
            if not t:
                raise ValueError("edges must be nonempty")
            if len(set(t)) != len(t):
                raise ValueError(f"edge {t} repeats a vertex")
            if t[0] < 0 or t[-1] >= self.num_vertices:
                raise ValueError(f"edge {t} is out of range for {self.num_vertices} vertices")
            normalized.append(t)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def uniformity(self) -> int | None:
        """Common edge cardinality, or None if edges have mixed sizes."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def degree(self, vertex: int) -> int:
        if not 0 <= vertex < self.num_vertices:
            raise IndexError(f"vertex {vertex} out of range")
        return self.vertex_rows[vertex].bit_count()

    @cached_property
    def vertex_rows(self) -> tuple[int, ...]:
        """Incidence matrix rows as packed ints (bit j = membership in edge j)."""
        rows = [0] * self.num_vertices
        for j, edge in enumerate(self.edges):
            bit = 1 << j
            for v in edge:
                rows[v] |= bit
        return tuple(rows)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Edges as packed vertex sets (bit v = vertex v belongs to the edge)."""
        return tuple(sum(1 << v for v in e) for e in self.edges)


def incidence_matrix(hypergraph: Hypergraph) -> BitMatrix:
    """The n-by-m vertex-edge incidence matrix; column order follows the edge order."""
    return BitMatrix(hypergraph.num_vertices, hypergraph.num_edges, hypergraph.vertex_rows)


def from_incidence_matrix(matrix: BitMatrix) -> Hypergraph:
    """Reconstruct the hypergraph whose incidence matrix is ``matrix``.

    Every column must be nonzero, since a column is an edge and edges are
    nonempty.
    """
    edges = []
    for j in range(matrix.num_cols):
        edge = tuple(i for i in range(matrix.num_rows) if (matrix.rows[i] >> j) & 1)
        if not edge:
            raise ValueError(f"column {j} is empty and cannot be an edge")
        edges.append(edge)
    return Hypergraph(matrix.num_rows, tuple(edges))


def subset_mask(hypergraph: Hypergraph, subset: Iterable[int]) -> int:
    """Validate a nonempty vertex subset and pack it into a bit mask."""
    vertices = set(subset)
    if not vertices:
        raise ValueError("the vertex subset must be nonempty")
    mask = 0
    for v in vertices:
        if not 0 <= v < hypergraph.num_vertices:
            raise IndexError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


def eonv(hypergraph: Hypergraph, subset: Iterable[int]) -> list[int]:
    """Indices of the edges containing an odd number of vertices of ``subset``.

    Computed edge by edge from the definition; the row-XOR shortcut is a
    separate code path so the two can cross-check each other.
    """
    mask = subset_mask(hypergraph, subset)
    return [
        j
        for j, edge_mask in enumerate(hypergraph.edge_masks)
        if (edge_mask & mask).bit_count() & 1
    ]


@dataclass(frozen=True)
class SubsetSearchResult:
    """Outcome of a subset-enumeration distance search."""

    weight: int
    witness: tuple[int, ...]
    exact: bool


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _subset_scan_range(
    rows: Sequence[int], start: int, stop: int, early_exit: int | None
) -> tuple[int | None, tuple[int, ...] | None, bool]:
    """Scan subset indices [start, stop) in Gray-code order.

    Index i denotes the subset gray(i) = i ^ (i >> 1); consecutive indices
    differ in bit (i & -i).bit_length() - 1, so each step is one row XOR.
    Returns the best nonzero weight, its lexicographically smallest witness
    within the range, and whether the range was scanned to completion.
    """
    acc = 0
    pending = start ^ (start >> 1)
    while pending:
        low = pending & -pending
        acc ^= rows[low.bit_length() - 1]
        pending ^= low
    best_w: int | None = None
    best_wit: tuple[int, ...] | None = None
    for i in range(start, stop):
        if i != start:
            acc ^= rows[(i & -i).bit_length() - 1]
        if i == 0:
            continue
        w = acc.bit_count()
        if w == 0:
            continue
        if best_w is None or w < best_w:
            best_w = w
            best_wit = _mask_to_vertices(i ^ (i >> 1))
            if early_exit is not None and w <= early_exit:
                return best_w, best_wit, False
        elif w == best_w:
            mask = i ^ (i >> 1)
            if (mask & -mask).bit_length() - 1 <= best_wit[0]:
                candidate = _mask_to_vertices(mask)
                if candidate < best_wit:
                    best_wit = candidate
    return best_w, best_wit, True


def eonv_search(
    hypergraph: Hypergraph,
    *,
    early_exit: int | None = None,
    cap: int | None = None,
    num_ranges: int = 1,
    map_fn: Callable = map,
) -> SubsetSearchResult:
    """Minimize |eonv(S)| over nonempty subsets S with eonv(S) nonempty.

    Exhausts all 2^n - 1 subsets unless ``early_exit`` is given, in which
    case the scan stops at the first weight <= early_exit and the result is
    an upper bound (``exact`` is False).  The subset space may be split into
    ``num_ranges`` contiguous index ranges evaluated through ``map_fn``
    (e.g. a thread pool's map); the result, including the lexicographically
    smallest witness among minimizers, does not depend on the partitioning.
    Early-exit searches always run as a single range so that the reported
    bound is partition-independent too.
    """
    rows = hypergraph.vertex_rows
    if not any(rows):
        raise ValueError("the incidence matrix is zero; there is no nonzero codeword")
    n = hypergraph.num_vertices
    total = 1 << n
    limit = resolve_enum_cap(cap)
    if total - 1 > limit:
        raise EnumerationCapError(
            f"subset search needs {total - 1} evaluations, above the cap of {limit}"
        )
    if early_exit is not None:
        num_ranges = 1
    num_ranges = max(1, min(num_ranges, total))
    bounds = [(total * r) // num_ranges for r in range(num_ranges + 1)]
    tasks = [
        (rows, lo, hi, early_exit) for lo, hi in zip(bounds, bounds[1:]) if lo < hi
    ]
    results = list(map_fn(_scan_subset_task, tasks))
    best: tuple[int, tuple[int, ...]] | None = None
    exact = True
    for weight, witness, completed in results:
        exact = exact and completed
        if weight is None:
            continue
        if best is None or (weight, witness) < best:
            best = (weight, witness)
    if best is None:
        raise ValueError("no nonzero codeword found")
    return SubsetSearchResult(best[0], best[1], exact)


def _scan_subset_task(task):
    return _subset_scan_range(*task)


def eonv_min(hypergraph: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Exhaustive minimum of |eonv(S)| and its lexicographically smallest witness."""
    result = eonv_search(hypergraph)
    return result.weight, result.witness


# ---------------------------------------------------------------------------
# Families


def complete_3partite(n: int) -> Hypergraph:
    """Complete 3-partite 3-uniform hypergraph with parts of size n.

    Vertices: X = 0..n-1, Y = n..2n-1, Z = 2n..3n-1.  Edges are all n^3
    triples {i, n+j, 2n+k} in lexicographic (i, j, k) order.
    """
    if n < 1:
        raise ValueError("part size must be positive")
    edges = tuple(
        (i, n + j, 2 * n + k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )
    return Hypergraph(3 * n, edges)


def f_count(n: int, k1: int, k2: int, k3: int) -> int:
    """Edges of ``complete_3partite(n)`` meeting a subset oddly, by part counts.

    For any subset S with |S ∩ X| = k1, |S ∩ Y| = k2, |S ∩ Z| = k3, the
    number of edges meeting S in exactly one or exactly three vertices is
    k1(n-k2)(n-k3) + (n-k1)k2(n-k3) + (n-k1)(n-k2)k3 + k1·k2·k3.
    """
    if n < 1:
        raise ValueError("part size must be positive")
    if not (0 <= k1 <= n and 0 <= k2 <= n and 0 <= k3 <= n):
        raise ValueError(f"part counts must lie in [0, {n}]")
    return (
        k1 * (n - k2) * (n - k3)
        + (n - k1) * k2 * (n - k3)
        + (n - k1) * (n - k2) * k3
        + k1 * k2 * k3
    )


def projective_geometry(n: int) -> Hypergraph:
    """Points and lines of the binary projective geometry PG(n-1, 2).

    Vertices are the nonzero vectors of F_2^n identified with the integers
    1..2^n - 1 (vertex index = integer value - 1).  Lines are the triples
    {a, b, a xor b}; each appears once, listed with a < b < a xor b in
    lexicographic order.  There are (2^n - 1)(2^(n-1) - 1)/3 of them.
    """
    if n < 3:
        raise ValueError("the geometry needs dimension at least 3")
    top = 1 << n
    edges = []
    for a in range(1, top):
        for b in range(a + 1, top):
            c = a ^ b
            if c > b:
                edges.append((a - 1, b - 1, c - 1))
    return Hypergraph(top - 1, tuple(edges))


FANO_EDGES: tuple[Edge, ...] = (
    (0, 1, 3),
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (0, 4, 5),
    (1, 5, 6),
    (0, 2, 6),
)


def fano_circulant() -> Hypergraph:
    """The Fano plane with the vertex labeling that makes its incidence circulant.

    Line j is {j, j+1, j+3} mod 7, so the incidence matrix has first row
    1000101 and every later row is the previous one cyclically shifted.
    """
    return Hypergraph(7, FANO_EDGES)


def circulant_hypergraph(first_row: BitVector | str) -> Hypergraph:
    """Hypergraph whose incidence matrix is circulant with the given first row.

    Row i holds entry ``first_row[(j - i) mod n]`` in column j.  The result
    is vertex- and edge-regular with common degree equal to the row weight.
    """
    if isinstance(first_row, str):
        first_row = BitVector.from_string(first_row)
    n = first_row.length
    if n < 1:
        raise ValueError("the first row must be nonempty")
    if first_row.weight == 0:
        raise ValueError("a zero first row would make every edge empty")
    support = first_row.support
    edges = tuple(tuple(sorted((j - s) % n for s in support)) for j in range(n))
    return Hypergraph(n, edges)


def block_row(k: int, m: int) -> BitVector:
    """First row for the block-circulant family: k blocks of m ones then m zeros."""
    if k < 1 or m < 1:
        raise ValueError("block counts must be positive")
    bits = 0
    block = (1 << m) - 1
    for j in range(k):
        bits |= block << (2 * j * m)
    return BitVector(2 * k * m, bits)


# ---------------------------------------------------------------------------
# Local structure


def complement_edge(hypergraph: Hypergraph, index: int) -> frozenset[int]:
    """All vertices outside the given edge (the complement as a vertex set)."""
    if not 0 <= index < hypergraph.num_edges:
        raise IndexError(f"edge {index} out of range")
    return frozenset(range(hypergraph.num_vertices)) - set(hypergraph.edges[index])


def edges_at(hypergraph: Hypergraph, vertex: int) -> frozenset[int]:
    """Indices of the edges containing the vertex; its size is the degree."""
    if not 0 <= vertex < hypergraph.num_vertices:
        raise IndexError(f"vertex {vertex} out of range")
    row = hypergraph.vertex_rows[vertex]
    return frozenset(_mask_to_vertices(row))


def is_connected(hypergraph: Hypergraph) -> bool:
    """Whether the bipartite vertex-edge incidence structure is connected."""
    n = hypergraph.num_vertices
    if n == 1:
        return True
    rows = hypergraph.vertex_rows
    seen_vertices = 1
    seen_edges = 0
    frontier = [0]
    count = 1
    while frontier:
        v = frontier.pop()
        new_edges = rows[v] & ~seen_edges
        seen_edges |= new_edges
        while new_edges:
            low = new_edges & -new_edges
            new_edges ^= low
            for u in hypergraph.edges[low.bit_length() - 1]:
                bit = 1 << u
                if not seen_vertices & bit:
                    seen_vertices |= bit
                    count += 1
                    frontier.append(u)
    return count == n


# ---------------------------------------------------------------------------
# Random instances (seeded; used by the scan command and the test corpora)


def random_hypergraph(
    rng: random.Random,
    num_vertices: int,
    num_edges: int,
    max_edge_size: int | None = None,
) -> Hypergraph:
    """Random hypergraph with the given order and size (edges may repeat)."""
    if num_vertices < 1 or num_edges < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    top = num_vertices if max_edge_size is None else min(max_edge_size, num_vertices)
    if top < 1:
        raise ValueError("max_edge_size must allow nonempty edges")
    edges = tuple(
        tuple(sorted(rng.sample(range(num_vertices), rng.randint(1, top))))
        for _ in range(num_edges)
    )
    return Hypergraph(num_vertices, edges)


def random_uniform_hypergraph(
    rng: random.Random, num_vertices: int, num_edges: int, edge_size: int
) -> Hypergraph:
    """Random r-uniform hypergraph (edges may repeat)."""
    if not 1 <= edge_size <= num_vertices:
        raise ValueError("edge size must be between 1 and the vertex count")
    edges = tuple(
        tuple(sorted(rng.sample(range(num_vertices), edge_size)))
        for _ in range(num_edges)
    )
    return Hypergraph(num_vertices, edges)


# ---------------------------------------------------------------------------
# Text format


def format_hypergraph(hypergraph: Hypergraph) -> str:
    """Serialize to the hypergraph text format.

    First line ``<num_vertices> <num_edges>``, then one line per edge of
    space-separated ascending 0-based vertex indices.  Round-trips
    bit-exactly (including repeated edges and edge order).
    """
    lines = [f"{hypergraph.num_vertices} {hypergraph.num_edges}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in hypergraph.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hypergraph text format; blank lines and '#' comments are ignored."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty hypergraph file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"hypergraph header must be '<vertices> <edges>', got {lines[0]!r}")
    try:
        num_vertices, num_edges = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"hypergraph header must be two integers, got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != num_edges:
        raise ValueError(f"expected {num_edges} edge lines, found {len(body)}")
    edges = []
    for line in body:
        try:
            vertices = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"edge line must hold integers, got {line!r}") from None
        if any(a >= b for a, b in zip(vertices, vertices[1:])):
            raise ValueError(f"edge vertices must be strictly ascending: {line!r}")
        edges.append(tuple(vertices))
    return Hypergraph(num_vertices, tuple(edges))

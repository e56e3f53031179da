"""Binary linear codes from generator matrices.

A code is the row space of its generator matrix.  Two independent
minimum-distance engines are provided on purpose: message-space enumeration
over the 2^k combinations of basis rows, and vertex-subset enumeration over
the 2^n rows of an incidence matrix.  Their agreement on incidence codes is
the core correctness property of the package, so the two loops share no
code; see :func:`hypercode.hypergraph.eonv_search` for the subset side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .gf2core import BitMatrix, gram, nullspace_basis, rref
from .hypergraph import Hypergraph, edges_at, eonv_search, incidence_matrix, is_connected
from .limits import EnumerationCapError, resolve_enum_cap


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code presented by a generator matrix.

    The reduced form is cached on first use; ``basis`` holds the nonzero
    RREF rows, which span the same row space with independent rows.
    """

    generator: BitMatrix

    @cached_property
    def _reduced(self) -> tuple[BitMatrix, tuple[int, ...]]:
        return rref(self.generator)

    @property
    def basis(self) -> BitMatrix:
        reduced, pivots = self._reduced
        return BitMatrix(len(pivots), self.generator.num_cols, reduced.rows[: len(pivots)])

    @property
    def length(self) -> int:
        return self.generator.num_cols

    @property
    def dimension(self) -> int:
        return len(self._reduced[1])


def from_generator(matrix: BitMatrix) -> LinearCode:
    """Code generated by the rows of ``matrix``; the length must be positive."""
    if matrix.num_cols == 0:
        raise ValueError("a code needs at least one coordinate")
    return LinearCode(matrix)


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum-distance search.

    ``exact`` is False when an early-exit threshold stopped the scan, in
    which case ``value`` is only an upper bound on the true distance.
    ``witness`` is the minimizing vertex subset when the subset engine ran.
    """

    value: int
    exact: bool
    method: str
    witness: tuple[int, ...] | None = None


def _codeword_scan_range(
    rows: Sequence[int], start: int, stop: int, early_exit: int | None
) -> tuple[int | None, bool]:
    # Gray-code walk over message indices; one basis-row XOR per step.
    # Kept separate from the subset engine so the two distance routes stay
    # independently checkable.
    acc = 0
    pending = start ^ (start >> 1)
    while pending:
        low = pending & -pending
        acc ^= rows[low.bit_length() - 1]
        pending ^= low
    best: int | None = None
    for i in range(start, stop):
        if i != start:
            acc ^= rows[(i & -i).bit_length() - 1]
        if i == 0:
            continue
        w = acc.bit_count()
        if best is None or w < best:
            best = w
            if early_exit is not None and w <= early_exit:
                return best, False
    return best, True


def _scan_codeword_task(task):
    return _codeword_scan_range(*task)


def codeword_distance_search(
    code: LinearCode,
    *,
    early_exit: int | None = None,
    cap: int | None = None,
    num_ranges: int = 1,
    map_fn: Callable = map,
) -> DistanceResult:
    """Minimum nonzero codeword weight by exhaustive message-space enumeration.

    Walks all 2^k - 1 nonzero messages in Gray-code order, XORing one basis
    row per step.  ``num_ranges``/``map_fn`` split the message space into
    contiguous ranges (each re-seeded at its start) for parallel workers;
    the minimum is a deterministic reduction, so the result does not depend
    on the partitioning.  With ``early_exit`` the scan stops at the first
    weight <= early_exit and the result is flagged as an upper bound; such
    searches run as a single range so the bound is partition-independent.
    """
    k = code.dimension
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    total = 1 << k
    limit = resolve_enum_cap(cap)
    if total - 1 > limit:
        raise EnumerationCapError(
            f"codeword search needs {total - 1} evaluations, above the cap of {limit}"
        )
    if early_exit is not None:
        num_ranges = 1
    num_ranges = max(1, min(num_ranges, total))
    rows = code.basis.rows
    bounds = [(total * r) // num_ranges for r in range(num_ranges + 1)]
    tasks = [(rows, lo, hi, early_exit) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    best: int | None = None
    exact = True
    for value, completed in map_fn(_scan_codeword_task, tasks):
        exact = exact and completed
        if value is not None and (best is None or value < best):
            best = value
    if best is None:
        raise ValueError("no nonzero codeword found")
    return DistanceResult(best, exact, "codeword")


def min_distance(code: LinearCode, *, cap: int | None = None) -> int:
    """Exact minimum distance by codeword enumeration."""
    return codeword_distance_search(code, cap=cap).value


def eonv_distance_search(
    hypergraph: Hypergraph,
    *,
    early_exit: int | None = None,
    cap: int | None = None,
    num_ranges: int = 1,
    map_fn: Callable = map,
) -> DistanceResult:
    """Minimum distance of the incidence code by vertex-subset enumeration."""
    result = eonv_search(
        hypergraph,
        early_exit=early_exit,
        cap=cap,
        num_ranges=num_ranges,
        map_fn=map_fn,
    )
    return DistanceResult(result.weight, result.exact, "eonv", result.witness)


def min_distance_via_eonv(hypergraph: Hypergraph, *, cap: int | None = None) -> int:
    """Exact minimum distance of the incidence code via the subset engine.

    Must equal ``min_distance(from_generator(incidence_matrix(hypergraph)))``.
    """
    return eonv_search(hypergraph, cap=cap).weight


def auto_distance_search(
    hypergraph: Hypergraph,
    *,
    early_exit: int | None = None,
    cap: int | None = None,
    num_ranges: int = 1,
    map_fn: Callable = map,
) -> DistanceResult:
    """Run whichever engine enumerates the smaller space.

    The codeword engine walks 2^k messages, the subset engine 2^n vertex
    subsets; the rank k never exceeds the row count n, so ties (and in
    practice almost all inputs) go to the codeword engine.  Both engines
    stay explicitly invokable for cross-validation.
    """
    code = from_generator(incidence_matrix(hypergraph))
    kwargs = dict(early_exit=early_exit, cap=cap, num_ranges=num_ranges, map_fn=map_fn)
    if code.dimension <= hypergraph.num_vertices:
        return codeword_distance_search(code, **kwargs)
    return eonv_distance_search(hypergraph, **kwargs)


def weight_distribution(code: LinearCode, *, cap: int | None = None) -> dict[int, int]:
    """Weight counts over all 2^k codewords (the zero word included)."""
    k = code.dimension
    total = 1 << k
    limit = resolve_enum_cap(cap)
    if total > limit:
        raise EnumerationCapError(
            f"weight distribution needs {total} evaluations, above the cap of {limit}"
        )
    rows = code.basis.rows
    counts: dict[int, int] = {}
    acc = 0
    for i in range(total):
        if i:
            acc ^= rows[(i & -i).bit_length() - 1]
        w = acc.bit_count()
        counts[w] = counts.get(w, 0) + 1
    return dict(sorted(counts.items()))


def dual(code: LinearCode) -> LinearCode:
    """The dual code: all vectors orthogonal to every codeword."""
    return from_generator(nullspace_basis(code.basis))


def is_self_orthogonal(code: LinearCode) -> bool:
    """Whether the code is contained in its dual (all pairwise products vanish)."""
    return gram(code.basis).is_zero


def is_self_dual(code: LinearCode) -> bool:
    """Whether the code equals its dual (self-orthogonal with dimension = length/2)."""
    return is_self_orthogonal(code) and 2 * code.dimension == code.length


def structural_self_orthogonality(hypergraph: Hypergraph) -> bool:
    """Self-orthogonality of the incidence code read off the hypergraph.

    True exactly when every vertex degree is even and every two distinct
    vertices lie in an even number of common edges.  Must agree with
    ``is_self_orthogonal(from_generator(incidence_matrix(hypergraph)))``;
    this route works with edge sets on purpose, independently of the
    matrix product.
    """
    n = hypergraph.num_vertices
    incident = [edges_at(hypergraph, u) for u in range(n)]
    if any(len(s) % 2 for s in incident):
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if len(incident[u] & incident[v]) % 2:
                return False
    return True


def graph_self_duality_criterion(hypergraph: Hypergraph) -> bool:
    """Self-duality test for a connected graph, by counting alone.

    For a connected 2-uniform hypergraph with n vertices and m edges the
    incidence code is self-dual exactly when m = 2n - 2 and every pair of
    vertices (including each vertex with itself, i.e. even degrees) lies in
    an even number of common edges.  Must agree with ``is_self_dual`` of the
    incidence code.
    """
    if hypergraph.num_edges == 0:
        raise ValueError("the criterion needs at least one edge")
    if hypergraph.uniformity() != 2:
        raise ValueError("the criterion applies to 2-uniform hypergraphs only")
    if not is_connected(hypergraph):
        raise ValueError("the criterion applies to connected graphs only")
    n = hypergraph.num_vertices
    if hypergraph.num_edges != 2 * n - 2:
        return False
    incident = [edges_at(hypergraph, u) for u in range(n)]
    for u in range(n):
        for v in range(u, n):
            if len(incident[u] & incident[v]) % 2:
                return False
    return True

"""Particle-count schedules, partition enumeration, and the minimum-party search.

A shape is the multiset of particle sizes.  A shape can host elements of
reality only when its largest particle does not outweigh the rest combined;
the search schedule lists, level by ascending particle count, the shapes
that could be the first success, and distributions are enumerated one
representative per orbit of the graph's automorphism group.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ResourceLimitError, UnsupportedInputError
from .graphstate import Graph, is_connected
from .reality import Distribution, allows_specific_avn
from .reports import DistributionReport


def shape_feasible(shape) -> bool:
    """True when the largest particle is at most the sum of the others."""
    shape = _validate_shape(shape)
    return shape[0] <= sum(shape[1:])


def _validate_shape(shape) -> tuple:
    shape = tuple(shape)
    if not shape or any(s < 1 for s in shape):
        raise ValueError(f"shape parts must be positive: {shape}")
    if any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
        raise ValueError(f"shape must be non-increasing: {shape}")
    return shape


def integer_partitions(n: int, parts: int | None = None, max_part: int | None = None):
    """Non-increasing positive partitions of n (optionally with a fixed part count)."""
    def rec(remaining, cap, count):
        if remaining == 0:
            if parts is None or count == parts:
                yield ()
            return
        if parts is not None and count >= parts:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, count + 1):
                yield (first,) + rest

    yield from rec(n, max_part if max_part is not None else n, 0)


def _schedule_keeps(shape) -> bool:
    """Is this shape part of the minimum-party search schedule?

    All-singleton shapes are always kept.  Otherwise the multi-qubit
    particles must stand on their own: at least two of them, with the
    largest at most the sum of the other multi-qubit ones, and strictly
    below it once there are three or more (a tied largest particle forces
    the two-particle balanced split, which a smaller level already covers).
    """
    core = [s for s in shape if s >= 2]
    if not core:
        return True
    if len(core) < 2:
        return False
    slack = sum(core[1:]) - core[0]
    if slack < 0:
        return False
    return len(core) == 2 or slack > 0


def minimal_shapes(n: int) -> list:
    """Candidate-shape schedule: ``[(m, shapes), ...]`` with m ascending.

    Within a level, shapes are ordered lexicographically descending.  Levels
    with no kept shape are omitted.
    """
    if not 2 <= n <= 16:
        raise ValueError(f"n must be in 2..16, got {n}")
    out = []
    for m in range(2, n + 1):
        shapes = [s for s in integer_partitions(n, parts=m) if _schedule_keeps(s)]
        if shapes:
            shapes.sort(reverse=True)
            out.append((m, tuple(shapes)))
    return out


def partitions_with_shape(n: int, shape):
    """All set partitions of {1..n} with the given size multiset.

    Each partition is emitted as a tuple of blocks, blocks ordered by their
    minimum element and sorted internally, so the emitted form is already
    the canonical encoding.
    """
    shape = _validate_shape(shape)
    if sum(shape) != n:
        raise ValueError(f"shape {shape} does not sum to {n}")

    def rec(elements, sizes):
        if not elements:
            yield ()
            return
        anchor = elements[0]
        rest = elements[1:]
        for size in sorted(set(sizes), reverse=True):
            remaining = list(sizes)
            remaining.remove(size)
            for members in combinations(rest, size - 1):
                block = (anchor,) + members
                left = tuple(e for e in rest if e not in members)
                for tail in rec(left, remaining):
                    yield (block,) + tail

    yield from rec(tuple(range(1, n + 1)), list(shape))


def count_partitions_with_shape(n: int, shape) -> int:
    """Multinomial count: n! / (prod sizes! * prod multiplicity!)."""
    from math import factorial

    shape = _validate_shape(shape)
    total = factorial(n)
    for s in shape:
        total //= factorial(s)
    for s in set(shape):
        total //= factorial(shape.count(s))
    return total


def automorphisms(g: Graph) -> list:
    """All adjacency-preserving vertex permutations, as 0-based tuples."""
    if g.n > 10:
        raise ResourceLimitError(f"automorphism search limited to n <= 10, got {g.n}")
    n, adj = g.n, g.adj
    deg = [m.bit_count() for m in adj]
    perms = []
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            perms.append(tuple(image))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if ((adj[v] >> u) & 1) != ((adj[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return perms


def _permuted_blocks(blocks, perm):
    """Apply a 0-based vertex permutation to 1-based blocks, re-canonicalized."""
    return tuple(
        sorted(
            (tuple(sorted(perm[q - 1] + 1 for q in b)) for b in blocks),
            key=lambda b: b[0],
        )
    )


def enumerate_distributions(g: Graph, shape, dedupe: bool = True):
    """Stream distributions of g's qubits with the given shape.

    With ``dedupe`` every orbit of the automorphism group contributes exactly
    one representative: the member with the lexicographically least canonical
    encoding.
    """
    shape = _validate_shape(shape)
    if sum(shape) != g.n:
        raise ValueError(f"shape {shape} does not sum to n={g.n}")
    if not dedupe:
        for blocks in partitions_with_shape(g.n, shape):
            yield Distribution(g.n, blocks)
        return
    auts = automorphisms(g)
    seen = set()
    for blocks in partitions_with_shape(g.n, shape):
        if blocks in seen:
            continue
        orbit = {_permuted_blocks(blocks, perm) for perm in auts}
        seen |= orbit
        yield Distribution(g.n, min(orbit))


def _report_sort_key(report: DistributionReport):
    shape = report.distribution.shape()
    return tuple(-s for s in shape), report.distribution.canonical_key()


def min_party_distributions(g: Graph, method: str = "solver", dedupe: bool = True):
    """Smallest particle count admitting a distribution-specific proof.

    Walks the shape schedule in ascending m; the first level with a success
    is returned in full as ``(m, reports)``, reports canonically sorted.
    """
    if g.n < 3 or not is_connected(g):
        raise UnsupportedInputError("need a connected graph on at least 3 vertices")
    for m, shapes in minimal_shapes(g.n):
        hits = []
        for shape in shapes:
            for dist in enumerate_distributions(g, shape, dedupe=dedupe):
                decision = allows_specific_avn(g, dist, method=method)
                if decision.allows:
                    hits.append(DistributionReport(g, dist, decision))
        if hits:
            hits.sort(key=_report_sort_key)
            return m, hits
    raise AssertionError("singleton level must allow for a connected graph, n >= 3")


def _allows_worker(task):
    g, dist, method = task
    return allows_specific_avn(g, dist, method=method)


def all_avn_distributions(
    g: Graph, m: int, method: str = "solver", dedupe: bool = True, jobs: int = 1
):
    """Every (deduped) m-particle distribution that allows a specific proof.

    ``jobs > 1`` evaluates verdicts in a process pool; results are reassembled
    in enumeration order and sorted canonically, so the output is identical
    for any worker count.
    """
    if not 2 <= m <= g.n:
        raise ValueError(f"m must be in 2..{g.n}, got {m}")
    dists = []
    for shape in sorted(integer_partitions(g.n, parts=m), reverse=True):
        if not shape_feasible(shape):
            continue
        dists.extend(enumerate_distributions(g, shape, dedupe=dedupe))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            decisions = list(
                pool.map(_allows_worker, [(g, d, method) for d in dists], chunksize=8)
            )
    else:
        decisions = [allows_specific_avn(g, d, method=method) for d in dists]
    hits = [
        DistributionReport(g, d, dec) for d, dec in zip(dists, decisions) if dec.allows
    ]
    hits.sort(key=_report_sort_key)
    return hits

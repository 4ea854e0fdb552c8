"""Local complementation, canonical graph labelling, and the class census.

Two graph states are equivalent under single-qubit Cliffords exactly when
their graphs are related by local complementations and relabelling, so the
census enumerates connected graphs up to isomorphism and merges them into
orbits of the complementation moves.

Canonical labelling uses color refinement with individualization: vertices
are iteratively colored by their neighborhoods, branching only inside
ambiguous color cells (interchangeable twin vertices collapse to one
branch), and the canonical encoding is the least adjacency bitstring over
the surviving orderings.  Two graphs get the same encoding iff they are
isomorphic; a brute-force relabelling sweep backs this up in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ResourceLimitError, UnsupportedInputError
from .graphstate import Graph, is_connected
from .partitions import automorphisms

#: Exhaustive-mode guard for canonical forms and orbits.
MAX_CANONICAL_VERTICES = 10
MAX_CENSUS_VERTICES = 8


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge between neighbors of 1-based vertex v."""
    nbrs = g.nbr_mask(v)
    adj = list(g.adj)
    m = nbrs
    while m:
        low = m & -m
        u = low.bit_length() - 1
        adj[u] ^= nbrs & ~low
        m ^= low
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class CanonicalGraph:
    """Canonical encoding plus one original-to-canonical vertex map."""

    n: int
    encoding: int
    perm: tuple = field(compare=False)  # perm[v] = canonical slot of 0-based v


def _refine(adj, colors):
    """Stable neighborhood coloring; ranks are isomorphism-invariant."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = tuple(ranks[s] for s in sigs)
        if new_colors == colors:
            return colors
        colors = new_colors


def _twin_masks(adj):
    """twin[v] = mask of vertices interchangeable with v by a transposition."""
    n = len(adj)
    twins = [0] * n
    for v in range(n):
        for w in range(v + 1, n):
            if (adj[v] ^ adj[w]) & ~((1 << v) | (1 << w)) == 0:
                twins[v] |= 1 << w
                twins[w] |= 1 << v
    return twins


def _encode_order(adj, slots):
    """Adjacency bitstring for a slot order, level blocks packed MSB-first."""
    n = len(adj)
    enc = 0
    for j in range(1, n):
        avj = adj[slots[j]]
        block = 0
        for i in range(j):
            block |= ((avj >> slots[i]) & 1) << i
        enc = (enc << j) | block
    return enc


def _canonical(adj):
    """(encoding, perm) minimizing the bitstring over refinement-compatible orders."""
    n = len(adj)
    if n == 1:
        return 0, (0,)
    twins = _twin_masks(adj)
    best = [None, None]

    def descend(colors):
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = None
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target is None:
            slots = [0] * n
            for v, c in enumerate(colors):
                slots[c] = v
            enc = _encode_order(adj, slots)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                best[1] = tuple(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        kept = 0
        for v in cell:
            if twins[v] & kept:
                continue
            kept |= 1 << v
            sigs = tuple(
                (colors[w], 0 if w == v else 1 if colors[w] == target else 0)
                for w in range(n)
            )
            ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
            descend(_refine(adj, tuple(ranks[s] for s in sigs)))

    descend(_refine(adj, (0,) * n))
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalGraph:
    """Canonical encoding of the graph; equal encodings iff isomorphic."""
    if g.n > MAX_CANONICAL_VERTICES:
        raise ResourceLimitError(
            f"canonical form limited to n <= {MAX_CANONICAL_VERTICES}, got {g.n}"
        )
    enc, perm = _canonical(g.adj)
    return CanonicalGraph(g.n, enc, perm)


def graph_from_encoding(n: int, encoding: int) -> Graph:
    """Rebuild the graph whose canonical-order bitstring is ``encoding``."""
    blocks = []
    for j in range(n - 1, 0, -1):
        blocks.append(encoding & ((1 << j) - 1))
        encoding >>= j
    blocks.reverse()
    adj = [0] * n
    for j in range(1, n):
        block = blocks[j - 1]
        for i in range(j):
            if (block >> i) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def lc_orbit(g: Graph) -> set:
    """Closure of the graph under local complementation, as canonical forms."""
    if not is_connected(g):
        raise UnsupportedInputError("orbit computation needs a connected graph")
    if g.n > MAX_CENSUS_VERTICES:
        raise ResourceLimitError(
            f"orbit computation limited to n <= {MAX_CENSUS_VERTICES}, got {g.n}"
        )
    start = canonical_form(g)
    seen = {start}
    by_encoding = {start.encoding}
    frontier = [start]
    while frontier:
        cg = frontier.pop()
        h = graph_from_encoding(cg.n, cg.encoding)
        for v in range(1, g.n + 1):
            img = canonical_form(local_complement(h, v))
            if img.encoding not in by_encoding:
                by_encoding.add(img.encoding)
                seen.add(img)
                frontier.append(img)
    return seen


@lru_cache(maxsize=None)
def connected_graph_reps(n: int):
    """Canonical encodings of all connected graphs on n vertices, one per
    isomorphism class, sorted ascending.

    Generated by vertex extension: every connected graph arises from a
    connected graph on one vertex fewer by attaching the new vertex to a
    nonempty subset (a non-cutvertex always exists), and subsets equivalent
    under the parent's automorphisms give isomorphic children.
    """
    if not 1 <= n <= MAX_CENSUS_VERTICES:
        raise ResourceLimitError(f"census limited to n <= {MAX_CENSUS_VERTICES}")
    if n == 1:
        return (0,)
    reps = set()
    for parent_enc in connected_graph_reps(n - 1):
        parent = graph_from_encoding(n - 1, parent_enc)
        auts = [p for p in automorphisms(parent) if p != tuple(range(n - 1))]
        seen_subsets = set()
        for subset in range(1, 1 << (n - 1)):
            if subset in seen_subsets:
                continue
            if auts:
                orbit = {subset}
                for perm in auts:
                    img = 0
                    m = subset
                    while m:
                        low = m & -m
                        img |= 1 << perm[low.bit_length() - 1]
                        m ^= low
                    orbit.add(img)
                seen_subsets |= orbit
            adj = [a | (((subset >> v) & 1) << (n - 1)) for v, a in enumerate(parent.adj)]
            adj.append(subset)
            reps.add(_canonical(tuple(adj))[0])
    return tuple(sorted(reps))


@dataclass
class GraphClassRecord:
    """One equivalence class of the census."""

    class_id: int
    n: int
    representative: Graph
    orbit_size: int
    aut_order: int

    def to_json_dict(self) -> dict:
        return {
            "class_id": self.class_id,
            "n": self.n,
            "representative": [list(e) for e in self.representative.edges()],
            "orbit_size": self.orbit_size,
            "aut_order": self.aut_order,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GraphClassRecord":
        rep = Graph.from_edges(data["n"], [tuple(e) for e in data["representative"]])
        return cls(data["class_id"], data["n"], rep, data["orbit_size"], data["aut_order"])


@lru_cache(maxsize=None)
def _classify_cached(n: int):
    reps = connected_graph_reps(n)
    rep_set = set(reps)
    visited = set()
    classes = []
    for enc in reps:
        if enc in visited:
            continue
        orbit = lc_orbit(graph_from_encoding(n, enc))
        encodings = {cg.encoding for cg in orbit}
        if not encodings <= rep_set:
            raise AssertionError("orbit left the connected census")
        visited |= encodings
        classes.append((min(encodings), len(encodings)))
    classes.sort()
    records = []
    for class_id, (enc, orbit_size) in enumerate(classes, start=1):
        rep = graph_from_encoding(n, enc)
        records.append(
            GraphClassRecord(class_id, n, rep, orbit_size, len(automorphisms(rep)))
        )
    return tuple(records)


def classify_all(n: int) -> list:
    """All classes of connected n-vertex graph states, deterministic order."""
    if not 2 <= n <= MAX_CENSUS_VERTICES:
        raise ValueError(f"census supports 2 <= n <= {MAX_CENSUS_VERTICES}, got {n}")
    return list(_classify_cached(n))

"""Exact counting of orthogonal tuples and small-pattern copies.

Two routes are kept deliberately independent:

* count_ordered_tuples_oracle enumerates every ordered tuple of distinct
  subset members and tests all pairs, with no pruning.  It is the ground
  truth for small instances.
* count_ordered_tuples counts k-cliques by recursive candidate-set
  intersection on the bit rows (ascending vertex index, diagonal masked
  off) and multiplies by k!.

Tuples require distinct entries throughout, so loops never contribute;
counts are exact Python integers end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import BoundExceededError
from .graphs import OrthoGraph
from .vectors import Vector

DEFAULT_ORACLE_WORK = 10_000_000

Edge = tuple[int, int]


def _normalize_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    seen = set()
    out = []
    for edge in edges:
        a, b = edge
        if a == b:
            raise ValueError(f"pattern graphs are loop-free, got edge ({a},{b})")
        if not (0 <= a < vertex_count and 0 <= b < vertex_count):
            raise ValueError(f"edge ({a},{b}) out of range for {vertex_count} vertices")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        out.append(key)
    return tuple(sorted(out))


@dataclass(frozen=True)
class PatternGraph:
    """A small simple graph H to count copies of; K_k is the central case."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("pattern graphs need at least one vertex")
        object.__setattr__(self, "edges", _normalize_edges(self.vertex_count, self.edges))

    @classmethod
    def complete(cls, k: int) -> "PatternGraph":
        return cls(k, tuple(combinations(range(k), 2)))

    @classmethod
    def path(cls, length: int) -> "PatternGraph":
        """Path on `length` vertices (length - 1 edges)."""
        return cls(length, tuple((i, i + 1) for i in range(length - 1)))

    @classmethod
    def cycle(cls, length: int) -> "PatternGraph":
        if length < 3:
            raise ValueError("cycles need at least 3 vertices")
        return cls(length, tuple((i, (i + 1) % length) for i in range(length)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return max(deg)

    @cached_property
    def aut_count(self) -> int:
        return automorphism_count(self)


def automorphism_count(pattern: PatternGraph, max_vertices: int = 8) -> int:
    """|Aut(H)| by exhaustive permutation enumeration; s <= 8 only."""
    s = pattern.vertex_count
    if s > max_vertices:
        raise BoundExceededError(f"automorphism enumeration capped at {max_vertices} vertices")
    edge_set = set(pattern.edges)
    count = 0
    for perm in permutations(range(s)):
        for a, b in edge_set:
            pa, pb = perm[a], perm[b]
            if (pa, pb) not in edge_set and (pb, pa) not in edge_set:
                break
        else:
            count += 1
    return count


@dataclass(frozen=True)
class VertexSubset:
    """A subset of graph vertices held as a member bit vector."""

    graph: OrthoGraph
    members: int
    size: int

    def __post_init__(self):
        if self.members < 0 or self.members >> self.graph.n:
            raise ValueError("member bit vector exceeds vertex range")
        if self.members.bit_count() != self.size:
            raise ValueError("size does not match member popcount")

    @classmethod
    def full(cls, graph: OrthoGraph) -> "VertexSubset":
        return cls(graph, (1 << graph.n) - 1, graph.n)

    @classmethod
    def from_indices(cls, graph: OrthoGraph, indices: Iterable[int]) -> "VertexSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < graph.n:
                raise ValueError(f"vertex index {i} out of range [0, {graph.n})")
            bit = 1 << i
            if mask & bit:
                raise ValueError(f"duplicate vertex index {i}")
            mask |= bit
        return cls(graph, mask, mask.bit_count())

    @classmethod
    def from_vectors(cls, graph: OrthoGraph, vecs: Iterable[Vector]) -> "VertexSubset":
        indices = []
        for v in vecs:
            if all(c == 0 for c in v):
                raise ValueError(
                    "the zero vector is orthogonal to everything and is not a "
                    "graph vertex; subsets containing it are rejected"
                )
            indices.append(graph.vertex_index(v))
        return cls.from_indices(graph, indices)

    def indices(self) -> list[int]:
        out = []
        m = self.members
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out


def count_ordered_tuples_oracle(
    subset: VertexSubset, k: int, max_work: int = DEFAULT_ORACLE_WORK
) -> int:
    """Reference count of ordered k-tuples of distinct, pairwise adjacent
    members, by brute enumeration.  Small instances only."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    m = subset.size
    if m**k > max_work:
        raise BoundExceededError(f"oracle work m^k = {m}^{k} exceeds bound {max_work}")
    rows = subset.graph.rows
    count = 0
    for tup in permutations(subset.indices(), k):
        ok = True
        for i in range(k - 1):
            row = rows[tup[i]]
            for j in range(i + 1, k):
                if not (row >> tup[j]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _clique_count(rows: Sequence[int], candidates: int, k: int) -> int:
    if k == 1:
        return candidates.bit_count()
    total = 0
    rest = candidates
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        # rest now holds exactly the candidates above v
        sub = rest & rows[v]
        if sub:
            total += _clique_count(rows, sub, k - 1)
    return total


def count_ordered_tuples(subset: VertexSubset, k: int) -> int:
    """Fast path: k! times the number of k-cliques inside the subset,
    counted by candidate bit-vector intersection.  Agrees exactly with
    count_ordered_tuples_oracle wherever both run."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if subset.size < k:
        return 0
    graph = subset.graph
    masked = [row & ~(1 << i) for i, row in enumerate(graph.rows)]
    return math.factorial(k) * _clique_count(masked, subset.members, k)


def count_copies(subset: VertexSubset, pattern: PatternGraph) -> int:
    """Copies of the pattern: injective edge-preserving maps into the
    subset, divided by |Aut|.  Extra adjacencies among the image are
    allowed (copies are not necessarily induced)."""
    graph = subset.graph
    s = pattern.vertex_count
    aut = pattern.aut_count
    if subset.size < s:
        return 0
    masked = [row & ~(1 << i) for i, row in enumerate(graph.rows)]
    earlier: list[list[int]] = [[] for _ in range(s)]
    for a, b in pattern.edges:
        earlier[max(a, b)].append(min(a, b))

    members = subset.members

    def extend(slot: int, used: int, images: list[int]) -> int:
        if slot == s:
            return 1
        cand = members & ~used
        for u in earlier[slot]:
            cand &= masked[images[u]]
        total = 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            images.append(low.bit_length() - 1)
            total += extend(slot + 1, used | low, images)
            images.pop()
        return total

    injective = extend(0, 0, [])
    assert injective % aut == 0, "injective map count must be divisible by |Aut|"
    return injective // aut

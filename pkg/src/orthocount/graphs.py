"""Orthogonality graphs on projective points and on all nonzero vectors.

Both families put an edge between x and y exactly when x.y = 0, including
x = y (self-orthogonal vectors carry loops).  Adjacency is stored as one
arbitrary-precision Python integer per vertex, bit j of row i meaning
"i adjacent to j"; bitwise AND on these rows is the performance core of
clique counting.  A loop contributes exactly 1 to its row's population
count, which keeps every row sum equal to the common degree.

Vertex order is fixed: projective graphs list class representatives in
encoding order; the all-vectors graph lists, for each class in that same
order, its q - 1 scalar multiples with scalars ascending.  Classes thus
form contiguous blocks of size q - 1, the ordering the block-diagonal
spectral identity relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable

import numpy as np

from .errors import BoundExceededError, OrthocountError
from .fields import Field, element_digits, field_from_order, multiplication_matrices
from .vectors import Vector, projective_representatives, scale

DEFAULT_MAX_VERTICES = 20_000

PROJECTIVE = "projective"
AFFINE = "affine"


@dataclass(frozen=True, eq=False)
class OrthoGraph:
    """Immutable dense orthogonality graph; safe for concurrent reads."""

    family: str
    q: int
    d: int
    field: Field
    vertices: tuple[Vector, ...]
    rows: tuple[int, ...]
    loops: int
    n: int
    degree: int

    def neighbors(self, i: int) -> int:
        """Adjacency row i as a bit vector; popcount equals the degree."""
        if not 0 <= i < self.n:
            raise IndexError(f"vertex index {i} out of range [0, {self.n})")
        return self.rows[i]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def has_loop(self, i: int) -> bool:
        return bool((self.loops >> i) & 1)

    def loop_count(self) -> int:
        return self.loops.bit_count()

    def vertex_index(self, v: Vector) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"{v} is not a vertex of this graph") from None

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 matrix as int64, unpacked from the bit rows."""
        nbytes = (self.n + 7) // 8
        packed = np.frombuffer(
            b"".join(row.to_bytes(nbytes, "little") for row in self.rows), dtype=np.uint8
        ).reshape(self.n, nbytes)
        bits = np.unpackbits(packed, axis=1, bitorder="little")[:, : self.n]
        return bits.astype(np.int64)

    @cached_property
    def _index(self) -> dict[Vector, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def _orthogonality_rows(field: Field, coords: np.ndarray) -> list[int]:
    """Bit rows of the pairwise-orthogonality relation among the given
    coordinate rows, via chunked exact integer matrix products.

    Products stay below 2^63: entries are < q and q^d is capped by the
    vertex bound, so each accumulated sum is at most d * q^2.
    """
    n = coords.shape[0]
    chunk = max(1, (1 << 22) // max(n, 1))
    rows: list[int] = []
    if field.e == 1:
        right = coords.T
    else:
        mats = multiplication_matrices(field)[coords]  # (n, d, e, e)
        d = coords.shape[1]
        left = mats.transpose(0, 2, 1, 3).reshape(n, field.e, d * field.e)
        right = element_digits(field)[coords].reshape(n, d * field.e).T
    nbytes = (n + 7) // 8
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        if field.e == 1:
            zero = (coords[start:stop] @ right) % field.p == 0
        else:
            prods = (left[start:stop].reshape(-1, right.shape[0]) @ right) % field.p
            zero = (prods.reshape(stop - start, field.e, n) == 0).all(axis=1)
        packed = np.packbits(zero, axis=1, bitorder="little")
        for row_bytes in packed:
            rows.append(int.from_bytes(row_bytes.tobytes()[:nbytes], "little"))
    return rows


def _finish_graph(family: str, field: Field, d: int, vertices: list[Vector], degree: int) -> OrthoGraph:
    coords = np.array(vertices, dtype=np.int64)
    rows = _orthogonality_rows(field, coords)
    n = len(vertices)
    loops = 0
    for i, row in enumerate(rows):
        if row.bit_count() != degree:
            raise OrthocountError(
                f"regularity violated at vertex {i}: row sum {row.bit_count()} != {degree}"
            )
        loops |= ((row >> i) & 1) << i
    return OrthoGraph(
        family=family,
        q=field.q,
        d=d,
        field=field,
        vertices=tuple(vertices),
        rows=tuple(rows),
        loops=loops,
        n=n,
        degree=degree,
    )


def build_projective_graph(q: int, d: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> OrthoGraph:
    """Graph on the (q^d - 1)/(q - 1) projective points; adjacency is
    orthogonality of class representatives (well defined on classes)."""
    field = field_from_order(q)
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    n = (q**d - 1) // (q - 1)
    if n > max_vertices:
        raise BoundExceededError(f"projective graph order {n} exceeds bound {max_vertices}")
    vertices = projective_representatives(field, d, max_points=max(q**d, 1))
    degree = (q ** (d - 1) - 1) // (q - 1)
    return _finish_graph(PROJECTIVE, field, d, vertices, degree)


def build_affine_graph(q: int, d: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> OrthoGraph:
    """Graph on all q^d - 1 nonzero vectors, the (q-1)-fold blow-up of the
    projective graph; vertices grouped by class in contiguous blocks."""
    field = field_from_order(q)
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    n = q**d - 1
    if n > max_vertices:
        raise BoundExceededError(f"affine graph order {n} exceeds bound {max_vertices}")
    reps = projective_representatives(field, d, max_points=max(q**d, 1))
    vertices = [scale(field, s, rep) for rep in reps for s in range(1, q)]
    degree = q ** (d - 1) - 1
    return _finish_graph(AFFINE, field, d, vertices, degree)


def export_graph(graph: OrthoGraph, stream: IO[str]) -> None:
    """Write the exchange format: a "family q d n degree" header line,
    then one hex-encoded adjacency row per vertex (the row's bit integer,
    zero-padded to ceil(n/4) digits; bit j marks adjacency to vertex j)."""
    stream.write(f"{graph.family} {graph.q} {graph.d} {graph.n} {graph.degree}\n")
    width = (graph.n + 3) // 4
    for row in graph.rows:
        stream.write(format(row, f"0{width}x"))
        stream.write("\n")


def parse_graph_export(lines: Iterable[str]) -> dict:
    """Parse the export format back into header fields plus row integers.
    Mainly for round-trip checks and downstream tooling."""
    it = iter(lines)
    header = next(it).split()
    if len(header) != 5:
        raise ValueError("malformed export header")
    family, q, d, n, degree = header[0], *map(int, header[1:])
    rows = [int(line.strip(), 16) for line in it if line.strip()]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, found {len(rows)}")
    return {"family": family, "q": q, "d": d, "n": n, "degree": degree, "rows": rows}

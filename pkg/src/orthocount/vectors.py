"""Vectors in F_q^d: dot products, orthogonality, point enumeration.

A vector is a plain tuple of element indices; the field travels alongside
as an explicit argument.  Enumeration order is fixed everywhere as the
base-q integer encoding of the coordinates with coordinate 1 least
significant, which is what makes graph vertex orderings (and hence all
reports) reproducible byte for byte.
"""

from __future__ import annotations

from .errors import BoundExceededError
from .fields import Field

DEFAULT_MAX_POINTS = 1 << 22

Vector = tuple[int, ...]


def dot(field: Field, u: Vector, v: Vector) -> int:
    """Sum of coordinate-wise products u_i * v_i in the field."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    acc = 0
    for x, y in zip(u, v):
        acc = field.add(acc, field.mul(x, y))
    return acc


def is_orthogonal(field: Field, u: Vector, v: Vector) -> bool:
    """True when the dot product vanishes; u = v is permitted, so
    self-orthogonal vectors report True (these become graph loops)."""
    return dot(field, u, v) == 0


def scale(field: Field, s: int, v: Vector) -> Vector:
    return tuple(field.mul(s, c) for c in v)


def decode_vector(code: int, q: int, d: int) -> Vector:
    """Inverse of the base-q encoding, coordinate 1 least significant."""
    out = []
    for _ in range(d):
        out.append(code % q)
        code //= q
    return tuple(out)


def encode_vector(v: Vector, q: int) -> int:
    acc = 0
    for c in reversed(v):
        acc = acc * q + c
    return acc


def enumerate_nonzero_vectors(
    field: Field, d: int, max_points: int = DEFAULT_MAX_POINTS
) -> list[Vector]:
    """All q^d - 1 nonzero vectors in encoding order."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    total = field.q**d
    if total > max_points:
        raise BoundExceededError(f"q^d = {total} exceeds enumeration bound {max_points}")
    return [decode_vector(code, field.q, d) for code in range(1, total)]


def projective_representatives(
    field: Field, d: int, max_points: int = DEFAULT_MAX_POINTS
) -> list[Vector]:
    """One canonical representative per projective equivalence class.

    The representative is the unique scalar multiple whose first nonzero
    coordinate (lowest index) equals 1; listing nonzero vectors in
    encoding order and keeping exactly those yields the representatives
    already sorted by their own encoding.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    total = field.q**d
    if total > max_points:
        raise BoundExceededError(f"q^d = {total} exceeds enumeration bound {max_points}")
    reps = []
    q = field.q
    for code in range(1, total):
        v = decode_vector(code, q, d)
        first = next(c for c in v if c != 0)
        if first == 1:
            reps.append(v)
    return reps


def format_vector(v: Vector) -> str:
    """Serialize as comma-separated element indices, e.g. "1,0,2"."""
    return ",".join(str(c) for c in v)


def parse_vector(text: str) -> Vector:
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ValueError(f"cannot parse vector from {text!r}") from None

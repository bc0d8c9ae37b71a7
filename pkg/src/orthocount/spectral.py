"""Exact verification of the square-of-adjacency identities.

For the projective graph A with degree D_P and codegree
mu = (q^(d-2) - 1)/(q - 1):

    A @ A.T  ==  mu * J  +  (D_P - mu) * I

For the all-vectors graph V with degree D = q^(d-1) - 1 and codegree
rho = q^(d-2) - 1, with vertices grouped into class blocks of size q - 1:

    (V @ V.T)[i, j]  ==  rho + (D - rho) * [i, j in the same block]

Both checks run in exact 64-bit integer arithmetic (entries are bounded
by the degree, far below 2^63), so a pass is an identity, not an
approximation; eigenvalue claims follow algebraically and no numeric
eigensolver is involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError
from .graphs import AFFINE, PROJECTIVE, OrthoGraph

DEFAULT_MAX_CHECK_VERTICES = 4096
VIOLATION_CAP = 10

Violation = tuple[int, int, int, int]  # (i, j, expected, actual)


@dataclass(frozen=True)
class SpectralProfile:
    """Closed-form spectral data implied by the square identity.

    second_squared is exact; for odd d the second eigenvalue itself is
    irrational and only its float rendering is offered.
    """

    family: str
    n: int
    degree: int
    second_squared: int
    codegree: int
    zero_allowed: bool

    @property
    def second(self) -> float:
        return math.sqrt(self.second_squared)


@dataclass(frozen=True)
class IdentityReport:
    passed: bool
    family: str
    q: int
    d: int
    n: int
    degree: int
    codegree: int
    violations: tuple[Violation, ...]

    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None


def _collect_violations(actual: np.ndarray, expected: np.ndarray) -> tuple[Violation, ...]:
    mismatch = np.argwhere(actual != expected)  # row-major, so lexicographic
    return tuple(
        (int(i), int(j), int(expected[i, j]), int(actual[i, j]))
        for i, j in mismatch[:VIOLATION_CAP]
    )


def _square(graph: OrthoGraph, max_vertices: int) -> np.ndarray:
    if graph.n > max_vertices:
        raise BoundExceededError(
            f"matrix check bound exceeded: n = {graph.n} > {max_vertices}"
        )
    a = graph.adjacency_matrix()
    return a @ a.T


def verify_projective_square_identity(
    graph: OrthoGraph, max_vertices: int = DEFAULT_MAX_CHECK_VERTICES
) -> IdentityReport:
    """Check A @ A.T == mu*J + (degree - mu)*I entry-wise in exact integers."""
    if graph.family != PROJECTIVE:
        raise ValueError(f"expected a projective graph, got {graph.family}")
    q, d = graph.q, graph.d
    mu = (q ** (d - 2) - 1) // (q - 1)
    m = _square(graph, max_vertices)
    expected = np.full((graph.n, graph.n), mu, dtype=np.int64)
    np.fill_diagonal(expected, graph.degree)
    violations = _collect_violations(m, expected)
    return IdentityReport(
        passed=not violations,
        family=graph.family,
        q=q,
        d=d,
        n=graph.n,
        degree=graph.degree,
        codegree=mu,
        violations=violations,
    )


def verify_affine_square_identity(
    graph: OrthoGraph, max_vertices: int = DEFAULT_MAX_CHECK_VERTICES
) -> IdentityReport:
    """Check the block form of V @ V.T in exact integers.

    Relies on the builder's vertex order (projective classes in
    contiguous blocks of q - 1 scalar multiples); any ordering violation
    surfaces as a mismatched entry."""
    if graph.family != AFFINE:
        raise ValueError(f"expected an affine graph, got {graph.family}")
    q, d = graph.q, graph.d
    rho = q ** (d - 2) - 1
    m = _square(graph, max_vertices)
    block = np.arange(graph.n) // (q - 1)
    same_block = block[:, None] == block[None, :]
    expected = rho + (graph.degree - rho) * same_block.astype(np.int64)
    violations = _collect_violations(m, expected)
    return IdentityReport(
        passed=not violations,
        family=graph.family,
        q=q,
        d=d,
        n=graph.n,
        degree=graph.degree,
        codegree=rho,
        violations=violations,
    )


def verify_square_identity(
    graph: OrthoGraph, max_vertices: int = DEFAULT_MAX_CHECK_VERTICES
) -> IdentityReport:
    if graph.family == PROJECTIVE:
        return verify_projective_square_identity(graph, max_vertices)
    return verify_affine_square_identity(graph, max_vertices)


def predicted_spectrum(q: int, d: int, family: str) -> SpectralProfile:
    """Closed-form (n, degree, |second eigenvalue|, codegree) profile."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if family == PROJECTIVE:
        return SpectralProfile(
            family=family,
            n=(q**d - 1) // (q - 1),
            degree=(q ** (d - 1) - 1) // (q - 1),
            second_squared=q ** (d - 2),
            codegree=(q ** (d - 2) - 1) // (q - 1),
            zero_allowed=False,
        )
    if family == AFFINE:
        return SpectralProfile(
            family=family,
            n=q**d - 1,
            degree=q ** (d - 1) - 1,
            second_squared=(q - 1) ** 2 * q ** (d - 2),
            codegree=q ** (d - 2) - 1,
            zero_allowed=True,
        )
    raise ValueError(f"unknown family {family!r}")

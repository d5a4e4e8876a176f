"""Equitable vertex partitions and their quotient matrices.

A partition of V is equitable when every vertex of block i has the same
number of neighbours in block j, for all i, j.  The quotient of the
alpha matrix then carries the full Perron information of the graph in a
matrix of order equal to the number of blocks, which is how join-of-cliques
families get their radii computed without touching an n x n eigensolve.

Quotients here are averaged row sums, so :func:`quotient` is defined for
any partition; only for equitable ones does its spectrum embed into the
graph's.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._rootfind import largest_real_cubic_root, largest_real_quadratic_root
from .combinatorics import VertexSet
from .errors import NumericError, ParameterError
from .graphs import FamilySpec, Graph
from .spectra import symmetric_eigenvalues


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint blocks covering {0, ..., n-1}."""

    n: int
    blocks: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ParameterError("a partition needs at least one block")
        seen = 0
        for b in self.blocks:
            if b.n != self.n:
                raise ParameterError(
                    f"block over {b.n} vertices in a partition of {self.n}")
            if b.mask == 0:
                raise ParameterError("empty block in partition")
            if b.mask & seen:
                raise ParameterError("partition blocks overlap")
            seen |= b.mask
        if seen != (1 << self.n) - 1:
            raise ParameterError("partition does not cover every vertex")

    @classmethod
    def of(cls, n: int, blocks) -> "VertexPartition":
        return cls(n, tuple(VertexSet.of(n, b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise ParameterError(f"vertex {v} outside partition range")


def _contiguous_partition(n: int, sizes: tuple[int, ...]) -> VertexPartition:
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(VertexSet(n, ((1 << size) - 1) << start))
        start += size
    return VertexPartition(n, tuple(blocks))


def family_partition(spec: FamilySpec) -> VertexPartition:
    """Three blocks of the join family: joint clique, big clique,
    independent set -- in construction order."""
    return _contiguous_partition(
        spec.n, (spec.s, spec.big_clique_order, spec.independent_order))


def half_partition(n: int, k: int) -> VertexPartition:
    """Two blocks of the clique-join-independent-set family of order n."""
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    if n < k + 2 or (n - k) % 2 != 0:
        raise ParameterError(
            f"need n >= k + 2 with n - k even, got n={n}, k={k}")
    return _contiguous_partition(n, ((n - k) // 2, (n + k) // 2))


def is_equitable(g: Graph, partition: VertexPartition) -> bool:
    """Exact integer check: within each block, every vertex sees the same
    number of neighbours in every block."""
    if partition.n != g.n:
        raise ParameterError(
            f"partition over {partition.n} vertices, graph has {g.n}")
    for bi in partition.blocks:
        for bj in partition.blocks:
            counts = {bin(g.rows[v] & bj.mask).count("1") for v in bi}
            if len(counts) > 1:
                return False
    return True


def quotient(g: Graph, partition: VertexPartition, alpha: float) -> np.ndarray:
    """Block-averaged row sums of the alpha matrix.

    Entry (i, j) is the average over v in block i of the total alpha-matrix
    weight from v into block j.  For an equitable partition every vertex of
    block i contributes the same amount, and the spectrum of the result is
    a subset of the graph's containing the largest eigenvalue.
    """
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0) or alpha != alpha:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha!r}")
    if partition.n != g.n:
        raise ParameterError(
            f"partition over {partition.n} vertices, graph has {g.n}")
    r = len(partition)
    m = np.zeros((r, r), dtype=np.float64)
    for i, bi in enumerate(partition.blocks):
        size = len(bi)
        for j, bj in enumerate(partition.blocks):
            total = 0.0
            for v in bi:
                total += (1.0 - alpha) * bin(g.rows[v] & bj.mask).count("1")
                if i == j:
                    total += alpha * g.degree(v)
            m[i, j] = total / size
    return m


def quotient_json(partition: VertexPartition, m: np.ndarray) -> dict:
    return {
        "blocks": [b.to_list() for b in partition.blocks],
        "matrix": [[float(x) for x in row] for row in np.asarray(m)],
    }


def _charpoly_coefficients(m: np.ndarray) -> tuple[float, ...]:
    """Coefficients (a, b[, c]) of det(xI - M) = x^d - a x^(d-1) + ...

    for d = 2 or 3, by trace / principal minors / determinant.
    """
    d = m.shape[0]
    a = float(np.trace(m))
    if d == 2:
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        return a, float(det)
    minors = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            minors += m[i, i] * m[j, j] - m[i, j] * m[j, i]
    det = (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
           - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
           + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))
    return a, float(minors), float(det)


def quotient_radius(m: np.ndarray) -> float:
    """Largest real eigenvalue of a quotient matrix of order at most 3.

    Order 2 goes through the quadratic formula.  Order 3 brackets the
    rightmost root between the rightmost critical point of the
    characteristic polynomial and a Cauchy bound, then bisects; quotients
    of symmetric matrices are similar to symmetric matrices, so all roots
    are real and the bracket is certified before bisection.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ParameterError("quotient matrix has non-finite entries")
    d = m.shape[0]
    if d == 0 or d > 3:
        raise ParameterError(
            f"quotient_radius handles orders 1..3, got {d}")
    if d == 1:
        return float(m[0, 0])
    if d == 2:
        a, det = _charpoly_coefficients(m)
        try:
            return largest_real_quadratic_root(-a, det)
        except NumericError as exc:
            raise NumericError(
                "order-2 quotient has no real eigenvalues",
                best_estimate=exc.best_estimate) from exc
    a, b, c = _charpoly_coefficients(m)
    try:
        return largest_real_cubic_root(-a, b, -c)
    except NumericError as exc:
        raise NumericError(
            "order-3 quotient has no real eigenvalue at or beyond the "
            "rightmost critical point of its characteristic polynomial",
            best_estimate=exc.best_estimate) from exc


def quotient_eigenvalues(m: np.ndarray, block_sizes) -> tuple[float, ...]:
    """All eigenvalues of a balanced quotient, descending.

    Conjugating by diag(sqrt(block sizes)) turns the quotient of a symmetric
    matrix into a symmetric matrix, which is why such quotients always have
    real spectra; this computes that conjugate and solves it densely.
    """
    m = np.asarray(m, dtype=np.float64)
    sizes = np.asarray(list(block_sizes), dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or sizes.shape != (m.shape[0],):
        raise ParameterError("matrix and block sizes do not line up")
    if np.any(sizes <= 0):
        raise ParameterError("block sizes must be positive")
    root = np.sqrt(sizes)
    t = (root[:, None] * m) / root[None, :]
    asym = float(np.max(np.abs(t - t.T))) if m.shape[0] else 0.0
    if asym > 1e-8 * (1.0 + float(np.max(np.abs(t)))):
        raise ParameterError(
            "matrix is not a balanced quotient for these block sizes")
    return symmetric_eigenvalues(0.5 * (t + t.T))

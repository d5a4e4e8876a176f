"""Bitmask graphs on at most 62 vertices.

A graph stores one Python-int bitmask per vertex (bit ``j`` of ``rows[i]``
set iff ``ij`` is an edge), which keeps the exhaustive-search and matching
code allocation-free.  The module provides the classical constructors
(complete graph, complement, join, disjoint union), the two join families

    ``K_s v (K_{n+1-2s-k} u complement(K_{s+k-1}))``   and
    ``K_{(n-k)/2} v complement(K_{(n+k)/2})``,

whose spectral radii are the extremal candidates among t-connected graphs
with matching number at most (n-k)/2, plus graph6 serialization and a JSON
edge-list export.

Vertex labels of the family constructors are fixed: the joint clique
occupies 0..s-1, the big clique follows, the independent set comes last.
Downstream code (equitable partitions, search certification) relies on
that order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapabilityError, Graph6DecodeError, ParameterError

MAX_VERTICES = 62


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[i]`` is the neighbor bitmask of vertex ``i``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ParameterError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"row {i} has neighbor bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ParameterError(f"loop at vertex {i}")
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not self.rows[j] >> i & 1:
                    raise ParameterError(f"adjacency not symmetric at ({i}, {j})")

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, v: int) -> int:
        """Neighbor set of ``v`` as a bitmask."""
        return self.rows[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i < j, in lexicographic order."""
        out = []
        for i in range(self.n):
            m = self.rows[i] >> (i + 1) << (i + 1)
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((i, j))
        return out


def complete(n: int) -> Graph:
    """The complete graph on ``n`` vertices."""
    if not 1 <= n <= MAX_VERTICES:
        raise ParameterError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def empty(n: int) -> Graph:
    """The edgeless graph on ``n`` vertices."""
    if not 1 <= n <= MAX_VERTICES:
        raise ParameterError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` keeps its labels, ``g2`` is shifted up by ``g1.n``."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ParameterError(f"union would have {n} > {MAX_VERTICES} vertices")
    rows = list(g1.rows) + [row << g1.n for row in g2.rows]
    return Graph(n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ParameterError(f"join would have {n} > {MAX_VERTICES} vertices")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    rows = [row | mask2 for row in g1.rows]
    rows += [(row << g1.n) | mask1 for row in g2.rows]
    return Graph(n, tuple(rows))


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    if not g.has_edge(i, j):
        raise ParameterError(f"no edge ({i}, {j}) to delete")
    rows = list(g.rows)
    rows[i] &= ~(1 << j)
    rows[j] &= ~(1 << i)
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex ``v``; higher labels shift down by one."""
    if g.n == 1:
        raise ParameterError("cannot delete the last vertex")
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range")
    low = (1 << v) - 1
    rows = []
    for i, row in enumerate(g.rows):
        if i == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


@dataclass(frozen=True)
class FamilySpec:
    """Parameters (n, s, k) of the joint-clique family.

    Block sizes: joint clique ``s``, big clique ``n + 1 - 2s - k``,
    independent set ``s + k - 1``.
    """

    n: int
    s: int
    k: int

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise ParameterError("; ".join(problems))

    def violations(self) -> list[str]:
        out = []
        if self.k < 2:
            out.append(f"k must be >= 2, got {self.k}")
        if (self.n - self.k) % 2:
            out.append(f"n and k must have the same parity, got n={self.n}, k={self.k}")
        if self.s < 1:
            out.append(f"s must be >= 1, got {self.s}")
        elif self.k >= 2 and self.s > (self.n - self.k) // 2:
            out.append(f"s must be <= (n-k)/2 = {(self.n - self.k) // 2}, got {self.s}")
        return out

    @property
    def big_clique_order(self) -> int:
        return self.n + 1 - 2 * self.s - self.k

    @property
    def independent_order(self) -> int:
        return self.s + self.k - 1


def extremal_family(spec: FamilySpec) -> Graph:
    """Build ``K_s v (K_{n+1-2s-k} u complement(K_{s+k-1}))`` with fixed block labels."""
    if spec.n > MAX_VERTICES:
        raise ParameterError(f"family on {spec.n} > {MAX_VERTICES} vertices")
    inner = disjoint_union(complete(spec.big_clique_order), empty(spec.independent_order))
    return join(complete(spec.s), inner)


def half_family(n: int, k: int) -> Graph:
    """Build ``K_{(n-k)/2} v complement(K_{(n+k)/2})``.

    This is the s = (n-k)/2 member of the family: the big clique shrinks to
    a single vertex, which merges into the independent side.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if n < k + 2:
        raise ParameterError(f"n must be >= k + 2, got n={n}, k={k}")
    if (n - k) % 2:
        raise ParameterError(f"n and k must have the same parity, got n={n}, k={k}")
    if n > MAX_VERTICES:
        raise ParameterError(f"family on {n} > {MAX_VERTICES} vertices")
    return join(complete((n - k) // 2), empty((n + k) // 2))


# --- graph6 ------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Standard graph6 string (short form, n <= 62).

    Upper-triangle bits in column-major order, packed into 6-bit groups,
    each group offset by 63 into printable ASCII.
    """
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for pos in range(0, len(bits), 6):
        group = 0
        for b in bits[pos : pos + 6]:
            group = group << 1 | b
        chars.append(chr(63 + group))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    """Inverse of :func:`graph6_encode`; raises Graph6DecodeError on bad input."""
    if not text:
        raise Graph6DecodeError("empty graph6 string", 0)
    first = ord(text[0])
    if first == 126:
        raise Graph6DecodeError("extended graph6 (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6DecodeError(f"vertex-count byte {text[0]!r} out of range", 0)
    n = first - 63
    if n == 0:
        raise Graph6DecodeError("graph6 with zero vertices", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) < expected:
        raise Graph6DecodeError(f"truncated: need {expected} bytes, got {len(text)}", len(text))
    if len(text) > expected:
        raise Graph6DecodeError(f"trailing data: need {expected} bytes, got {len(text)}", expected)
    rows = [0] * n
    bit_index = 0
    for pos in range(1, len(text)):
        code = ord(text[pos])
        if not 63 <= code <= 126:
            raise Graph6DecodeError(f"data byte {text[pos]!r} out of range", pos)
        group = code - 63
        for shift in range(5, -1, -1):
            bit = group >> shift & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6DecodeError("nonzero padding bits", pos)
                bit_index += 1
                continue
            if bit:
                # column-major upper triangle: recover (i, j) from flat index
                j = _g6_column[bit_index] if n <= 8 else _g6_col_of(bit_index)
                i = bit_index - j * (j - 1) // 2
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(rows))


def _g6_col_of(flat: int) -> int:
    # smallest j with j(j+1)/2 > flat
    j = 1
    while j * (j + 1) // 2 <= flat:
        j += 1
    return j


# column lookup for the small orders the exhaustive search touches constantly
_g6_column = [_g6_col_of(f) for f in range(8 * 7 // 2)]


# --- JSON export ---------------------------------------------------------------

def adjacency_json(g: Graph) -> dict:
    """Edge-list document: ``{"n": ..., "edges": [[i, j], ...]}`` with i < j sorted."""
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


# --- certification helpers ------------------------------------------------------

def is_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """Brute-force permutation isomorphism, n <= 8 only.

    There is deliberately no general isomorphism routine here; the search
    harness certifies its reported maximizer on small orders and relies on
    degree-sequence plus spectrum agreement elsewhere.
    """
    if g1.n > 8 or g2.n > 8:
        raise CapabilityError("brute-force isomorphism is limited to n <= 8")
    if g1.n != g2.n:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    deg1, deg2 = g1.degrees(), g2.degrees()
    for perm in itertools.permutations(range(g1.n)):
        if any(deg2[perm[v]] != deg1[v] for v in range(g1.n)):
            continue
        ok = True
        for i in range(g1.n):
            m = g1.rows[i]
            target = 0
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                target |= 1 << perm[j]
            if g2.rows[perm[i]] != target:
                ok = False
                break
        if ok:
            return True
    return False

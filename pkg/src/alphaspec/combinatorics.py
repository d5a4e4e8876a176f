"""Matching number, odd components, deficiency witnesses, connectivity.

The deficiency of a vertex set S in a graph G is o(G - S) - |S|, where o
counts odd-order components; the maximum deficiency over all S equals
n - 2 mu(G) (Berge-Tutte), with mu the matching number.  This module
exposes both sides of that equality independently -- an exhaustive-subset
witness search (small n) and an augmenting-path matching with blossom
contraction (any n up to 62) -- so tests can confront one with the other.

Vertex connectivity follows the convention that deleting a cut may leave
a single vertex: kappa(K_n) = n - 1, and kappa <= min degree always.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, ParameterError
from .graphs import Graph

_ENUM_LIMIT = 14


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of an n-vertex graph, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.mask >> self.n:
            raise ParameterError(f"mask has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ParameterError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __iter__(self):
        m = self.mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            yield v

    def to_list(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class DeficiencyWitness:
    """A set S together with o(G-S) and the deficiency o(G-S) - |S|."""

    removed: VertexSet
    odd_components: int
    deficiency: int

    def to_json(self) -> dict:
        return {
            "S": self.removed.to_list(),
            "odd": self.odd_components,
            "deficiency": self.deficiency,
        }


def _as_mask(g: Graph, removed) -> int:
    if removed is None:
        return 0
    if isinstance(removed, VertexSet):
        if removed.n != g.n:
            raise ParameterError("vertex set is for a different graph order")
        return removed.mask
    mask = int(removed)
    if mask >> g.n:
        raise ParameterError(f"removed mask has bits outside 0..{g.n - 1}")
    return mask


def components(g: Graph, removed=0) -> list[VertexSet]:
    """Connected components of G - removed, ordered by smallest member."""
    removed_mask = _as_mask(g, removed)
    remaining = ((1 << g.n) - 1) & ~removed_mask
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                grow |= g.rows[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        out.append(VertexSet(g.n, comp))
        remaining &= ~comp
    return out


def odd_component_count(g: Graph, removed=0) -> int:
    return sum(1 for c in components(g, removed) if len(c) % 2)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def berge_tutte_deficiency(g: Graph) -> DeficiencyWitness:
    """Maximize o(G-S) - |S| over all 2^n subsets S.

    Tie-break: among maximizers prefer the largest |S|, then the
    lexicographically smallest vertex list.  With the largest-|S| rule the
    witness leaves only odd components (an even component could always
    donate a vertex to S without lowering the deficiency).
    """
    if g.n > _ENUM_LIMIT:
        raise CapabilityError(
            f"subset enumeration is limited to n <= {_ENUM_LIMIT}; "
            "use matching_number for the Berge-Tutte value at larger orders"
        )
    best_mask = 0
    best_odd = odd_component_count(g, 0)
    best_def = best_odd
    best_size = 0
    for mask in range(1, 1 << g.n):
        odd = odd_component_count(g, mask)
        size = mask.bit_count()
        deficiency = odd - size
        if deficiency < best_def:
            continue
        if deficiency > best_def or size > best_size or (
            size == best_size and _lex_key(mask) < _lex_key(best_mask)
        ):
            best_mask, best_odd, best_def, best_size = mask, odd, deficiency, size
    return DeficiencyWitness(VertexSet(g.n, best_mask), best_odd, best_def)


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(VertexSet(64, mask))


# --- maximum matching ----------------------------------------------------------

def matching_number(g: Graph) -> int:
    """Size of a maximum matching, via augmenting paths with blossom contraction."""
    n = g.n
    adj = [list(VertexSet(n, row)) for row in g.rows]
    match = [-1] * n
    # greedy warm start saves most augmenting rounds
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lowest_common_ancestor(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_blossom(v: int, ancestor: int, child: int, in_blossom: list[bool]):
        while base[v] != ancestor:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    ancestor = lowest_common_ancestor(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, ancestor, to, in_blossom)
                    mark_blossom(to, ancestor, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = ancestor
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] != -1:
            continue
        end = find_augmenting_path(v)
        while end != -1:
            prev = parent[end]
            next_end = match[prev]
            match[end] = prev
            match[prev] = end
            end = next_end
    return sum(1 for v in range(n) if match[v] != -1) // 2


# --- connectivity ----------------------------------------------------------------

def vertex_connectivity(g: Graph) -> int:
    """Minimum number of deletions leaving a disconnected graph or K_1."""
    n = g.n
    full = (1 << n) - 1
    if all(row == full ^ (1 << i) for i, row in enumerate(g.rows)):
        return n - 1
    min_deg = min(g.degrees())
    if n <= _ENUM_LIMIT:
        # enumerate cut candidates by size; kappa <= min degree always
        from itertools import combinations

        for size in range(min_deg):
            for cut in combinations(range(n), size):
                mask = 0
                for v in cut:
                    mask |= 1 << v
                if len(components(g, mask)) > 1:
                    return size
        return min_deg
    return _menger_connectivity(g)


def _menger_connectivity(g: Graph) -> int:
    """kappa as the minimum over non-adjacent pairs of vertex-disjoint paths."""
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, _max_disjoint_paths(g, u, v, best))
    return best


def _max_disjoint_paths(g: Graph, source: int, sink: int, stop_at: int) -> int:
    # unit-capacity max flow on the vertex-split digraph; nodes 2v (in), 2v+1 (out)
    n = g.n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]

    def add(a: int, b: int):
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b].setdefault(a, 0)

    for v in range(n):
        add(2 * v, 2 * v + 1)
    for i in range(n):
        for j in VertexSet(n, g.rows[i]):
            add(2 * i + 1, 2 * j)
    s, t = 2 * source + 1, 2 * sink
    flow = 0
    while flow < stop_at:
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue) and t not in parent:
            a = queue[head]
            head += 1
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if t not in parent:
            break
        b = t
        while b != s:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow


def is_t_connected(g: Graph, t: int) -> bool:
    """True iff kappa(g) >= t."""
    if t < 0:
        raise ParameterError(f"connectivity threshold must be >= 0, got {t}")
    if t == 0:
        return True
    n = g.n
    if min(g.degrees()) < t:
        return False
    if n <= _ENUM_LIMIT:
        from itertools import combinations

        if not is_connected(g):
            return False
        for size in range(1, t):
            for cut in combinations(range(n), size):
                mask = 0
                for v in cut:
                    mask |= 1 << v
                if len(components(g, mask)) > 1:
                    return False
        return True
    return vertex_connectivity(g) >= t

"""Exhaustive and sampled verification that the predicted family wins.

The enumeration space is labelled graphs encoded as edge masks: bit e of a
mask is the e-th vertex pair (i, j), i < j, in row-major order.  Exhaustive
mode walks masks in increasing numeric order; sample mode draws masks
uniformly from a seeded xorshift64* stream.  Either way the space is split
into contiguous chunks handled by compiled kernels; the merge is
associative with ties broken toward the smaller edge mask, so the report
is identical for any worker count -- the property the acceptance suite
pins down.

Generator constants (xorshift64*): state' follows x ^= x >> 12,
x ^= x << 25, x ^= x >> 27 on 64 bits; the output is state' *
0x2545F4914F6CDD1D mod 2^64.  A zero seed is replaced by
0x9E3779B97F4A7C15 so the stream never sticks at zero.  Sample i consumes
words ceil(E/64) * i .. ceil(E/64) * (i+1) - 1 of the stream, word w
holding mask bits 64w .. 64w + 63.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from . import _kernels
from .classifier import (
    EXTREMAL_T,
    HALF,
    TIE,
    UNDETERMINED,
    classify,
    perfect_matching_threshold,
)
from .closedforms import ScenarioParams
from .combinatorics import is_connected, is_t_connected, matching_number
from .errors import CapabilityError, NumericError, ParameterError
from .graphs import (
    FamilySpec,
    Graph,
    extremal_family,
    graph6_encode,
    half_family,
    is_isomorphic_small,
)
from .spectra import full_spectrum, spectral_radius

EXHAUSTIVE_MAX_N = 8
KERNEL_SAMPLE_MAX_N = 11  # above this, sampling falls back to pure Python
CHUNK_EXHAUSTIVE = 1 << 16
CHUNK_SAMPLE = 1 << 13
NEAR_TIE_EPS = 1e-9
CONFIRM_TOL = 1e-8
PROBE_MARGIN = 1e-9

XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D
XORSHIFT_SEED_FALLBACK = 0x9E3779B97F4A7C15
_M64 = (1 << 64) - 1


class Xorshift64Star:
    """The 64-bit generator behind sample mode; constants in module docstring."""

    def __init__(self, seed: int):
        if not isinstance(seed, int):
            raise ParameterError(f"seed must be an integer, got {seed!r}")
        self.state = seed & _M64
        if self.state == 0:
            self.state = XORSHIFT_SEED_FALLBACK

    def next_word(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _M64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & _M64


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in edge-bit order: (0,1), (0,2), ..., (1,2), ..."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    if not isinstance(n, int) or not (1 <= n <= 62):
        raise ParameterError(f"vertex count must be in 1..62, got {n!r}")
    e = edge_count(n)
    if not isinstance(mask, int) or not (0 <= mask < (1 << e)):
        raise ParameterError(
            f"edge mask out of range for n={n}: {mask!r}")
    rows = [0] * n
    for bit, (i, j) in enumerate(edge_pairs(n)):
        if (mask >> bit) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def edge_mask_of(g: Graph) -> int:
    mask = 0
    for bit, (i, j) in enumerate(edge_pairs(g.n)):
        if g.has_edge(i, j):
            mask |= 1 << bit
    return mask


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on n vertices in edge-mask order; n <= 8 only."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"vertex count must be a positive integer, got {n!r}")
    if n > EXHAUSTIVE_MAX_N:
        raise CapabilityError(
            f"exhaustive enumeration is capped at n = {EXHAUSTIVE_MAX_N} "
            f"(2^{edge_count(n)} graphs at n = {n})")
    for mask in range(1 << edge_count(n)):
        yield graph_from_edge_mask(n, mask)


def admissible(g: Graph, params: ScenarioParams) -> bool:
    """t-connected with matching number at most (n - k)/2."""
    if g.n != params.n:
        raise ParameterError(
            f"graph has {g.n} vertices, task expects {params.n}")
    return (is_t_connected(g, params.t)
            and matching_number(g) <= params.matching_bound)


@dataclass(frozen=True)
class SearchTask:
    """What to search: scenario, mode, and sampling controls."""

    params: ScenarioParams
    mode: str = "exhaustive"
    sample_count: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "sample"):
            raise ParameterError(
                f"mode must be 'exhaustive' or 'sample', got {self.mode!r}")
        if self.mode == "sample":
            if not isinstance(self.sample_count, int) or self.sample_count < 1:
                raise ParameterError(
                    f"sample mode needs sample_count >= 1, "
                    f"got {self.sample_count!r}")
        if not isinstance(self.seed, int):
            raise ParameterError(f"seed must be an integer, got {self.seed!r}")


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a search run; all graphs as graph6 strings."""

    examined: int
    admissible: int
    max_rho: float | None
    maximizer: str | None
    predicted_rho: float
    verdict_confirmed: bool
    near_ties: tuple[tuple[str, float], ...]

    def to_json(self) -> dict:
        return {
            "examined": self.examined,
            "admissible": self.admissible,
            "max_rho": self.max_rho,
            "maximizer": self.maximizer,
            "predicted_rho": self.predicted_rho,
            "verdict_confirmed": self.verdict_confirmed,
            "near_ties": [[g6, rho] for g6, rho in self.near_ties],
        }


def _cut_masks(n: int, t: int) -> np.ndarray:
    """All vertex subsets of size 1..t-1 as bitmasks, ascending."""
    masks = []
    for size in range(1, t):
        for combo in combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            masks.append(m)
    masks.sort()
    return np.array(masks, dtype=np.int64)


def _predicted_candidates(params: ScenarioParams):
    """Classifier verdict -> (primary predicted rho, candidate graphs).

    Ties put both families forward; an undetermined verdict follows the
    direction of its direct-comparison resolution.
    """
    result = classify(params)
    verdict = result.verdict
    if verdict == UNDETERMINED:
        verdict = result.resolved
    family_t = extremal_family(FamilySpec(params.n, params.t, params.k))
    family_half = half_family(params.n, params.k)
    if verdict == EXTREMAL_T:
        return result.rho_t, [(family_t, result.rho_t)]
    if verdict == HALF:
        return result.rho_half, [(family_half, result.rho_half)]
    # tie: both attain, up to the bisection-vs-radical float difference
    candidates = [(family_t, result.rho_t), (family_half, result.rho_half)]
    if edge_mask_of(family_t) == edge_mask_of(family_half):
        candidates = candidates[:1]
    return result.rho_half, candidates


def _matches_predicted(maximizer: Graph, max_rho: float, predicted: Graph,
                       predicted_rho: float, alpha: float) -> bool:
    if abs(max_rho - predicted_rho) >= CONFIRM_TOL:
        return False
    if sorted(maximizer.degrees()) != sorted(predicted.degrees()):
        return False
    spec_m = full_spectrum(maximizer, alpha)
    spec_p = full_spectrum(predicted, alpha)
    if any(abs(a - b) >= CONFIRM_TOL for a, b in zip(spec_m, spec_p)):
        return False
    if maximizer.n <= 8:
        return is_isomorphic_small(maximizer, predicted)
    return True


def _chunks(total: int, size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _merge_candidates(per_chunk, eps: float):
    """Merge per-chunk (admissible, best_rho, best_key, cands) results.

    best_key orders ties: smaller wins.  Returns (admissible_total,
    best_rho, best_key, merged candidate list).
    """
    admissible_total = 0
    best_rho = None
    best_key = None
    merged = []
    for adm, rho, key, cands in per_chunk:
        admissible_total += adm
        merged.extend(cands)
        if key is None:
            continue
        if (best_rho is None or rho > best_rho
                or (rho == best_rho and key < best_key)):
            best_rho = rho
            best_key = key
    kept = [c for c in merged if best_rho is not None
            and c[1] >= best_rho - eps]
    return admissible_total, best_rho, best_key, kept


def _run_exhaustive(task: SearchTask, workers: int) -> SearchReport:
    params = task.params
    n = params.n
    if n > EXHAUSTIVE_MAX_N:
        raise CapabilityError(
            f"exhaustive search is capped at n = {EXHAUSTIVE_MAX_N}, "
            f"got n = {n}")
    total = 1 << edge_count(n)
    cut = _cut_masks(n, params.t)
    mu_max = params.matching_bound
    alpha = float(params.alpha)

    def scan(lo: int, hi: int):
        cap = 4096
        while True:
            cand_masks = np.empty(cap, dtype=np.int64)
            cand_rhos = np.empty(cap, dtype=np.float64)
            adm, rho, mask, count, overflow, bad = _kernels.scan_exhaustive_chunk(
                n, lo, hi, params.t, mu_max, alpha, NEAR_TIE_EPS, cut,
                cand_masks, cand_rhos)
            if bad:
                raise NumericError(
                    f"{bad} eigensolves failed to converge scanning masks "
                    f"[{lo}, {hi})")
            if not overflow:
                cands = [(int(cand_masks[i]), float(cand_rhos[i]))
                         for i in range(count)]
                key = None if mask < 0 else int(mask)
                best = None if mask < 0 else float(rho)
                return adm, best, key, cands
            cap = hi - lo

    ranges = _chunks(total, CHUNK_EXHAUSTIVE)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_chunk = list(pool.map(lambda r: scan(*r), ranges))
    else:
        per_chunk = [scan(*r) for r in ranges]

    adm_total, best_rho, best_mask, kept = _merge_candidates(
        per_chunk, NEAR_TIE_EPS)
    predicted_rho, candidates = _predicted_candidates(params)
    if best_mask is None:
        return SearchReport(total, 0, None, None, predicted_rho, False, ())

    maximizer = graph_from_edge_mask(n, best_mask)
    confirmed = any(
        _matches_predicted(maximizer, best_rho, graph, rho, alpha)
        for graph, rho in candidates)
    ties = sorted((m, r) for m, r in kept if m != best_mask)
    near = tuple((graph6_encode(graph_from_edge_mask(n, m)), r)
                 for m, r in ties)
    return SearchReport(
        examined=total,
        admissible=adm_total,
        max_rho=best_rho,
        maximizer=graph6_encode(maximizer),
        predicted_rho=predicted_rho,
        verdict_confirmed=confirmed,
        near_ties=near,
    )


def _sample_words(n: int, count: int, seed: int) -> np.ndarray:
    """The uint64 word table for ``count`` draws; bits >= E are cleared."""
    e = edge_count(n)
    wpg = max(1, math.ceil(e / 64))
    rng = Xorshift64Star(seed)
    flat = np.empty(count * wpg, dtype=np.uint64)
    for i in range(count * wpg):
        flat[i] = rng.next_word()
    words = flat.reshape(count, wpg)
    spare = e - 64 * (wpg - 1)
    if spare < 64:
        words[:, -1] &= np.uint64((1 << spare) - 1)
    return words


def _mask_from_words(words: np.ndarray, idx: int) -> int:
    mask = 0
    for w in range(words.shape[1]):
        mask |= int(words[idx, w]) << (64 * w)
    return mask


def _run_sample(task: SearchTask, workers: int) -> SearchReport:
    params = task.params
    n = params.n
    count = task.sample_count
    alpha = float(params.alpha)
    words = _sample_words(n, count, task.seed)
    mu_max = params.matching_bound

    per_chunk = []
    if n <= KERNEL_SAMPLE_MAX_N:
        cut = _cut_masks(n, params.t)

        def scan(start: int, stop: int):
            cap = 4096
            while True:
                cand_idx = np.empty(cap, dtype=np.int64)
                cand_rhos = np.empty(cap, dtype=np.float64)
                adm, rho, idx, cnt, overflow, bad = _kernels.scan_sample_chunk(
                    words, start, stop, n, params.t, mu_max, alpha,
                    NEAR_TIE_EPS, cut, cand_idx, cand_rhos)
                if bad:
                    raise NumericError(
                        f"{bad} eigensolves failed to converge on samples "
                        f"[{start}, {stop})")
                if not overflow:
                    cands = [(int(cand_idx[i]), float(cand_rhos[i]))
                             for i in range(cnt)]
                    key = None
                    best = None
                    if idx >= 0:
                        key = (_mask_from_words(words, int(idx)), int(idx))
                        best = float(rho)
                    cands = [((_mask_from_words(words, i), i), r)
                             for i, r in cands]
                    return adm, best, key, cands
                cap = stop - start

        ranges = _chunks(count, CHUNK_SAMPLE)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                per_chunk = list(pool.map(lambda r: scan(*r), ranges))
        else:
            per_chunk = [scan(*r) for r in ranges]
    else:
        # pure-Python fallback for orders beyond the kernel's subset tables
        running_best = None
        cands = []
        adm = 0
        for i in range(count):
            mask = _mask_from_words(words, i)
            g = graph_from_edge_mask(n, mask)
            if not admissible(g, params):
                continue
            adm += 1
            rho = spectral_radius(g, alpha)
            if running_best is None or rho >= running_best - NEAR_TIE_EPS:
                cands.append(((mask, i), rho))
            if running_best is None or rho > running_best:
                running_best = rho
        best_key = None
        best_rho = None
        for (mask, i), rho in cands:
            if best_rho is None or rho > best_rho \
                    or (rho == best_rho and (mask, i) < best_key):
                best_rho = rho
                best_key = (mask, i)
        per_chunk = [(adm, best_rho, best_key, cands)]

    adm_total, best_rho, best_key, kept = _merge_candidates(
        per_chunk, NEAR_TIE_EPS)
    predicted_rho, candidates = _predicted_candidates(params)
    if best_key is None:
        return SearchReport(count, 0, None, None, predicted_rho, False, ())

    best_mask = best_key[0]
    maximizer = graph_from_edge_mask(n, best_mask)
    confirmed = any(
        _matches_predicted(maximizer, best_rho, graph, rho, alpha)
        for graph, rho in candidates)
    # the same mask can be drawn twice; near ties are per distinct graph
    seen: dict[int, float] = {}
    for (mask, _), rho in sorted(kept, key=lambda c: c[0]):
        if mask != best_mask and mask not in seen:
            seen[mask] = rho
    near = tuple((graph6_encode(graph_from_edge_mask(n, m)), r)
                 for m, r in sorted(seen.items()))
    return SearchReport(
        examined=count,
        admissible=adm_total,
        max_rho=best_rho,
        maximizer=graph6_encode(maximizer),
        predicted_rho=predicted_rho,
        verdict_confirmed=confirmed,
        near_ties=near,
    )


def run(task: SearchTask, workers: int = 1) -> SearchReport:
    """Execute a search task; the report is identical for any worker count."""
    if not isinstance(workers, int) or workers < 1:
        raise ParameterError(f"workers must be a positive integer, got {workers!r}")
    if task.mode == "exhaustive":
        return _run_exhaustive(task, workers)
    return _run_sample(task, workers)


@dataclass(frozen=True)
class ProbeReport:
    """Hunt for radius-above-threshold graphs without perfect matchings."""

    n: int
    alpha: float
    threshold: float
    examined: int
    above_threshold: int
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "threshold": self.threshold,
            "examined": self.examined,
            "above_threshold": self.above_threshold,
            "violations": list(self.violations),
        }


def counterexample_probe(n: int, alpha: float, budget: int | None = None,
                         seed: int = 0, workers: int = 1) -> ProbeReport:
    """Look for connected graphs above the perfect-matching radius threshold
    that lack a perfect matching (the corollary says there are none).

    ``budget=None`` means exhaustive (n <= 8); otherwise that many seeded
    uniform draws.  Graphs at most PROBE_MARGIN above the threshold are not
    counted, mirroring the strict inequality in the statement.
    """
    thr = perfect_matching_threshold(n, alpha)
    a = float(alpha)

    if budget is None:
        if n > EXHAUSTIVE_MAX_N:
            raise CapabilityError(
                f"exhaustive probe is capped at n = {EXHAUSTIVE_MAX_N}, "
                f"got n = {n}; pass a sample budget instead")
        total = 1 << edge_count(n)

        def scan(lo: int, hi: int):
            cap = 4096
            while True:
                viol = np.empty(cap, dtype=np.int64)
                conn, above, nv, overflow, bad = _kernels.probe_exhaustive(
                    n, lo, hi, a, thr.rho, PROBE_MARGIN, viol)
                if bad:
                    raise NumericError(
                        f"{bad} eigensolves failed to converge probing "
                        f"masks [{lo}, {hi})")
                if not overflow:
                    return above, [int(viol[i]) for i in range(nv)]
                cap = hi - lo

        ranges = _chunks(total, CHUNK_EXHAUSTIVE)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda r: scan(*r), ranges))
        else:
            parts = [scan(*r) for r in ranges]
        above = sum(p[0] for p in parts)
        masks = sorted(m for p in parts for m in p[1])
        return ProbeReport(
            n, a, thr.rho, total, above,
            tuple(graph6_encode(graph_from_edge_mask(n, m)) for m in masks))

    if not isinstance(budget, int) or budget < 1:
        raise ParameterError(f"budget must be None or >= 1, got {budget!r}")
    words = _sample_words(n, budget, seed)
    if n <= KERNEL_SAMPLE_MAX_N:

        def scan(start: int, stop: int):
            cap = 4096
            while True:
                viol = np.empty(cap, dtype=np.int64)
                conn, above, nv, overflow, bad = _kernels.probe_samples(
                    words, start, stop, n, a, thr.rho, PROBE_MARGIN, viol)
                if bad:
                    raise NumericError(
                        f"{bad} eigensolves failed to converge probing "
                        f"samples [{start}, {stop})")
                if not overflow:
                    return above, [int(viol[i]) for i in range(nv)]
                cap = stop - start

        ranges = _chunks(budget, CHUNK_SAMPLE)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda r: scan(*r), ranges))
        else:
            parts = [scan(*r) for r in ranges]
        above = sum(p[0] for p in parts)
        viol_masks = sorted({_mask_from_words(words, i)
                             for p in parts for i in p[1]})
    else:
        above = 0
        viol_masks = set()
        for i in range(budget):
            mask = _mask_from_words(words, i)
            g = graph_from_edge_mask(n, mask)
            if not is_connected(g):
                continue
            rho = spectral_radius(g, a)
            if rho <= thr.rho + PROBE_MARGIN:
                continue
            above += 1
            if matching_number(g) < n // 2:
                viol_masks.add(mask)
        viol_masks = sorted(viol_masks)
    return ProbeReport(
        n, a, thr.rho, budget, above,
        tuple(graph6_encode(graph_from_edge_mask(n, m)) for m in viol_masks))

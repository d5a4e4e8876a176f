"""Compiled inner loops: Jacobi sweeps and per-graph search filters.

Everything here is deterministic -- fixed sweep order, fixed scan order,
fixed tie-breaking, no threading inside a kernel -- so identical inputs
give bit-identical outputs regardless of how callers chunk the work.
Wrappers in :mod:`spectra` and :mod:`search` own validation, chunking and
report assembly; kernels never raise, they report flags.

Edge-bit convention used by every mask-indexed routine: bit ``e`` of an
edge mask is the pair ``(i, j)``, ``i < j``, taken in row-major order
(0,1), (0,2), ..., (0,n-1), (1,2), ...
"""
from __future__ import annotations

import numpy as np
from numba import njit

JACOBI_MAX_SWEEPS = 60
JACOBI_REL_TOL = 1e-13


@njit(cache=True, nogil=True)
def jacobi_cyclic(A, V, want_vectors):
    """In-place cyclic Jacobi on symmetric A; returns (sweeps, converged).

    Convergence: off-diagonal Frobenius norm <= 1e-13 * ||A||_F.  The
    Frobenius norm is invariant under the rotations, so it is measured once
    up front.  Sweep order is row-major over (p, q), p < q, always.
    """
    n = A.shape[0]
    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += A[i, j] * A[i, j]
    tol2 = (JACOBI_REL_TOL * JACOBI_REL_TOL) * fro2
    if want_vectors:
        for i in range(n):
            for j in range(n):
                V[i, j] = 1.0 if i == j else 0.0
    sweeps = 0
    while True:
        off2 = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off2 += 2.0 * A[i, j] * A[i, j]
        if off2 <= tol2:
            return sweeps, True
        if sweeps >= JACOBI_MAX_SWEEPS:
            return sweeps, False
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = c * aip - s * aiq
                    A[i, q] = s * aip + c * aiq
                for i in range(n):
                    api = A[p, i]
                    aqi = A[q, i]
                    A[p, i] = c * api - s * aqi
                    A[q, i] = s * api + c * aqi
                A[p, q] = 0.0
                A[q, p] = 0.0
                if want_vectors:
                    for i in range(n):
                        vip = V[i, p]
                        viq = V[i, q]
                        V[i, p] = c * vip - s * viq
                        V[i, q] = s * vip + c * viq


@njit(cache=True, nogil=True)
def _reach_from(rows, start_mask, allowed):
    """Transitive closure of ``start_mask`` inside ``allowed`` (bitmask BFS)."""
    reach = start_mask & allowed
    prev = np.int64(0)
    while reach != prev:
        prev = reach
        r = reach
        v = 0
        while r != 0:
            if (r & 1) != 0:
                reach |= rows[v]
            r >>= 1
            v += 1
        reach &= allowed
    return reach


@njit(cache=True, nogil=True)
def _mu_exact(rows, full, dp):
    """Matching number by subset DP; dp is a scratch int8 array of size full+1."""
    dp[0] = 0
    for m in range(1, full + 1):
        v = 0
        while ((m >> v) & 1) == 0:
            v += 1
        rest = m & ~(np.int64(1) << v)
        best = dp[rest]
        w = rows[v] & rest
        u = 0
        while w != 0:
            if (w & 1) != 0:
                cand = dp[rest & ~(np.int64(1) << u)] + 1
                if cand > best:
                    best = cand
            w >>= 1
            u += 1
        dp[m] = best
    return dp[full]


@njit(cache=True, nogil=True)
def _greedy_matching(rows, n):
    used = np.int64(0)
    size = 0
    for v in range(n):
        if ((used >> v) & 1) != 0:
            continue
        nb = rows[v] & ~used
        if nb != 0:
            u = 0
            while ((nb >> u) & 1) == 0:
                u += 1
            used |= (np.int64(1) << v) | (np.int64(1) << u)
            size += 1
    return size


@njit(cache=True, nogil=True)
def _rho_alpha(rows, deg, n, alpha, A, Vdummy):
    """Largest A_alpha eigenvalue; returns (rho, converged)."""
    for i in range(n):
        for j in range(n):
            A[i, j] = 0.0
    for i in range(n):
        A[i, i] = alpha * deg[i]
        r = rows[i]
        v = 0
        while r != 0:
            if (r & 1) != 0:
                A[i, v] = 1.0 - alpha
            r >>= 1
            v += 1
    sweeps, conv = jacobi_cyclic(A, Vdummy, False)
    rho = A[0, 0]
    for i in range(1, n):
        if A[i, i] > rho:
            rho = A[i, i]
    return rho, conv


@njit(cache=True, nogil=True)
def scan_exhaustive_chunk(n, lo, hi, t, mu_max, alpha, tie_eps, cut_masks,
                          cand_masks, cand_rhos):
    """Scan edge masks [lo, hi) for t-connected graphs with mu <= mu_max.

    Returns (admissible, best_rho, best_mask, cand_count, overflow,
    nonconverged).  ``cand_*`` collect every admissible graph whose rho is
    within tie_eps of the running best -- a superset of the final near-tie
    set, filtered against the global best by the caller.  Tie-break on
    equal rho: the smaller edge mask wins.
    """
    E = n * (n - 1) // 2
    full = (np.int64(1) << n) - 1
    ei = np.empty(E, np.int64)
    ej = np.empty(E, np.int64)
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            ei[e] = i
            ej[e] = j
            e += 1
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    for b in range(E):
        if ((lo >> b) & 1) != 0:
            rows[ei[b]] |= np.int64(1) << ej[b]
            rows[ej[b]] |= np.int64(1) << ei[b]
            deg[ei[b]] += 1
            deg[ej[b]] += 1
    dp = np.zeros(full + 1, np.int8)
    A = np.empty((n, n), np.float64)
    Vdummy = np.empty((1, 1), np.float64)
    admissible = 0
    best_rho = -1.0
    best_mask = np.int64(-1)
    cand_count = 0
    overflow = False
    nonconverged = 0
    cap = cand_masks.shape[0]
    for mask in range(lo, hi):
        if mask != lo:
            diff = (mask - 1) ^ mask
            b = 0
            while diff != 0:
                if (diff & 1) != 0:
                    i = ei[b]
                    j = ej[b]
                    rows[i] ^= np.int64(1) << j
                    rows[j] ^= np.int64(1) << i
                    if ((rows[i] >> j) & 1) != 0:
                        deg[i] += 1
                        deg[j] += 1
                    else:
                        deg[i] -= 1
                        deg[j] -= 1
                diff >>= 1
                b += 1
        mind = deg[0]
        maxd = deg[0]
        for v in range(1, n):
            if deg[v] < mind:
                mind = deg[v]
            if deg[v] > maxd:
                maxd = deg[v]
        if mind < t or mind < 1:
            continue
        if _reach_from(rows, np.int64(1), full) != full:
            continue
        if _greedy_matching(rows, n) > mu_max:
            continue
        if _mu_exact(rows, full, dp) > mu_max:
            continue
        cut_ok = True
        for ci in range(cut_masks.shape[0]):
            rem = full & ~cut_masks[ci]
            seed = rem & (-rem)
            if _reach_from(rows, seed, rem) != rem:
                cut_ok = False
                break
        if not cut_ok:
            continue
        admissible += 1
        if maxd < best_rho - tie_eps:
            continue
        rho, conv = _rho_alpha(rows, deg, n, alpha, A, Vdummy)
        if not conv:
            nonconverged += 1
        if rho >= best_rho - tie_eps:
            if cand_count < cap:
                cand_masks[cand_count] = mask
                cand_rhos[cand_count] = rho
                cand_count += 1
            else:
                overflow = True
        if rho > best_rho or (rho == best_rho and mask < best_mask):
            best_rho = rho
            best_mask = mask
    return admissible, best_rho, best_mask, cand_count, overflow, nonconverged


@njit(cache=True, nogil=True)
def decode_words_to_rows(words, sample, n, rows, deg):
    """Rebuild adjacency rows of one sampled graph from its random words."""
    for i in range(n):
        rows[i] = 0
        deg[i] = 0
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            w = words[sample, e >> 6]
            if ((w >> np.uint64(e & 63)) & np.uint64(1)) != np.uint64(0):
                rows[i] |= np.int64(1) << j
                rows[j] |= np.int64(1) << i
                deg[i] += 1
                deg[j] += 1
            e += 1


@njit(cache=True, nogil=True)
def _words_less(words, sa, sb):
    wpg = words.shape[1]
    for w in range(wpg - 1, -1, -1):
        if words[sa, w] != words[sb, w]:
            return words[sa, w] < words[sb, w]
    return False


@njit(cache=True, nogil=True)
def scan_sample_chunk(words, start, stop, n, t, mu_max, alpha, tie_eps,
                      cut_masks, cand_idx, cand_rhos):
    """Sample-mode counterpart of scan_exhaustive_chunk over draws [start, stop).

    Candidates are sample indices; ties on equal rho prefer the smaller edge
    mask (lexicographic word compare), then the earlier draw.
    """
    full = (np.int64(1) << n) - 1
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    dp = np.zeros(full + 1, np.int8)
    A = np.empty((n, n), np.float64)
    Vdummy = np.empty((1, 1), np.float64)
    admissible = 0
    best_rho = -1.0
    best_idx = np.int64(-1)
    cand_count = 0
    overflow = False
    nonconverged = 0
    cap = cand_idx.shape[0]
    for idx in range(start, stop):
        decode_words_to_rows(words, idx, n, rows, deg)
        mind = deg[0]
        maxd = deg[0]
        for v in range(1, n):
            if deg[v] < mind:
                mind = deg[v]
            if deg[v] > maxd:
                maxd = deg[v]
        if mind < t or mind < 1:
            continue
        if _reach_from(rows, np.int64(1), full) != full:
            continue
        if _greedy_matching(rows, n) > mu_max:
            continue
        if _mu_exact(rows, full, dp) > mu_max:
            continue
        cut_ok = True
        for ci in range(cut_masks.shape[0]):
            rem = full & ~cut_masks[ci]
            seed = rem & (-rem)
            if _reach_from(rows, seed, rem) != rem:
                cut_ok = False
                break
        if not cut_ok:
            continue
        admissible += 1
        if maxd < best_rho - tie_eps:
            continue
        rho, conv = _rho_alpha(rows, deg, n, alpha, A, Vdummy)
        if not conv:
            nonconverged += 1
        if rho >= best_rho - tie_eps:
            if cand_count < cap:
                cand_idx[cand_count] = idx
                cand_rhos[cand_count] = rho
                cand_count += 1
            else:
                overflow = True
        if rho > best_rho or (rho == best_rho and (best_idx == -1 or _words_less(words, idx, best_idx))):
            best_rho = rho
            best_idx = idx
    return admissible, best_rho, best_idx, cand_count, overflow, nonconverged


@njit(cache=True, nogil=True)
def probe_exhaustive(n, lo, hi, alpha, threshold, margin, viol_masks):
    """Count connected graphs with rho above threshold+margin lacking a
    perfect matching over edge masks [lo, hi).

    Returns (connected, above, viol_count, overflow, nonconverged).
    """
    E = n * (n - 1) // 2
    full = (np.int64(1) << n) - 1
    ei = np.empty(E, np.int64)
    ej = np.empty(E, np.int64)
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            ei[e] = i
            ej[e] = j
            e += 1
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    for b in range(E):
        if ((lo >> b) & 1) != 0:
            rows[ei[b]] |= np.int64(1) << ej[b]
            rows[ej[b]] |= np.int64(1) << ei[b]
            deg[ei[b]] += 1
            deg[ej[b]] += 1
    dp = np.zeros(full + 1, np.int8)
    A = np.empty((n, n), np.float64)
    Vdummy = np.empty((1, 1), np.float64)
    connected = 0
    above = 0
    viol = 0
    overflow = False
    nonconverged = 0
    cap = viol_masks.shape[0]
    half = n // 2
    for mask in range(lo, hi):
        if mask != lo:
            diff = (mask - 1) ^ mask
            b = 0
            while diff != 0:
                if (diff & 1) != 0:
                    i = ei[b]
                    j = ej[b]
                    rows[i] ^= np.int64(1) << j
                    rows[j] ^= np.int64(1) << i
                    if ((rows[i] >> j) & 1) != 0:
                        deg[i] += 1
                        deg[j] += 1
                    else:
                        deg[i] -= 1
                        deg[j] -= 1
                diff >>= 1
                b += 1
        mind = deg[0]
        maxd = deg[0]
        for v in range(1, n):
            if deg[v] < mind:
                mind = deg[v]
            if deg[v] > maxd:
                maxd = deg[v]
        if mind < 1:
            continue
        if _reach_from(rows, np.int64(1), full) != full:
            continue
        connected += 1
        if maxd < threshold + margin:
            continue
        rho, conv = _rho_alpha(rows, deg, n, alpha, A, Vdummy)
        if not conv:
            nonconverged += 1
        if rho <= threshold + margin:
            continue
        above += 1
        if _mu_exact(rows, full, dp) < half:
            if viol < cap:
                viol_masks[viol] = mask
            else:
                overflow = True
            viol += 1
    return connected, above, viol, overflow, nonconverged


@njit(cache=True, nogil=True)
def probe_samples(words, start, stop, n, alpha, threshold, margin, viol_idx):
    """Sampled counterpart of probe_exhaustive; returns the same counters."""
    full = (np.int64(1) << n) - 1
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    dp = np.zeros(full + 1, np.int8)
    A = np.empty((n, n), np.float64)
    Vdummy = np.empty((1, 1), np.float64)
    connected = 0
    above = 0
    viol = 0
    overflow = False
    nonconverged = 0
    cap = viol_idx.shape[0]
    half = n // 2
    for idx in range(start, stop):
        decode_words_to_rows(words, idx, n, rows, deg)
        mind = deg[0]
        maxd = deg[0]
        for v in range(1, n):
            if deg[v] < mind:
                mind = deg[v]
            if deg[v] > maxd:
                maxd = deg[v]
        if mind < 1:
            continue
        if _reach_from(rows, np.int64(1), full) != full:
            continue
        connected += 1
        if maxd < threshold + margin:
            continue
        rho, conv = _rho_alpha(rows, deg, n, alpha, A, Vdummy)
        if not conv:
            nonconverged += 1
        if rho <= threshold + margin:
            continue
        above += 1
        if _mu_exact(rows, full, dp) < half:
            if viol < cap:
                viol_idx[viol] = idx
            else:
                overflow = True
            viol += 1
    return connected, above, viol, overflow, nonconverged


@njit(cache=True, nogil=True)
def connected_mu_deficiency_scan(n, lo, hi, out_masks, out_mu, out_def):
    """For every connected graph in [lo, hi): its mask, subset-DP matching
    number, and max_S (odd components of G-S) - |S| by full subset
    enumeration.  Returns the number of connected graphs found.

    Caller sizes the out arrays to hi - lo, so no overflow is possible.
    """
    E = n * (n - 1) // 2
    full = (np.int64(1) << n) - 1
    ei = np.empty(E, np.int64)
    ej = np.empty(E, np.int64)
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            ei[e] = i
            ej[e] = j
            e += 1
    rows = np.zeros(n, np.int64)
    for b in range(E):
        if ((lo >> b) & 1) != 0:
            rows[ei[b]] |= np.int64(1) << ej[b]
            rows[ej[b]] |= np.int64(1) << ei[b]
    pc = np.zeros(full + 1, np.int8)
    for m in range(1, full + 1):
        pc[m] = pc[m >> 1] + np.int8(m & 1)
    odd = np.zeros(full + 1, np.int8)
    dp = np.zeros(full + 1, np.int8)
    count = 0
    for mask in range(lo, hi):
        if mask != lo:
            diff = (mask - 1) ^ mask
            b = 0
            while diff != 0:
                if (diff & 1) != 0:
                    rows[ei[b]] ^= np.int64(1) << ej[b]
                    rows[ej[b]] ^= np.int64(1) << ei[b]
                diff >>= 1
                b += 1
        if _reach_from(rows, np.int64(1), full) != full:
            continue
        # odd-component counts for every kept-vertex subset, by peeling the
        # component of the lowest vertex
        for m in range(1, full + 1):
            seed = m & (-m)
            comp = _reach_from(rows, seed, m)
            odd[m] = odd[m & ~comp] + np.int8(pc[comp] & 1)
        best_def = np.int64(odd[full])
        for S in range(1, full + 1):
            d = np.int64(odd[full & ~S]) - np.int64(pc[S])
            if d > best_def:
                best_def = d
        out_masks[count] = mask
        out_mu[count] = _mu_exact(rows, full, dp)
        out_def[count] = np.int8(best_def)
        count += 1
    return count

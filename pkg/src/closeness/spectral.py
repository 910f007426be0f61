"""Laplacian spectrum via cyclic Jacobi rotations.

Sweeps use round-robin (tournament) ordering, so every round rotates
n/2 disjoint index pairs at once and can be applied as whole-row and
whole-column numpy updates.  A sweep is n-1 rounds and touches every
off-diagonal pair exactly once, which is the classical cyclic scheme
with a different visiting order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

CONVERGENCE_RTOL = 1e-12
CLUSTER_RTOL = 1e-8
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: tuple[float, ...]  # ascending
    b: int
    algebraic_connectivity: float
    reciprocal_sum: float
    max_residual: float
    sweeps: int


def laplacian_matrix(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for v in range(g.n):
        lap[v, v] = g.degree(v)
        for w in g.adjacency[v]:
            lap[v, w] = -1.0
    return lap


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 rounds of disjoint pairs covering every pair once (n even)."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        half = n // 2
        p = np.array([min(players[i], players[n - 1 - i]) for i in range(half)])
        q = np.array([max(players[i], players[n - 1 - i]) for i in range(half)])
        rounds.append((p, q))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(a: np.ndarray, rtol: float = CONVERGENCE_RTOL) -> tuple[np.ndarray, np.ndarray, int]:
    """Eigenvalues (ascending) and eigenvectors of a symmetric matrix."""
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy(), np.eye(1), 0
    size = n + (n % 2)
    # padding with an isolated zero row keeps the pairing scheme uniform
    work = np.zeros((size, size))
    work[:n, :n] = a
    vecs = np.eye(size)
    target = rtol * max(np.linalg.norm(a), 1e-300)
    rounds = _round_robin(size)
    sweeps = 0

    def off_norm() -> float:
        off = work.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    while off_norm() > target:
        if sweeps >= MAX_SWEEPS:
            raise RuntimeError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
        sweeps += 1
        for p, q in rounds:
            apq = work[p, q]
            active = np.abs(apq) > 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (work[q, q] - work[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # A <- R^T A R with R[p,p]=R[q,q]=c, R[p,q]=s, R[q,p]=-s
            cols_p, cols_q = work[:, p].copy(), work[:, q].copy()
            work[:, p] = cols_p * c - cols_q * s
            work[:, q] = cols_p * s + cols_q * c
            rows_p, rows_q = work[p, :].copy(), work[q, :].copy()
            work[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            work[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            work[p, q] = 0.0
            work[q, p] = 0.0
            vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
            vecs[:, p] = vp * c - vq * s
            vecs[:, q] = vp * s + vq * c
    vals = np.diag(work)[:n].copy()
    vecs = vecs[:n, :n]
    order = np.argsort(vals, kind="stable")
    return vals[order], vecs[:, order], sweeps


def count_distinct(values, rtol: float = CLUSTER_RTOL) -> int:
    """Number of clusters in sorted ``values``; gaps within rtol*max(1, top) merge."""
    if len(values) == 0:
        return 0
    tol = rtol * max(1.0, float(values[-1]))
    clusters = 1
    for prev, cur in zip(values, values[1:]):
        if cur - prev > tol:
            clusters += 1
    return clusters


def laplacian_spectrum(g: Graph) -> SpectralData:
    lap = laplacian_matrix(g)
    vals, vecs, sweeps = jacobi_eigh(lap)
    residual = float(np.max(np.linalg.norm(lap @ vecs - vecs * vals, axis=0))) if g.n else 0.0
    top = max(1.0, float(vals[-1])) if g.n else 1.0
    nonzero = [v for v in vals if v > CLUSTER_RTOL * top]
    return SpectralData(
        eigenvalues=tuple(float(v) for v in vals),
        b=count_distinct(vals),
        algebraic_connectivity=float(vals[1]) if g.n > 1 else 0.0,
        reciprocal_sum=float(sum(1.0 / v for v in nonzero)),
        max_residual=residual,
        sweeps=sweeps,
    )

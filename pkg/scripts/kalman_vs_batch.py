#!/usr/bin/env python3
"""Compare the recursive filter against a batch linear-MMSE solve.

For each random system the stacked joint Gaussian of all states and
measurements is formed explicitly and conditioned on the measurements; the
recursion must reproduce that posterior mean step by step. Prints the worst
relative deviation seen.

Usage: python scripts/kalman_vs_batch.py [systems] [seed]
"""

import sys

import numpy as np

from oitkit.classical import LinearSystemSpec, kalman_filter


def batch_mmse(system: LinearSystemSpec, z: np.ndarray, k: int) -> np.ndarray:
    """Posterior mean of x(k) given z(1..k), by stacking the joint Gaussian."""
    n = system.state_dim
    p = system.measurement_dim
    A, H, Q, R = system.A, system.H, system.Q, system.R
    means = []
    m = system.x0.copy()
    for _ in range(k):
        m = A @ m
        means.append(m.copy())
    V = [system.P0.copy()]
    for _ in range(k):
        V.append(A @ V[-1] @ A.T + Q)
    cov = np.zeros((k * n, k * n))
    for i in range(1, k + 1):
        for j in range(1, i + 1):
            block = np.linalg.matrix_power(A, i - j) @ V[j]
            cov[(i - 1) * n : i * n, (j - 1) * n : j * n] = block
            cov[(j - 1) * n : j * n, (i - 1) * n : i * n] = block.T
    H_blk = np.kron(np.eye(k), H)
    R_blk = np.kron(np.eye(k), R)
    S = H_blk @ cov @ H_blk.T + R_blk
    prior = np.concatenate(means)
    innovation = z[:k].reshape(-1) - H_blk @ prior
    posterior = prior + cov @ H_blk.T @ np.linalg.solve(S, innovation)
    return posterior[-n:]


def random_system(rng: np.random.Generator) -> tuple[LinearSystemSpec, np.ndarray]:
    n = int(rng.integers(1, 4))
    p = int(rng.integers(1, 4))
    A = rng.normal(size=(n, n))
    radius = max(abs(np.linalg.eigvals(A)))
    if radius > 0:
        A *= rng.uniform(0.3, 1.05) / radius
    H = rng.normal(size=(p, n))
    L = rng.normal(size=(n, n)) * 0.5
    Q = L @ L.T
    M = rng.normal(size=(p, p)) * 0.5
    R = M @ M.T + 0.2 * np.eye(p)
    L0 = rng.normal(size=(n, n)) * 0.5
    P0 = L0 @ L0.T
    x0 = rng.normal(size=n)
    steps = int(rng.integers(1, 31))
    z = rng.normal(size=(steps, p))
    return LinearSystemSpec(A=A, H=H, Q=Q, R=R, x0=x0, P0=P0), z


def main(systems: int = 50, seed: int = 3) -> int:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(systems):
        system, z = random_system(rng)
        steps = kalman_filter(system, z)
        for k, step in enumerate(steps, start=1):
            oracle = batch_mmse(system, z, k)
            scale = max(1.0, float(np.max(np.abs(oracle))))
            worst = max(worst, float(np.max(np.abs(step.x - oracle))) / scale)
    print(f"systems: {systems} (seed {seed})")
    print(f"worst relative deviation from batch MMSE: {worst:.3e}")
    return 0 if worst < 1e-9 else 1


if __name__ == "__main__":
    systems = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    raise SystemExit(main(systems, seed))

"""Calculators connecting each information metric to a classical principle.

Each function here is the quantitative side of one classical result: the
Shannon source-coding bound, serial transmission delay, the radar range
equation, the Rayleigh resolution criterion, variety and aggregation
invariance under restorable mappings, MTBF-style average duration, the
Nyquist sampling bound, Metcalfe's law, the discrete Kalman filter, and
average-search-length accounting for minimum-mismatch lookup.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    NotRestorableError,
    PartialRelationError,
    SearchError,
    SingularInnovationError,
)
from .metrics import (
    DistanceSpec,
    EquivalenceRelation,
    RelationSet,
    aggregation,
    coverage,
    mismatch,
    scope,
)
from .model import InformationModel, is_restorable
from .timeset import seconds


def shannon_min_volume(probabilities: Sequence[float]) -> float:
    """Entropy in bits: the least volume a restorable encoding can have.

    Zero probabilities contribute nothing (the usual limit convention).
    """
    p = [float(x) for x in probabilities]
    if any(x < 0 for x in p):
        raise ValueError("probabilities must be nonnegative")
    if abs(math.fsum(p) - 1.0) > 1e-12:
        raise ValueError(f"probabilities sum to {math.fsum(p)!r}, not 1")
    return -math.fsum(x * math.log2(x) for x in p if x > 0) + 0.0


def serial_chain_delay(delays: Sequence) -> Fraction:
    """Total delay of a serial chain: the exact sum of the link delays."""
    return sum((seconds(d) for d in delays), Fraction(0))


def radar_max_range(
    transmit_power: float,
    antenna_gain: float,
    effective_aperture: float,
    min_detectable_signal: float,
    reflection_area: float,
) -> float:
    """Maximum detection range of the radar range equation.

    Grows with the quartic root of the target's reflection area, which is the
    scope measure of the detection information.
    """
    values = (
        transmit_power,
        antenna_gain,
        effective_aperture,
        min_detectable_signal,
        reflection_area,
    )
    if any(v <= 0 for v in values):
        raise ValueError("all radar equation inputs must be positive")
    numerator = transmit_power * antenna_gain * effective_aperture * reflection_area
    return (numerator / ((4 * math.pi) ** 2 * min_detectable_signal)) ** 0.25


def rayleigh_granularity(wavelength, aperture_width):
    """Minimum resolvable angle of an imaging system: wavelength over
    aperture width. Equals the granularity of imaging information whose
    atoms (pixels) all carry that angle as their noumenon measure."""
    if wavelength <= 0 or aperture_width <= 0:
        raise ValueError("wavelength and aperture width must be positive")
    return wavelength / aperture_width


@dataclass(frozen=True)
class InvarianceResult:
    state_side: object
    reflection_side: object
    equal: bool


def _require_restorable(model: InformationModel) -> None:
    if not is_restorable(model):
        raise NotRestorableError("check only applies to restorable models")


def variety_invariance_check(
    model: InformationModel, relation: EquivalenceRelation
) -> InvarianceResult:
    """Transport an equivalence relation through the mapping and compare
    class counts on both sides; they agree for every restorable model."""
    _require_restorable(model)
    missing = [i for i in range(len(model.states)) if i not in relation.labels]
    if missing:
        raise PartialRelationError(f"relation does not label states {missing}")
    label_of_key: dict = {}
    for i, entry in enumerate(model.states):
        key = entry.key()
        lab = relation.labels[i]
        if label_of_key.setdefault(key, lab) != lab:
            raise PartialRelationError(
                "relation gives duplicate state values inconsistent labels"
            )
    transported: dict = {}
    for s, r in model.mapping:
        transported[r] = relation.labels[s]
    state_classes = len({label_of_key[k] for k in label_of_key})
    reflection_classes = len(set(transported.values()))
    return InvarianceResult(state_classes, reflection_classes, state_classes == reflection_classes)


def aggregation_invariance_check(
    model: InformationModel, rels: RelationSet
) -> InvarianceResult:
    """Transport labelled relations through the mapping and compare the
    relations-per-element ratios on both sides."""
    _require_restorable(model)
    ratio_states = aggregation(model, rels)
    to_reflection = dict(model.mapping)
    transported = set()
    for a, b, lab in rels.edges:
        transported.add(
            (
                model.reflections[to_reflection[a]].key(),
                model.reflections[to_reflection[b]].key(),
                lab,
            )
        )
    distinct_reflections = {e.key() for e in model.reflections}
    ratio_reflections = Fraction(len(transported), len(distinct_reflections))
    return InvarianceResult(ratio_states, ratio_reflections, ratio_states == ratio_reflections)


def mtbf_duration(sessions: Sequence[tuple]) -> Fraction:
    """Average duration over monitoring sessions given as (sup, inf) pairs."""
    if not sessions:
        raise ValueError("at least one session is required")
    total = Fraction(0)
    for hi, lo in sessions:
        hi_f, lo_f = seconds(hi), seconds(lo)
        if hi_f < lo_f:
            raise ValueError(f"session ({hi}, {lo}) ends before it starts")
        total += hi_f - lo_f
    return total / len(sessions)


def nyquist_min_rate(period: object) -> Fraction:
    """Lowest sampling rate that keeps periodic information restorable."""
    T = seconds(period)
    if T <= 0:
        raise ValueError("period must be positive")
    return 1 / (2 * T)


def nyquist_restorable(rate: object, period: object) -> bool:
    """Boundary-inclusive: exactly 1/(2T) still restores."""
    r = seconds(rate)
    if r <= 0:
        raise ValueError("rate must be positive")
    return r >= nyquist_min_rate(period)


def metcalfe_value(nodes: int) -> int:
    """Value of a network with n nodes: n squared."""
    n = int(nodes)
    if n < 0:
        raise ValueError("node count must be nonnegative")
    return n * n


@dataclass(frozen=True)
class NetworkValueResult:
    nodes: int
    metcalfe: int
    scope_times_coverage: object
    equal: bool


def network_value_check(model: InformationModel, nodes: int | None = None) -> NetworkValueResult:
    """Compare n² against max scope × max coverage on a network model whose
    node-count measures are assigned."""
    n = len(model.carriers) if nodes is None else int(nodes)
    product = scope(model) * coverage(model)
    value = metcalfe_value(n)
    return NetworkValueResult(n, value, product, value == product)


@dataclass(frozen=True)
class LinearSystemSpec:
    """Discrete linear stochastic system for the Kalman recursion.

    x(k) = A·x(k−1) + B·u(k) + w(k) with motion noise covariance Q;
    z(k) = H·x(k) + v(k) with measurement noise covariance R.
    """

    A: np.ndarray
    H: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    x0: np.ndarray
    P0: np.ndarray
    B: np.ndarray | None = None

    def __init__(self, A, H, Q, R, x0, P0, B=None):
        object.__setattr__(self, "A", np.asarray(A, dtype=float))
        object.__setattr__(self, "H", np.asarray(H, dtype=float))
        object.__setattr__(self, "Q", np.asarray(Q, dtype=float))
        object.__setattr__(self, "R", np.asarray(R, dtype=float))
        object.__setattr__(self, "x0", np.asarray(x0, dtype=float).reshape(-1))
        object.__setattr__(self, "P0", np.asarray(P0, dtype=float))
        object.__setattr__(
            self, "B", None if B is None else np.asarray(B, dtype=float)
        )
        self._check()

    def _check(self) -> None:
        n = self.A.shape[0]
        if self.A.shape != (n, n):
            raise ValueError("A must be square")
        if self.x0.shape != (n,):
            raise ValueError("x0 must have the state dimension")
        if self.H.ndim != 2 or self.H.shape[1] != n:
            raise ValueError("H must be p×n")
        p = self.H.shape[0]
        for name, mat, dim in (("Q", self.Q, n), ("R", self.R, p), ("P0", self.P0, n)):
            if mat.shape != (dim, dim):
                raise ValueError(f"{name} must be {dim}×{dim}")
            if not np.allclose(mat, mat.T, atol=1e-10):
                raise ValueError(f"{name} must be symmetric")
        if np.min(np.linalg.eigvalsh(self.Q)) < -1e-10:
            raise ValueError("Q must be positive semidefinite")
        if np.min(np.linalg.eigvalsh(self.P0)) < -1e-10:
            raise ValueError("P0 must be positive semidefinite")
        try:
            np.linalg.cholesky(self.R)
        except np.linalg.LinAlgError as exc:
            raise ValueError("R must be positive definite") from exc
        if self.B is not None and (self.B.ndim != 2 or self.B.shape[0] != n):
            raise ValueError("B must be n×m")

    @property
    def state_dim(self) -> int:
        return self.A.shape[0]

    @property
    def measurement_dim(self) -> int:
        return self.H.shape[0]


@dataclass(frozen=True)
class KalmanStep:
    x: np.ndarray
    P: np.ndarray
    gain: np.ndarray


def _spd_solve(S: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve S·X = rhs for symmetric positive definite S via Cholesky."""
    try:
        L = np.linalg.cholesky(S)
    except np.linalg.LinAlgError as exc:
        raise SingularInnovationError(
            "innovation covariance is not positive definite"
        ) from exc
    return np.linalg.solve(L.T, np.linalg.solve(L, rhs))


def kalman_filter(
    system: LinearSystemSpec,
    measurements: Sequence,
    inputs: Sequence | None = None,
) -> list[KalmanStep]:
    """Run the five-formula Kalman recursion over a measurement sequence.

    Per step: predict the state from the previous optimum, propagate the
    covariance through the dynamics plus motion noise, form the gain from the
    innovation covariance (solved as an SPD system, never inverted
    explicitly), then update state and covariance. The updated covariance is
    re-symmetrised to keep it positive semidefinite under roundoff.
    """
    z = np.atleast_2d(np.asarray(measurements, dtype=float))
    if z.shape[1] != system.measurement_dim:
        raise ValueError("measurement rows must match the measurement dimension")
    steps = z.shape[0]
    if steps < 1:
        raise ValueError("at least one measurement is required")
    if inputs is not None:
        u = np.atleast_2d(np.asarray(inputs, dtype=float))
        if system.B is None:
            raise ValueError("inputs supplied but the system has no input matrix")
        if u.shape != (steps, system.B.shape[1]):
            raise ValueError("inputs must be one row per step, matching B's columns")
    elif system.B is not None:
        raise ValueError("system has an input matrix but no inputs were supplied")

    identity = np.eye(system.state_dim)
    x = system.x0.copy()
    P = system.P0.copy()
    out: list[KalmanStep] = []
    for k in range(steps):
        x_pred = system.A @ x
        if system.B is not None:
            x_pred = x_pred + system.B @ u[k]
        P_pred = system.A @ P @ system.A.T + system.Q
        S = system.H @ P_pred @ system.H.T + system.R
        gain = _spd_solve(S, system.H @ P_pred).T
        x = x_pred + gain @ (z[k] - system.H @ x_pred)
        P = (identity - gain @ system.H) @ P_pred
        P = (P + P.T) / 2
        out.append(KalmanStep(x.copy(), P.copy(), gain.copy()))
    return out


def _bisection_depths(n: int) -> list[int]:
    """Comparison count per slot for binary search over n ordered slots."""
    depths = [0] * n

    def walk(lo: int, hi: int, depth: int) -> None:
        if lo > hi:
            return
        mid = (lo + hi) // 2
        depths[mid] = depth
        walk(lo, mid - 1, depth + 1)
        walk(mid + 1, hi, depth + 1)

    walk(0, n - 1, 1)
    return depths


def bisection_average_depth(n: int) -> Fraction:
    """Average comparisons of a successful binary search, any n ≥ 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(sum(_bisection_depths(n)), n)


def asl(algorithm: str, n: int, probabilities: Sequence | None = None) -> Fraction:
    """Expected comparisons to find an item among n, uniform by default.

    Sequential search gives (n+1)/2. Bisection uses the perfect-tree closed
    form ((n+1)/n)·log₂(n+1) − 1, which is exact only when n = 2^h − 1; other
    n are rejected — use `bisection_average_depth` for the general average.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if algorithm == "sequential":
        costs = range(1, n + 1)
    elif algorithm == "bisection":
        if n & (n + 1) != 0:
            raise ValueError(
                "closed-form bisection ASL needs n = 2^h - 1; "
                "use bisection_average_depth for other n"
            )
        if probabilities is None:
            height = (n + 1).bit_length() - 1
            return Fraction(n + 1, n) * height - 1
        costs = _bisection_depths(n)
    else:
        raise ValueError(f"unknown search algorithm {algorithm!r}")
    if probabilities is None:
        return sum((Fraction(c, n) for c in costs), Fraction(0))
    probs = [Fraction(p) if not isinstance(p, float) else p for p in probabilities]
    if len(probs) != n:
        raise ValueError("need one probability per item")
    return sum(p * c for p, c in zip(probs, costs))


@dataclass(frozen=True)
class SearchSetup:
    """A minimum-mismatch lookup over candidate models.

    `order_keys`, when given, define the total order the bisection tree is
    built over; sequential search just scans in candidate order.
    """

    candidates: tuple
    target: InformationModel
    spec: DistanceSpec = DistanceSpec()
    threshold: object = 0
    algorithm: str = "sequential"
    order_keys: tuple | None = None

    def __init__(
        self,
        candidates,
        target,
        spec: DistanceSpec = DistanceSpec(),
        threshold=0,
        algorithm: str = "sequential",
        order_keys=None,
    ):
        object.__setattr__(self, "candidates", tuple(candidates))
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "threshold", threshold)
        object.__setattr__(self, "algorithm", algorithm)
        object.__setattr__(
            self, "order_keys", None if order_keys is None else tuple(order_keys)
        )
        if not self.candidates:
            raise SearchError("candidate list is empty")
        if self.algorithm not in ("sequential", "bisection"):
            raise SearchError(f"unknown search algorithm {self.algorithm!r}")
        if self.order_keys is not None and len(self.order_keys) != len(self.candidates):
            raise SearchError("need one order key per candidate")


@dataclass(frozen=True)
class SearchResult:
    index: int
    comparisons: int
    mismatch: object


def _visit_order(setup: SearchSetup) -> list[int]:
    n = len(setup.candidates)
    if setup.algorithm == "sequential":
        return list(range(n))
    order = list(range(n))
    if setup.order_keys is not None:
        order.sort(key=lambda i: setup.order_keys[i])
    # level-order walk of the binary search tree over the sorted candidates
    out: list[int] = []
    queue: deque[tuple[int, int]] = deque([(0, n - 1)])
    while queue:
        lo, hi = queue.popleft()
        if lo > hi:
            continue
        mid = (lo + hi) // 2
        out.append(order[mid])
        queue.append((lo, mid - 1))
        queue.append((mid + 1, hi))
    return out


def search_min_mismatch(setup: SearchSetup) -> SearchResult:
    """Find the candidate with the least mismatch against the target.

    Stops early as soon as a candidate's mismatch falls to the threshold;
    otherwise every candidate must be compared (the exhaustive case), and the
    lowest-index minimum wins ties.
    """
    best_index = -1
    best_value = None
    comparisons = 0
    for i in _visit_order(setup):
        value = mismatch(setup.candidates[i], setup.target, setup.spec)
        comparisons += 1
        if value <= setup.threshold:
            return SearchResult(i, comparisons, value)
        if best_value is None or value < best_value or (value == best_value and i < best_index):
            best_index, best_value = i, value
    return SearchResult(best_index, comparisons, best_value)

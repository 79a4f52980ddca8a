"""The eleven information metrics over validated models.

Volume, scope, coverage and granularity read σ-measures off the model (or an
override passed by the caller); delay, duration and sampling rate are exact
time arithmetic; variety and aggregation count over user-supplied relations;
distortion and mismatch are distances in a configurable distance space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from typing import Sequence

from .errors import (
    DistanceError,
    EmptyStateError,
    GapError,
    MissingCopiesError,
    MissingMeasureError,
    PartialRelationError,
)
from .model import (
    InformationModel,
    MeasureAssignment,
    decompose_atomic,
    require_valid,
    value_key,
)
from .timeset import TimeSet, seconds


@dataclass(frozen=True)
class EquivalenceRelation:
    """A total labelling of state entries; equal labels mean one class."""

    labels: dict

    def __post_init__(self):
        object.__setattr__(self, "labels", {int(k): v for k, v in self.labels.items()})

    def label_of(self, index: int):
        return self.labels[index]


@dataclass(frozen=True)
class RelationSet:
    """Labelled directed edges between state entries, by index."""

    edges: tuple

    def __init__(self, edges):
        object.__setattr__(
            self, "edges", tuple((int(a), int(b), lab) for a, b, lab in edges)
        )


DISTANCE_KINDS = ("discrete", "L1", "L2", "Linf")


@dataclass(frozen=True)
class DistanceSpec:
    """Distance kind plus per-component weights for the six model parts
    (noumena, occurrence, states, carriers, reflection time, reflections)."""

    kind: str = "L2"
    weights: tuple = (1, 1, 1, 1, 1, 1)

    def __post_init__(self):
        if self.kind not in DISTANCE_KINDS:
            raise DistanceError(f"unknown distance kind {self.kind!r}")
        w = tuple(self.weights)
        if len(w) != 6 or any(x < 0 for x in w) or not any(w):
            raise DistanceError("weights must be six nonnegative values, not all zero")
        object.__setattr__(self, "weights", w)


def _exact_sum(values):
    if all(isinstance(v, (Integral, Fraction)) for v in values):
        return sum(values, Fraction(0) if any(isinstance(v, Fraction) for v in values) else 0)
    return math.fsum(values)


def volume(model: InformationModel, measures: MeasureAssignment | None = None):
    """Sum of the σ-measures of the distinct reflection entries."""
    require_valid(model)
    table = (measures or model.measures).reflection
    missing = [i for i in range(len(model.reflections)) if i not in table]
    if missing:
        raise MissingMeasureError("reflection", missing)
    return _exact_sum([table[i] for i in range(len(model.reflections))])


def delay(model: InformationModel) -> Fraction:
    """sup of the reflection times minus sup of the occurrence times.

    The sign is kept: a carrier that finished reflecting before its noumenon
    finished occurring yields a negative delay, which `validate` flags as a
    warning rather than an error.
    """
    require_valid(model)
    return model.reflection_time.sup - model.occurrence.sup


def scope(model: InformationModel, measures: MeasureAssignment | None = None):
    """Sum of the σ-measures of the noumenon elements."""
    require_valid(model)
    table = (measures or model.measures).noumenon
    missing = [n for n in sorted(model.noumena) if n not in table]
    if missing:
        raise MissingMeasureError("noumenon", missing)
    return _exact_sum([table[n] for n in sorted(model.noumena)])


def granularity(model: InformationModel, measures: MeasureAssignment | None = None):
    """Average noumenon measure of the model's atoms (counting weights)."""
    table = (measures or model.measures).noumenon
    atoms = decompose_atomic(model)
    per_atom = []
    for atom in atoms:
        missing = [n for n in sorted(atom.state.subjects) if n not in table]
        if missing:
            raise MissingMeasureError("noumenon", missing)
        per_atom.append(_exact_sum([table[n] for n in sorted(atom.state.subjects)]))
    total = _exact_sum(per_atom)
    if isinstance(total, (Integral, Fraction)):
        return Fraction(total, len(per_atom))
    return total / len(per_atom)


def variety(model: InformationModel, relation: EquivalenceRelation) -> int:
    """Number of equivalence classes the relation induces on the states."""
    require_valid(model)
    missing = [i for i in range(len(model.states)) if i not in relation.labels]
    if missing:
        raise PartialRelationError(f"relation does not label states {missing}")
    return len({relation.labels[i] for i in range(len(model.states))})


def duration(model: InformationModel) -> Fraction:
    """sup minus inf of the occurrence times; gaps inside do not matter."""
    require_valid(model)
    return model.occurrence.sup - model.occurrence.inf


def sampling_rate(model: InformationModel, gaps: Sequence[tuple] | None = None) -> Fraction:
    """Number of occurrence gaps divided by their total length.

    When no gaps are passed, the maximal open gaps of the occurrence set
    within [inf, sup] are used. Exact arithmetic: k equal gaps of width w
    give exactly 1/w.
    """
    require_valid(model)
    occ = model.occurrence
    if gaps is None:
        resolved = occ.gaps()
    else:
        resolved = []
        for lo, hi in gaps:
            lo_f, hi_f = seconds(lo), seconds(hi)
            if hi_f <= lo_f:
                raise GapError(f"gap ({lo_f}, {hi_f}) has no width")
            if lo_f < occ.inf or hi_f > occ.sup:
                raise GapError(f"gap ({lo_f}, {hi_f}) leaves [inf, sup] of the occurrence set")
            if occ.overlaps_interval(lo_f, hi_f):
                raise GapError(f"gap ({lo_f}, {hi_f}) overlaps the occurrence times")
            for plo, phi in resolved:
                if plo < hi_f and lo_f < phi:
                    raise GapError(f"gap ({lo_f}, {hi_f}) overlaps gap ({plo}, {phi})")
            resolved.append((lo_f, hi_f))
    if not resolved:
        raise GapError("occurrence set has no gaps to sample over")
    total = sum((hi - lo for lo, hi in resolved), Fraction(0))
    return Fraction(len(resolved)) / total


def _distinct_state_keys(model: InformationModel) -> set:
    return {entry.key() for entry in model.states}


def _value_level_edges(model: InformationModel, rels: RelationSet) -> set:
    edges = set()
    for a, b, lab in rels.edges:
        if not (0 <= a < len(model.states) and 0 <= b < len(model.states)):
            raise PartialRelationError(f"edge ({a}, {b}, {lab!r}) references unknown states")
        edges.add((model.states[a].key(), model.states[b].key(), lab))
    return edges


def aggregation(model: InformationModel, rels: RelationSet) -> Fraction:
    """Distinct labelled relations per distinct state value."""
    require_valid(model)
    keys = _distinct_state_keys(model)
    if not keys:
        raise EmptyStateError("model has no states")
    return Fraction(len(_value_level_edges(model, rels)), len(keys))


def coverage(model: InformationModel, copies=None):
    """Weighted sum of carrier measures over the model and all its copies.

    The copy list is explicit and includes the model itself as one record;
    a model without a copy list has no defined coverage.
    """
    require_valid(model)
    records = copies if copies is not None else model.copies
    if records is None:
        raise MissingCopiesError("model carries no copy records")
    return _exact_sum([c.carrier_measure * c.weight for c in records])


def _value_distance(a, b, kind: str):
    ka, kb = value_key(a), value_key(b)
    if kind == "discrete":
        return 0 if ka == kb else 1
    if ka[0] != kb[0]:
        # values of different kinds are incomparable under the Lp metrics
        raise DistanceError(f"cannot compare {a!r} with {b!r}")
    if ka[0] == "sym":
        return 0 if ka == kb else 1  # symbols only carry the discrete metric
    if ka[0] == "num":
        return abs(a - b)
    if len(ka[1]) != len(kb[1]):
        raise DistanceError(f"vector dimensions differ: {len(ka[1])} vs {len(kb[1])}")
    diffs = [abs(x - y) for x, y in zip(ka[1], kb[1])]
    if kind == "L1":
        return _exact_sum(diffs)
    if kind == "Linf":
        return max(diffs, default=0)
    return math.sqrt(math.fsum(float(d) * float(d) for d in diffs))


def distortion(restored, truth, spec: DistanceSpec = DistanceSpec()):
    """Distance between a restored value and the true value."""
    return _value_distance(restored, truth, spec.kind)


def _combine_entry_distances(dists, kind: str):
    if kind == "discrete":
        return 0 if all(d == 0 for d in dists) else 1
    if kind == "L1":
        return _exact_sum(dists)
    if kind == "Linf":
        return max(dists, default=0)
    return math.sqrt(math.fsum(float(d) * float(d) for d in dists))


def _state_set_distance(left, right, kind: str):
    """Distance between two entry lists, on their values.

    Aligned lists (equal length, pairwise comparable values) get the product
    metric of the chosen kind; unalignable lists fall back to the discrete
    0/1 distance on whole-set equality, which sits outside the metric-axiom
    domain and is only meant as a coarse signal.
    """
    lkeys = [e.key() for e in left]
    rkeys = [e.key() for e in right]
    if lkeys == rkeys:
        return 0
    if len(left) != len(right):
        return 1
    try:
        dists = [_value_distance(a.value, b.value, kind) for a, b in zip(left, right)]
    except DistanceError:
        return 1
    return _combine_entry_distances(dists, kind)


def _timeset_distance(a: TimeSet, b: TimeSet) -> Fraction:
    return abs(a.sup - b.sup) + abs(a.inf - b.inf)


def mismatch(
    model: InformationModel,
    target: InformationModel,
    spec: DistanceSpec = DistanceSpec(),
):
    """Weighted distance between two models across their six components.

    Element sets compare 0/1, time sets compare by |sup−sup| + |inf−inf|,
    and the two entry lists compare by the chosen value metric.
    """
    require_valid(model)
    require_valid(target)
    w = spec.weights
    parts = [
        0 if model.noumena == target.noumena else 1,
        _timeset_distance(model.occurrence, target.occurrence),
        _state_set_distance(model.states, target.states, spec.kind),
        0 if model.carriers == target.carriers else 1,
        _timeset_distance(model.reflection_time, target.reflection_time),
        _state_set_distance(model.reflections, target.reflections, spec.kind),
    ]
    return _exact_sum([wi * pi for wi, pi in zip(w, parts)])


def metric_report(
    model: InformationModel,
    relation: EquivalenceRelation | None = None,
    relations: RelationSet | None = None,
    gaps: Sequence[tuple] | None = None,
    spec: DistanceSpec = DistanceSpec(),
    restored=None,
    truth=None,
    target: InformationModel | None = None,
) -> dict:
    """Compute every metric the supplied inputs allow, as one report dict.

    Metrics whose inputs are absent (or whose preconditions fail) appear with
    a "skipped" note instead of a value, so a report is always produced for a
    valid model.
    """
    require_valid(model)
    unit = model.measures.reflection_unit
    report: dict = {}

    def attempt(name, func, unit_label=""):
        try:
            report[name] = {"value": func(), "unit": unit_label}
        except (MissingMeasureError, MissingCopiesError, GapError, EmptyStateError) as exc:
            report[name] = {"skipped": str(exc)}

    attempt("volume", lambda: volume(model), unit)
    attempt("delay", lambda: delay(model), "s")
    attempt("scope", lambda: scope(model))
    attempt("granularity", lambda: granularity(model))
    attempt("duration", lambda: duration(model), "s")
    attempt("sampling_rate", lambda: sampling_rate(model, gaps), "1/s")
    attempt("coverage", lambda: coverage(model))
    if relation is not None:
        attempt("variety", lambda: variety(model, relation))
    else:
        report["variety"] = {"skipped": "no equivalence relation supplied"}
    if relations is not None:
        attempt("aggregation", lambda: aggregation(model, relations))
    else:
        report["aggregation"] = {"skipped": "no relation set supplied"}
    if restored is not None and truth is not None:
        report["distortion"] = {"value": distortion(restored, truth, spec), "unit": ""}
    else:
        report["distortion"] = {"skipped": "restored/truth values not supplied"}
    if target is not None:
        report["mismatch"] = {"value": mismatch(model, target, spec), "unit": ""}
    else:
        report["mismatch"] = {"skipped": "no target model supplied"}
    report["inputs"] = {
        "distance": {"kind": spec.kind, "weights": list(spec.weights)},
        "relation": None if relation is None else {str(k): v for k, v in relation.labels.items()},
        "relation_edges": None if relations is None else [list(e) for e in relations.edges],
    }
    return report

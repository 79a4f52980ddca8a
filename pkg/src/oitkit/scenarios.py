"""Built-in worked scenarios: the penguin picture, a three-hop relay chain,
a scalar filter run, and a four-node network. These back the shipped fixture
files and the `demo` command."""

from __future__ import annotations

from .model import (
    CopyRecord,
    InformationModel,
    MeasureAssignment,
    StateEntry,
)
from .timeset import TimeSet

MEGABYTE_BITS = 8 * 2**20  # storage convention: 1 MB = 2**20 bytes


def penguin_model() -> InformationModel:
    """Three penguins photographed with a 0.01 s shutter at t₀ = 0; the
    1 MB picture file lives on a laptop from t = 5 s to t = 3600 s."""
    shutter = TimeSet.span("0", "0.01")
    stored = TimeSet.span("5", "3600")
    penguins = ["penguin-1", "penguin-2", "penguin-3"]
    return InformationModel(
        noumena=penguins,
        carriers=["laptop"],
        occurrence=shutter,
        reflection_time=stored,
        states=[StateEntry(penguins, shutter, "penguins-under-blue-sky")],
        reflections=[StateEntry(["laptop"], stored, "picture-file-bytes")],
        mapping=[(0, 0)],
        measures=MeasureAssignment(
            noumenon={p: 1 for p in penguins},
            carrier={"laptop": 1},
            reflection={0: MEGABYTE_BITS},
            reflection_unit="bit",
        ),
        copies=[CopyRecord(1, 1)],
        enabled=True,
        label="penguin-picture",
    )


def chain3_models() -> list[InformationModel]:
    """Three relay hops with delays of exactly 1, 2 and 3 seconds."""
    times = [
        (TimeSet.span(0, 1), TimeSet.span(1, 2)),
        (TimeSet.span(1, 2), TimeSet.span(3, 4)),
        (TimeSet.span(3, 4), TimeSet.span(6, 7)),
    ]
    element = ["sensor", "uplink", "relay", "archive"]
    values_in = ["reading-low", "reading-high"]
    hop_values = [
        ["frame-low", "frame-high"],
        ["packet-low", "packet-high"],
        ["record-low", "record-high"],
    ]
    mappings = [[(0, 1), (1, 0)], [(0, 0), (1, 1)], [(0, 1), (1, 0)]]
    links = []
    entries = None
    for hop, ((occ, refl), values_out) in enumerate(zip(times, hop_values)):
        source, sink = element[hop], element[hop + 1]
        if entries is None:
            entries = [StateEntry([source], occ, v) for v in values_in]
        out_entries = [StateEntry([sink], refl, v) for v in values_out]
        links.append(
            InformationModel(
                noumena=[source],
                carriers=[sink],
                occurrence=occ,
                reflection_time=refl,
                states=entries,
                reflections=out_entries,
                mapping=mappings[hop],
                label=f"hop-{hop}",
            )
        )
        entries = out_entries
    return links


def kalman_scalar_scenario() -> dict:
    """Scalar random-walk filter with a static state: two measurements."""
    return {
        "A": [[1.0]],
        "H": [[1.0]],
        "Q": [[0.0]],
        "R": [[1.0]],
        "x0": [0.0],
        "P0": [[1.0]],
        "z": [[1.0], [3.0]],
    }


def network_model(nodes: int = 4) -> InformationModel:
    """A network whose noumenon and carrier are its own node set, measured
    by node count; scope and coverage then both max out at n."""
    names = [f"node-{i}" for i in range(nodes)]
    lifetime = TimeSet.span(0, 1000)
    states = [StateEntry([name], lifetime, f"status-{name}") for name in names]
    reflections = [StateEntry([name], lifetime, f"broadcast-{name}") for name in names]
    return InformationModel(
        noumena=names,
        carriers=names,
        occurrence=lifetime,
        reflection_time=lifetime,
        states=states,
        reflections=reflections,
        mapping=[(i, i) for i in range(nodes)],
        measures=MeasureAssignment(
            noumenon={name: 1 for name in names},
            carrier={name: 1 for name in names},
            reflection={i: 1 for i in range(nodes)},
        ),
        copies=[CopyRecord(nodes, 1)],
        label=f"network-{nodes}",
    )

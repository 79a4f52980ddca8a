"""oitkit: sextuple information models, their metrics, the classical
calculators attached to each metric, and physical information budgets."""

from .classical import (
    InvarianceResult,
    KalmanStep,
    LinearSystemSpec,
    NetworkValueResult,
    SearchResult,
    SearchSetup,
    aggregation_invariance_check,
    asl,
    bisection_average_depth,
    kalman_filter,
    metcalfe_value,
    mtbf_duration,
    network_value_check,
    nyquist_min_rate,
    nyquist_restorable,
    radar_max_range,
    rayleigh_granularity,
    search_min_mismatch,
    serial_chain_delay,
    shannon_min_volume,
    variety_invariance_check,
)
from .errors import (
    ChainMismatchError,
    DistanceError,
    EmptyStateError,
    GapError,
    InvalidModelError,
    MissingCopiesError,
    MissingMeasureError,
    NotRestorableError,
    OitError,
    OverlapError,
    PartialRelationError,
    SearchError,
    SingularInnovationError,
    UnknownIndexError,
)
from .metrics import (
    DistanceSpec,
    EquivalenceRelation,
    RelationSet,
    aggregation,
    coverage,
    delay,
    distortion,
    duration,
    granularity,
    metric_report,
    mismatch,
    sampling_rate,
    scope,
    variety,
    volume,
)
from .model import (
    AtomicInfo,
    CopyRecord,
    InformationModel,
    MeasureAssignment,
    StateEntry,
    ValidationReport,
    Violation,
    combine,
    compose_chain,
    decompose_atomic,
    is_restorable,
    make_atom,
    restore,
    validate,
)
from .physics import (
    CODATA,
    PAPER,
    CarrierSpec,
    PhysicalConstants,
    QuantumVolume,
    bits_per_kg,
    carrier_volume,
    min_bit_mass,
    profile,
    quantum_volume,
    qubits_per_kg_second,
    universe_info,
)
from .timeset import TimeSet, seconds, seconds_str

__version__ = "0.1.0"

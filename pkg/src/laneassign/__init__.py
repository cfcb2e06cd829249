"""Probabilistic path assignment for objects ahead of a moving host vehicle.

The package maps object detections onto the host's predicted path (a circular
arc from speed and yaw rate), propagates measurement uncertainty into a 1-D
path-offset Gaussian, and assigns each object to one of five path regions with
either a discrete Bayes filter or a scalar Kalman filter.  A harness generates
synthetic scenarios and evaluates both methods with ROC sweeps.
"""

from .continuous_filter import (
    ContinuousPathFilter,
    KalmanState,
    ProcessNoise,
    discretize_posterior,
    kf_init,
    kf_predict,
    kf_update,
)
from .discrete_filter import (
    EPSILON_MAX,
    DiscretePathFilter,
    TransitionMatrix,
    TransitionParams,
    build_transition_matrix,
    clamp_params,
)
from .estimator import (
    DEFAULT_P_MIN,
    Assignment,
    assign,
    map_index,
    mean_index,
    median_index,
)
from .geometry import (
    DEFAULT_MC_VARIANCES,
    STRAIGHT_YAW_THRESHOLD,
    GaussianScalar,
    GridSpec,
    HostState,
    InputDomainError,
    InputVector,
    McPointResult,
    ObjectMeasurement,
    SingularityError,
    TransformDiagnostics,
    hellinger_distance,
    jacobian_lateral_offset,
    lateral_path_offset,
    mc_validate,
    transform_to_path,
    write_mc_csv,
)
from .harness import (
    EPSILON_GRID,
    METHODS,
    ROC_CSV_COLUMNS,
    RUN_CSV_COLUMNS,
    SCENARIO_KINDS,
    SIGMA_NU_GRID,
    NoiseSpec,
    ObjectResult,
    PipelineConfig,
    RocPoint,
    ScenarioFormatError,
    ScenarioFrame,
    SynthSpec,
    TrackedObject,
    build_suite,
    compute_roc,
    frame_to_dict,
    generate_synthetic,
    load_scenario,
    parse_scenario,
    run_pipeline,
    sweep_parameters,
    write_roc_csv,
    write_run_csv,
    write_scenario,
)
from .likelihood import (
    HOST_PATH_INDEX,
    N_PATHS,
    PATH_LABELS,
    BoundarySet,
    BoundarySource,
    OccupancyDiagnostics,
    PathPosterior,
    extrapolate_boundaries,
    lane_occupancy,
    std_normal_cdf,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BoundarySet",
    "BoundarySource",
    "ContinuousPathFilter",
    "DEFAULT_MC_VARIANCES",
    "DEFAULT_P_MIN",
    "DiscretePathFilter",
    "EPSILON_GRID",
    "EPSILON_MAX",
    "GaussianScalar",
    "GridSpec",
    "HOST_PATH_INDEX",
    "HostState",
    "InputDomainError",
    "InputVector",
    "KalmanState",
    "METHODS",
    "McPointResult",
    "N_PATHS",
    "NoiseSpec",
    "ObjectMeasurement",
    "ObjectResult",
    "OccupancyDiagnostics",
    "PATH_LABELS",
    "PathPosterior",
    "PipelineConfig",
    "ProcessNoise",
    "ROC_CSV_COLUMNS",
    "RUN_CSV_COLUMNS",
    "RocPoint",
    "SCENARIO_KINDS",
    "SIGMA_NU_GRID",
    "STRAIGHT_YAW_THRESHOLD",
    "ScenarioFormatError",
    "ScenarioFrame",
    "SingularityError",
    "SynthSpec",
    "TrackedObject",
    "TransformDiagnostics",
    "TransitionMatrix",
    "TransitionParams",
    "assign",
    "build_suite",
    "build_transition_matrix",
    "clamp_params",
    "compute_roc",
    "discretize_posterior",
    "extrapolate_boundaries",
    "frame_to_dict",
    "generate_synthetic",
    "hellinger_distance",
    "jacobian_lateral_offset",
    "kf_init",
    "kf_predict",
    "kf_update",
    "lane_occupancy",
    "lateral_path_offset",
    "load_scenario",
    "map_index",
    "mc_validate",
    "mean_index",
    "median_index",
    "parse_scenario",
    "run_pipeline",
    "std_normal_cdf",
    "sweep_parameters",
    "transform_to_path",
    "write_mc_csv",
    "write_roc_csv",
    "write_run_csv",
    "write_scenario",
]

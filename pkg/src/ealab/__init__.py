"""Runtime experiments for one-parent evolutionary algorithms on OneMax
and frozen-noise distorted OneMax."""

from .algorithms import (
    AlgoState,
    ControllerParams,
    GenerationOutcome,
    OnePlusOne,
    RunResult,
    SaCommaReset,
    StaticComma,
    StaticPlus,
    run_generation,
    run_to_target,
    update_lambda,
)
from .bitstrings import (
    SearchPoint,
    hamming,
    nearest_int,
    onemax,
    random_stream,
    standard_bit_mutation,
    uniform_random_point,
    zeromax,
)
from .bounds import (
    HAMMING_THREE_FLOOR,
    CheckResult,
    EventStats,
    GamblersRuinParams,
    brute_force_absorption,
    clone_presence_lower_bound,
    clone_prob,
    consistency_checks,
    exact_no_clone_prob,
    gamblers_ruin_exact,
    gamblers_ruin_start_bound,
    generation_event_stats,
    monte_carlo_clone_stats,
    no_clone_lower_bound,
    prob_hamming_three,
)
from .experiments import (
    CSV_HEADER,
    ExperimentConfig,
    RunRecord,
    SummaryStats,
    SweepPoint,
    SweepResult,
    algorithm_label,
    default_p_grid,
    figure1_sweep,
    figure2_params,
    figure2_sweep,
    normalized_runtime,
    read_records_csv,
    render_csv,
    run_experiment,
    summarize,
    write_records_csv,
)
from .formulas import resolve_param
from .landscape import (
    DistortedOneMax,
    EvalCounter,
    OneMaxLandscape,
    TargetSpec,
    evaluate_onemax,
    target_reached,
)

__version__ = "0.1.0"

__all__ = [
    "AlgoState",
    "ControllerParams",
    "GenerationOutcome",
    "OnePlusOne",
    "RunResult",
    "SaCommaReset",
    "StaticComma",
    "StaticPlus",
    "run_generation",
    "run_to_target",
    "update_lambda",
    "SearchPoint",
    "hamming",
    "nearest_int",
    "onemax",
    "random_stream",
    "standard_bit_mutation",
    "uniform_random_point",
    "zeromax",
    "HAMMING_THREE_FLOOR",
    "CheckResult",
    "EventStats",
    "GamblersRuinParams",
    "brute_force_absorption",
    "clone_presence_lower_bound",
    "clone_prob",
    "consistency_checks",
    "exact_no_clone_prob",
    "gamblers_ruin_exact",
    "gamblers_ruin_start_bound",
    "generation_event_stats",
    "monte_carlo_clone_stats",
    "no_clone_lower_bound",
    "prob_hamming_three",
    "CSV_HEADER",
    "ExperimentConfig",
    "RunRecord",
    "SummaryStats",
    "SweepPoint",
    "SweepResult",
    "algorithm_label",
    "default_p_grid",
    "figure1_sweep",
    "figure2_params",
    "figure2_sweep",
    "normalized_runtime",
    "read_records_csv",
    "render_csv",
    "run_experiment",
    "summarize",
    "write_records_csv",
    "resolve_param",
    "DistortedOneMax",
    "EvalCounter",
    "OneMaxLandscape",
    "TargetSpec",
    "evaluate_onemax",
    "target_reached",
    "__version__",
]

"""Replicated fixed-target experiments, summaries, CSV records, sweeps.

A trial i of an experiment uses seed base_seed + i for both the algorithm
stream and the landscape noise key, so each replication runs on a fresh
frozen instance and the whole experiment is reproducible from one integer.
Records serialize to a fixed CSV schema that round-trips losslessly, which
keeps archived sweeps comparable across machines and worker counts.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

import numpy as np

from .algorithms import (
    ControllerParams,
    OnePlusOne,
    SaCommaReset,
    StaticComma,
    StaticPlus,
    run_to_target,
)
from .bitstrings import nearest_int
from .landscape import DistortedOneMax, TargetSpec

__all__ = [
    "ExperimentConfig",
    "RunRecord",
    "SummaryStats",
    "run_experiment",
    "summarize",
    "normalized_runtime",
    "algorithm_label",
    "CSV_HEADER",
    "render_csv",
    "write_records_csv",
    "read_records_csv",
    "figure2_params",
    "default_p_grid",
    "SweepPoint",
    "SweepResult",
    "figure1_sweep",
    "figure2_sweep",
]


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: an algorithm, a landscape family, and replication."""

    experiment_id: str
    algorithm: object
    n: int
    p: float
    d: float
    k_star: float
    budget: int
    replications: int
    base_seed: int
    parallelism: int = 1

    def __post_init__(self):
        if not self.experiment_id or any(c in self.experiment_id for c in ',"\n'):
            raise ValueError(f"experiment_id must be nonempty without commas or quotes, got {self.experiment_id!r}")
        if not isinstance(self.algorithm, (SaCommaReset, StaticComma, StaticPlus, OnePlusOne)):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "d", float(self.d))
        object.__setattr__(self, "k_star", float(self.k_star))
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"distortion probability must lie in [0, 1], got {self.p!r}")
        if self.d < 0:
            raise ValueError(f"distortion bonus must be nonnegative, got {self.d!r}")
        if not 0.0 <= self.k_star <= self.n:
            raise ValueError(f"k_star must lie in [0, n], got {self.k_star!r}")
        if not isinstance(self.budget, int) or self.budget < 1:
            raise ValueError(f"budget must be a positive integer, got {self.budget!r}")
        if not isinstance(self.replications, int) or self.replications < 1:
            raise ValueError(f"replications must be a positive integer, got {self.replications!r}")
        if not isinstance(self.base_seed, int):
            raise ValueError(f"base_seed must be an integer, got {self.base_seed!r}")
        if not isinstance(self.parallelism, int) or self.parallelism < 1:
            raise ValueError(f"parallelism must be a positive integer, got {self.parallelism!r}")


@dataclass(frozen=True)
class RunRecord:
    """One CSV row: the full parameterization plus the trial outcome.

    F, s and lambda_max are None for algorithms without a controller and
    serialize as empty fields.
    """

    experiment_id: str
    algorithm: str
    n: int
    p: float
    d: float
    k_star: float
    F: float | None
    s: float | None
    lambda_max: float | None
    seed: int
    evaluations: int
    censored: bool
    final_fitness: float


def algorithm_label(kind) -> str:
    if isinstance(kind, SaCommaReset):
        return "sa_comma_reset"
    if isinstance(kind, StaticComma):
        return f"static_comma_{kind.lam}"
    if isinstance(kind, StaticPlus):
        return f"static_plus_{kind.lam}"
    if isinstance(kind, OnePlusOne):
        return "one_plus_one"
    raise ValueError(f"unknown algorithm {kind!r}")


def _run_replication(config: ExperimentConfig, index: int) -> RunRecord:
    seed = config.base_seed + index
    landscape = DistortedOneMax(config.n, config.p, config.d, noise_key=seed)
    result = run_to_target(
        config.algorithm, landscape, TargetSpec(config.k_star), config.budget, seed
    )
    kind = config.algorithm
    if isinstance(kind, SaCommaReset):
        F, s, lambda_max = kind.controller.F, kind.controller.s, kind.controller.lambda_max
    else:
        F = s = lambda_max = None
    return RunRecord(
        experiment_id=config.experiment_id,
        algorithm=algorithm_label(kind),
        n=config.n,
        p=config.p,
        d=config.d,
        k_star=config.k_star,
        F=F,
        s=s,
        lambda_max=lambda_max,
        seed=seed,
        evaluations=result.evaluations,
        censored=result.censored,
        final_fitness=result.final_fitness,
    )


def run_experiment(config: ExperimentConfig) -> list:
    """All replications of one config, ordered by replication index.

    The record list is a pure function of the config: worker count changes
    wall time only, never a byte of output.
    """
    indices = range(config.replications)
    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            return list(pool.map(_run_replication, repeat(config), indices))
    return [_run_replication(config, i) for i in indices]


@dataclass(frozen=True)
class SummaryStats:
    """Location and spread of evaluation counts for one homogeneous group."""

    count: int
    censored_count: int
    mean: float
    median: float
    stddev: float
    normalized_mean: float | None
    normalized_median: float | None
    median_unreliable: bool


def normalized_runtime(evaluations: float, n: int, p: float) -> float:
    """evaluations * p / (n ln n), the scale on which the p sweep is flat."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n!r}")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"distortion probability must lie in (0, 1], got {p!r}")
    return evaluations * p / (n * math.log(n))


def summarize(records, budget: int | None = None) -> SummaryStats:
    """Summary of one group of records sharing n and p.

    When a budget is given, censored runs enter mean and median at exactly
    the budget value, and the median is flagged unreliable once censored
    runs are the majority.
    """
    records = list(records)
    if not records:
        raise ValueError("cannot summarize an empty record list")
    if len({r.n for r in records}) != 1 or len({r.p for r in records}) != 1:
        raise ValueError("summary group must share n and p")
    values = [
        float(budget) if (budget is not None and r.censored) else float(r.evaluations)
        for r in records
    ]
    count = len(values)
    censored_count = sum(1 for r in records if r.censored)
    mean = statistics.fmean(values)
    median = float(statistics.median(values))
    stddev = statistics.stdev(values) if count >= 2 else 0.0
    n, p = records[0].n, records[0].p
    if n >= 2 and 0.0 < p <= 1.0:
        scale = p / (n * math.log(n))
        normalized_mean = mean * scale
        normalized_median = median * scale
    else:
        normalized_mean = None
        normalized_median = None
    return SummaryStats(
        count=count,
        censored_count=censored_count,
        mean=mean,
        median=median,
        stddev=stddev,
        normalized_mean=normalized_mean,
        normalized_median=normalized_median,
        median_unreliable=censored_count > count / 2,
    )


CSV_HEADER = "experiment_id,algorithm,n,p,d,k_star,F,s,lambda_max,seed,evaluations,censored,final_fitness"


def _fmt(value) -> str:
    if value is None:
        return ""
    return format(float(value), ".10g")


def render_csv(records) -> str:
    """Records as CSV text with the fixed header, float fields at 10
    significant digits, booleans as 0/1, newline terminated rows."""
    lines = [CSV_HEADER]
    for r in records:
        lines.append(",".join([
            r.experiment_id,
            r.algorithm,
            str(r.n),
            _fmt(r.p),
            _fmt(r.d),
            _fmt(r.k_star),
            _fmt(r.F),
            _fmt(r.s),
            _fmt(r.lambda_max),
            str(r.seed),
            str(r.evaluations),
            "1" if r.censored else "0",
            _fmt(r.final_fitness),
        ]))
    return "\n".join(lines) + "\n"


def write_records_csv(records, path) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(render_csv(records))


def _parse_optional(field: str):
    return None if field == "" else float(field)


def read_records_csv(path) -> list:
    """Parse a records CSV back; the header must match the schema exactly."""
    with open(path, "r", newline="") as f:
        lines = f.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header in {path!r}")
    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 13:
            raise ValueError(f"line {line_no}: expected 13 fields, got {len(parts)}")
        if parts[11] not in ("0", "1"):
            raise ValueError(f"line {line_no}: censored flag must be 0 or 1, got {parts[11]!r}")
        records.append(RunRecord(
            experiment_id=parts[0],
            algorithm=parts[1],
            n=int(parts[2]),
            p=float(parts[3]),
            d=float(parts[4]),
            k_star=float(parts[5]),
            F=_parse_optional(parts[6]),
            s=_parse_optional(parts[7]),
            lambda_max=_parse_optional(parts[8]),
            seed=int(parts[9]),
            evaluations=int(parts[10]),
            censored=parts[11] == "1",
            final_fitness=float(parts[12]),
        ))
    return records


def figure2_params(n: int) -> tuple:
    """The coupled (lambda, p) pair: lambda = nearest_int(1.5 ln n) and
    p = (e/(e-1))^-lambda, the point where static comma selection sits
    right at its theoretical efficiency threshold."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n!r}")
    lam = nearest_int(1.5 * math.log(n))
    p = (math.e / (math.e - 1.0)) ** (-lam)
    return lam, p


def default_p_grid(n: int) -> list:
    """Twelve log-spaced p values from 4/(n ln n) up to 0.05."""
    low = 4.0 / (n * math.log(n))
    if low >= 0.05:
        raise ValueError(f"dimension {n} too small for the default grid")
    return [float(v) for v in np.geomspace(low, 0.05, 12)]


@dataclass(frozen=True)
class SweepPoint:
    """Summary of one grid cell of a sweep."""

    n: int
    p: float
    algorithm: str
    stats: SummaryStats


@dataclass(frozen=True)
class SweepResult:
    """All records of a sweep plus per-cell summaries in grid order.

    references holds (n, n ln n / p) guide values for the comparison
    sweep and stays empty for the p sweep.
    """

    records: list
    points: list
    references: list


def _sa_kind(n: int, F: float, s: float) -> SaCommaReset:
    return SaCommaReset(ControllerParams(F=F, s=s, lambda_max=n * math.log(n)))


def figure1_sweep(
    ns,
    p_grid=None,
    replications: int = 50,
    budget: int = 10_000_000,
    base_seed: int = 1,
    parallelism: int = 1,
    F: float = 1.5,
    s: float = 1.0,
) -> SweepResult:
    """Normalized runtime of the self-adjusting algorithm across p.

    For each dimension the distortion bonus is ln n, the target gap is
    n^0.4, and p runs over the given or default grid.  Seeds advance in
    blocks of `replications` per grid cell.
    """
    all_records = []
    points = []
    block = 0
    for n in ns:
        grid = default_p_grid(n) if p_grid is None else [float(p) for p in p_grid]
        for idx, p in enumerate(grid):
            config = ExperimentConfig(
                experiment_id=f"fig1-n{n}-p{idx}",
                algorithm=_sa_kind(n, F, s),
                n=n,
                p=p,
                d=math.log(n),
                k_star=n ** 0.4,
                budget=budget,
                replications=replications,
                base_seed=base_seed + block * replications,
                parallelism=parallelism,
            )
            records = run_experiment(config)
            all_records.extend(records)
            points.append(SweepPoint(n, p, "sa_comma_reset", summarize(records, budget)))
            block += 1
    return SweepResult(records=all_records, points=points, references=[])


def figure2_sweep(
    ns,
    replications: int = 50,
    budget: int = 1_000_000,
    base_seed: int = 1,
    parallelism: int = 1,
    F: float = 1.5,
    s: float = 1.0,
) -> SweepResult:
    """Static comma, static plus, and self-adjusting runs at coupled (lambda, p).

    Per dimension the static algorithms use lambda = nearest_int(1.5 ln n)
    and every algorithm faces p = (e/(e-1))^-lambda, d = ln n, target gap
    n^0.4.  The reference value n ln n / p accompanies each dimension.
    """
    all_records = []
    points = []
    references = []
    block = 0
    for n in ns:
        lam, p = figure2_params(n)
        references.append((n, n * math.log(n) / p))
        for kind in (StaticComma(lam), StaticPlus(lam), _sa_kind(n, F, s)):
            label = algorithm_label(kind)
            config = ExperimentConfig(
                experiment_id=f"fig2-n{n}-{label}",
                algorithm=kind,
                n=n,
                p=p,
                d=math.log(n),
                k_star=n ** 0.4,
                budget=budget,
                replications=replications,
                base_seed=base_seed + block * replications,
                parallelism=parallelism,
            )
            records = run_experiment(config)
            all_records.extend(records)
            points.append(SweepPoint(n, p, label, summarize(records, budget)))
            block += 1
    return SweepResult(records=all_records, points=points, references=references)

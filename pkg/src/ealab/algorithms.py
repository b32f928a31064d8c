"""Mutation-only evolutionary algorithms with one parent.

Four variants share one generation loop:

* self-adjusting (1,lambda) with a success-based multiplicative update
  and a reset of lambda to 1 when a failure occurs at the cap,
* static (1,lambda) (comma selection: the best offspring always replaces
  the parent, ties between offspring broken uniformly at random),
* static (1+lambda) (plus selection: the best offspring replaces the
  parent only if it is at least as fit),
* the (1+1)-EA as the lambda = 1 special case of plus selection.

Random draw order per generation is part of the reproducibility contract:
first one batched Binomial(n, 1/n) draw of all m flip counts, then one
batched draw of all flipped positions, then per offspring a full redraw of
its positions whenever the batch produced duplicates, and finally a single
uniform index draw if and only if more than one offspring ties for best.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitstrings import SearchPoint, flip_mask, nearest_int, random_stream, uniform_random_point
from .landscape import TargetSpec

__all__ = [
    "ControllerParams",
    "SaCommaReset",
    "StaticComma",
    "StaticPlus",
    "OnePlusOne",
    "update_lambda",
    "AlgoState",
    "GenerationOutcome",
    "run_generation",
    "RunResult",
    "run_to_target",
]


@dataclass(frozen=True)
class ControllerParams:
    """Parameters of the success-based lambda controller.

    On success lambda shrinks to max(lambda / F, 1); on failure it grows by
    the factor F^(1/s), capped at lambda_max.  A failure while sitting
    exactly at the cap resets lambda to 1.  With s = 1 this is the
    one-fifth-style rule in which one success pays for one failure.
    """

    F: float
    s: float
    lambda_max: float
    growth: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.F > 1.0:
            raise ValueError(f"update strength F must exceed 1, got {self.F!r}")
        if not self.s > 0.0:
            raise ValueError(f"success ratio s must be positive, got {self.s!r}")
        if not self.lambda_max >= 1.0:
            raise ValueError(f"lambda_max must be at least 1, got {self.lambda_max!r}")
        object.__setattr__(self, "growth", self.F ** (1.0 / self.s))


@dataclass(frozen=True)
class SaCommaReset:
    """Self-adjusting (1,lambda) with reset-at-cap, starting from lambda = 1."""

    controller: ControllerParams


@dataclass(frozen=True)
class StaticComma:
    """(1,lambda) with a fixed offspring count."""

    lam: int

    def __post_init__(self):
        if not isinstance(self.lam, int) or self.lam < 1:
            raise ValueError(f"offspring count must be a positive integer, got {self.lam!r}")


@dataclass(frozen=True)
class StaticPlus:
    """(1+lambda) with a fixed offspring count."""

    lam: int

    def __post_init__(self):
        if not isinstance(self.lam, int) or self.lam < 1:
            raise ValueError(f"offspring count must be a positive integer, got {self.lam!r}")


@dataclass(frozen=True)
class OnePlusOne:
    """The (1+1)-EA."""


def update_lambda(lam: float, success: bool, params: ControllerParams) -> float:
    """One controller step; lam must already lie in [1, lambda_max].

    The reset branch fires only on exact equality with lambda_max, which is
    reliable because the clamp below assigns exactly that float value.
    """
    if not 1.0 <= lam <= params.lambda_max:
        raise ValueError(f"lambda {lam!r} outside [1, {params.lambda_max!r}]")
    if success:
        return max(lam / params.F, 1.0)
    if lam == params.lambda_max:
        return 1.0
    return min(lam * params.growth, params.lambda_max)


@dataclass(slots=True)
class AlgoState:
    """Mutable per-run state: current parent, its cached evaluation, lambda."""

    x: SearchPoint
    fitness: float
    om: int
    distorted: bool
    lam: float
    generation: int
    evaluations: int


@dataclass(frozen=True, slots=True)
class GenerationOutcome:
    """Bookkeeping for one generation.

    offspring is the realized offspring count m, success says whether the
    surviving fitness strictly improved, n_distorted counts distorted
    offspring among the m, and survivor_distorted is the distortion flag of
    the point that enters the next generation.
    """

    offspring: int
    success: bool
    n_distorted: int
    survivor_distorted: bool
    fitness: float


def run_generation(state: AlgoState, kind, landscape, rng) -> GenerationOutcome:
    """Run one generation in place on state.

    The landscape only needs value_of_word(word) -> (fitness, om, distorted).
    Offspring equal to the parent reuse the parent's cached evaluation but
    still count toward state.evaluations, matching the cost model in which
    every offspring is evaluated.
    """
    n = landscape.n
    if isinstance(kind, SaCommaReset):
        m = nearest_int(state.lam)
    elif isinstance(kind, OnePlusOne):
        m = 1
    else:
        m = kind.lam

    counts = rng.binomial(n, 1.0 / n, size=m)
    total = int(counts.sum())
    positions = rng.integers(0, n, size=total).tolist() if total else []

    parent_word = state.x.word
    parent_entry = (parent_word, state.om, state.distorted, state.fitness)

    best_fitness = -math.inf
    ties = []
    n_distorted = 0
    offset = 0
    for k in counts.tolist():
        if k == 0:
            entry = parent_entry
            fit = state.fitness
            dist = state.distorted
        else:
            mask = 0
            for pos in positions[offset:offset + k]:
                mask |= 1 << pos
            offset += k
            if mask.bit_count() != k:
                mask = flip_mask(rng, n, k)
            word = parent_word ^ mask
            fit, om, dist = landscape.value_of_word(word)
            entry = (word, om, dist, fit)
        if dist:
            n_distorted += 1
        if fit > best_fitness:
            best_fitness = fit
            ties = [entry]
        elif fit == best_fitness:
            ties.append(entry)

    if len(ties) > 1:
        chosen = ties[int(rng.integers(0, len(ties)))]
    else:
        chosen = ties[0]

    old_fitness = state.fitness
    if isinstance(kind, (StaticPlus, OnePlusOne)):
        accept = best_fitness >= old_fitness
    else:
        accept = True
    if accept:
        word, om, dist, fit = chosen
        if word != parent_word:
            state.x = SearchPoint(n, word)
        state.om = om
        state.distorted = dist
        state.fitness = fit

    success = state.fitness > old_fitness
    if isinstance(kind, SaCommaReset):
        state.lam = update_lambda(state.lam, success, kind.controller)
    state.generation += 1
    state.evaluations += m

    return GenerationOutcome(
        offspring=m,
        success=success,
        n_distorted=n_distorted,
        survivor_distorted=state.distorted,
        fitness=state.fitness,
    )


@dataclass(frozen=True)
class RunResult:
    """Outcome of one fixed-target run.

    evaluations counts the initial evaluation plus every offspring; the
    generation that crosses the budget is finished and counted in full, so
    evaluations may exceed the budget by less than one generation.  censored
    means the budget ran out before the target was reached (a run that hits
    the target on its final affordable generation is not censored).
    """

    seed: int
    evaluations: int
    generations: int
    hit_target: bool
    censored: bool
    final_fitness: float
    trajectory: list | None = None
    offspring_log: list | None = None


def _initial_lambda(kind) -> float:
    if isinstance(kind, SaCommaReset):
        return 1.0
    if isinstance(kind, OnePlusOne):
        return 1.0
    return float(kind.lam)


def run_to_target(
    kind,
    landscape,
    target: TargetSpec,
    budget: int,
    seed: int,
    log_trajectory: bool = False,
    log_offspring: bool = False,
) -> RunResult:
    """Run one algorithm from a fresh uniform point until target or budget.

    The trajectory, when requested, records one tuple per generation:
    (generation index, lambda used, surviving fitness, survivor distorted).
    """
    if not isinstance(budget, int) or budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    n = landscape.n
    if target.k_star > n:
        raise ValueError(f"k_star {target.k_star!r} exceeds dimension {n}")

    rng = random_stream(seed)
    x0 = uniform_random_point(n, rng)
    fit0, om0, dist0 = landscape.value_of_word(x0.word)
    state = AlgoState(
        x=x0,
        fitness=fit0,
        om=om0,
        distorted=dist0,
        lam=_initial_lambda(kind),
        generation=0,
        evaluations=1,
    )
    target_value = n - target.k_star
    trajectory = [] if log_trajectory else None
    offspring_log = [] if log_offspring else None

    while state.fitness < target_value and state.evaluations < budget:
        gen_index = state.generation
        lam_used = state.lam
        outcome = run_generation(state, kind, landscape, rng)
        if trajectory is not None:
            trajectory.append((gen_index, lam_used, state.fitness, state.distorted))
        if offspring_log is not None:
            offspring_log.append(outcome)

    hit = state.fitness >= target_value
    return RunResult(
        seed=seed,
        evaluations=state.evaluations,
        generations=state.generation,
        hit_target=hit,
        censored=not hit,
        final_fitness=state.fitness,
        trajectory=trajectory,
        offspring_log=offspring_log,
    )

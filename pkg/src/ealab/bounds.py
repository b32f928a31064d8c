"""Closed-form probability bounds and the oracles that check them.

Three families of quantities back the runtime arguments:

* clone probabilities: how likely standard bit mutation reproduces the
  parent, exactly and via two convenient lower bounds,
* the chance that a mutation jumps to Hamming distance exactly 3, with
  its dimension-independent floor,
* absorption probabilities of a biased +-1 random walk (gambler's ruin),
  both as a closed form and as a brute-force linear system.

Each closed form has an independent counterpart here (exact expression,
Monte-Carlo frequency, or linear solve) so the formulas are testable
against something that does not share their algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bitstrings import hamming, standard_bit_mutation, uniform_random_point

__all__ = [
    "clone_prob",
    "exact_no_clone_prob",
    "no_clone_lower_bound",
    "clone_presence_lower_bound",
    "prob_hamming_three",
    "HAMMING_THREE_FLOOR",
    "GamblersRuinParams",
    "gamblers_ruin_exact",
    "gamblers_ruin_start_bound",
    "brute_force_absorption",
    "monte_carlo_clone_stats",
    "EventStats",
    "generation_event_stats",
    "CheckResult",
    "consistency_checks",
]

# 1/(27e): floor of prob_hamming_three over all n >= 3
HAMMING_THREE_FLOOR = 1.0 / (27.0 * math.e)


def clone_prob(n: int) -> float:
    """Probability that one standard bit mutation flips nothing: (1 - 1/n)^n."""
    if n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return (1.0 - 1.0 / n) ** n


def exact_no_clone_prob(n: int, lam: int) -> float:
    """Probability that none of lam independent offspring is a clone."""
    if lam < 1:
        raise ValueError(f"offspring count must be positive, got {lam!r}")
    return (1.0 - clone_prob(n)) ** lam


def no_clone_lower_bound(lam: int) -> float:
    """(1 - 1/e)^lam, a dimension-free lower bound on exact_no_clone_prob.

    Valid because (1 - 1/n)^n <= 1/e for every n >= 1.
    """
    if lam < 1:
        raise ValueError(f"offspring count must be positive, got {lam!r}")
    return (1.0 - 1.0 / math.e) ** lam


def clone_presence_lower_bound(n: int, lam: int) -> float:
    """exp(-e*n / (lam*(n-1))), a lower bound on 1 - exact_no_clone_prob.

    Grows toward 1 as lam grows: large broods almost surely contain a
    clone, which is what makes comma selection behave elitist at large
    lambda.
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n!r}")
    if lam < 1:
        raise ValueError(f"offspring count must be positive, got {lam!r}")
    return math.exp(-math.e * n / (lam * (n - 1.0)))


def prob_hamming_three(n: int) -> float:
    """Probability that standard bit mutation flips exactly 3 bits.

    C(n,3) * n^-3 * (1 - 1/n)^(n-3).  Bounded below by 1/(27e) for every
    n >= 3, with equality of the binomial part at n = 3.
    """
    if n < 3:
        raise ValueError(f"dimension must be at least 3, got {n!r}")
    return math.comb(n, 3) * n ** -3 * (1.0 - 1.0 / n) ** (n - 3)


@dataclass(frozen=True)
class GamblersRuinParams:
    """A biased +-1 walk on {0, ..., beta+1}, both endpoints absorbing.

    Each step moves toward 0 with probability q and toward beta+1 with
    probability 1-q.  Only the drift-free-or-adverse regime q <= 1/2 is
    supported.  i is the start state.
    """

    q: float
    beta: int
    i: int

    def __post_init__(self):
        if not 0.0 < self.q <= 0.5:
            raise ValueError(f"step probability q must lie in (0, 0.5], got {self.q!r}")
        if not isinstance(self.beta, int) or self.beta < 1:
            raise ValueError(f"beta must be a positive integer, got {self.beta!r}")
        if not isinstance(self.i, int) or not 0 <= self.i <= self.beta + 1:
            raise ValueError(f"start state must lie in [0, beta+1], got {self.i!r}")


def gamblers_ruin_exact(q: float, beta: int, i: int) -> float:
    """Probability that the walk of GamblersRuinParams absorbs at 0.

    Closed form (1 - r^(beta+1-i)) / (1 - r^(beta+1)) with r = (1-q)/q,
    and the limit (beta+1-i)/(beta+1) at q = 1/2.
    """
    GamblersRuinParams(q, beta, i)
    if q == 0.5:
        return (beta + 1.0 - i) / (beta + 1.0)
    r = (1.0 - q) / q
    # + 0.0 turns the -0.0 produced at i = beta + 1 into a plain zero
    return (1.0 - r ** (beta + 1 - i)) / (1.0 - r ** (beta + 1)) + 0.0


def gamblers_ruin_start_bound(q: float, beta: int) -> float:
    """(1/q - 2) / ((1/q - 1)^(beta+1) - 1), the absorption probability
    from the state adjacent to the far end (i = beta), in closed form.

    Algebraically equal to gamblers_ruin_exact(q, beta, beta); kept as a
    separate expression so the identity can be checked rather than assumed.
    Limit 1/(beta+1) at q = 1/2.
    """
    GamblersRuinParams(q, beta, beta)
    if q == 0.5:
        return 1.0 / (beta + 1.0)
    inv = 1.0 / q
    return (inv - 2.0) / ((inv - 1.0) ** (beta + 1) - 1.0)


def brute_force_absorption(q: float, beta: int, i: int) -> float:
    """Absorption-at-0 probability via the first-step linear system.

    Solves the (beta x beta) tridiagonal system for the transient states
    1..beta with numpy, no shared algebra with the closed form.  Kept to
    small beta because it is an oracle, not a production path.
    """
    params = GamblersRuinParams(q, beta, i)
    if beta > 30:
        raise ValueError(f"brute force oracle is limited to beta <= 30, got {beta!r}")
    if i == 0:
        return 1.0
    if i == beta + 1:
        return 0.0
    size = params.beta
    a = np.zeros((size, size))
    b = np.zeros(size)
    for row in range(size):
        state = row + 1
        a[row, row] = 1.0
        if state - 1 == 0:
            b[row] = q
        else:
            a[row, row - 1] = -q
        if state + 1 <= beta:
            a[row, row + 1] = -(1.0 - q)
    v = np.linalg.solve(a, b)
    residual = float(np.max(np.abs(a @ v - b)))
    if residual > 1e-12:
        raise ArithmeticError(f"linear solve residual {residual} too large")
    return float(v[i - 1])


def monte_carlo_clone_stats(n: int, lam: int, trials: int, rng) -> tuple:
    """(no-clone frequency, clone frequency) over fresh random parents.

    Each trial draws a uniform parent and lam real mutations, stopping the
    inner loop at the first clone since only presence matters.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials!r}")
    if lam < 1:
        raise ValueError(f"offspring count must be positive, got {lam!r}")
    no_clone = 0
    for _ in range(trials):
        parent = uniform_random_point(n, rng)
        clone_seen = False
        for _ in range(lam):
            child = standard_bit_mutation(parent, rng)
            if hamming(child, parent) == 0:
                clone_seen = True
                break
        if not clone_seen:
            no_clone += 1
    freq = no_clone / trials
    return (freq, 1.0 - freq)


class EventStats(NamedTuple):
    """Counts over a run's offspring log."""

    distorted_generations: int
    clean_accepted: int


def generation_event_stats(result) -> EventStats:
    """How often distorted offspring appear and how often they lose anyway.

    distorted_generations counts generations with at least one distorted
    offspring; clean_accepted counts those among them in which the survivor
    entering the next generation is nevertheless clean.
    """
    if result.offspring_log is None:
        raise ValueError("run was made without log_offspring=True")
    distorted_generations = 0
    clean_accepted = 0
    for outcome in result.offspring_log:
        if outcome.n_distorted >= 1:
            distorted_generations += 1
            if not outcome.survivor_distorted:
                clean_accepted += 1
    return EventStats(distorted_generations, clean_accepted)


@dataclass(frozen=True)
class CheckResult:
    """One consistency check: a name, a verdict, and the numbers behind it."""

    name: str
    passed: bool
    detail: str


def _check(results, name, passed, detail):
    results.append(CheckResult(name, bool(passed), detail))


def consistency_checks(trials: int = 20000, seed: int = 7) -> list:
    """Cross-check every closed form against its independent oracle.

    Algebraic bounds are compared with exact expressions over a grid,
    Monte-Carlo frequencies must land within 4 binomial standard deviations
    of the exact values, and the random-walk closed form must agree with
    the linear-system solve to 1e-10.
    """
    from .bitstrings import random_stream

    results = []
    rng = random_stream(seed)

    for n in (10, 100, 1000):
        ok = True
        worst = math.inf
        for lam in range(1, 51):
            exact = exact_no_clone_prob(n, lam)
            margin = exact - no_clone_lower_bound(lam)
            ok = ok and margin >= 0.0
            worst = min(worst, margin)
        _check(results, f"no-clone bound below exact, n={n}",
               ok, f"worst margin {worst:.3e} over lambda 1..50")

    for n in (10, 100, 1000):
        ok = True
        worst = math.inf
        for lam in range(1, 51):
            exact = 1.0 - exact_no_clone_prob(n, lam)
            margin = exact - clone_presence_lower_bound(n, lam)
            ok = ok and margin >= 0.0
            worst = min(worst, margin)
        _check(results, f"clone-presence bound below exact, n={n}",
               ok, f"worst margin {worst:.3e} over lambda 1..50")

    floor_ok = True
    floor_worst = math.inf
    for n in (3, 4, 5, 10, 30, 100, 1000):
        margin = prob_hamming_three(n) - HAMMING_THREE_FLOOR
        floor_ok = floor_ok and margin >= 0.0
        floor_worst = min(floor_worst, margin)
    _check(results, "three-flip probability above 1/(27e)",
           floor_ok, f"worst margin {floor_worst:.3e}")

    for n in (10, 100, 1000):
        for lam in (1, 2, 5, 10, 20):
            exact = exact_no_clone_prob(n, lam)
            observed, _ = monte_carlo_clone_stats(n, lam, trials, rng)
            sigma = math.sqrt(exact * (1.0 - exact) / trials)
            dev = abs(observed - exact)
            _check(results, f"no-clone frequency, n={n} lambda={lam}",
                   dev <= 4.0 * sigma,
                   f"observed {observed:.5f}, exact {exact:.5f}, deviation {dev / sigma if sigma else 0.0:.2f} sigma")

    walk_ok = True
    walk_worst = 0.0
    for q in (0.05, 0.1, 0.25, 0.4, 0.5):
        for beta in range(1, 11):
            for i in range(0, beta + 2):
                diff = abs(gamblers_ruin_exact(q, beta, i) - brute_force_absorption(q, beta, i))
                walk_ok = walk_ok and diff <= 1e-10
                walk_worst = max(walk_worst, diff)
    _check(results, "walk closed form vs linear solve",
           walk_ok, f"worst difference {walk_worst:.3e} over the q, beta, i grid")

    ident_ok = True
    ident_worst = 0.0
    for q in (0.05, 0.1, 0.25, 0.4, 0.5):
        for beta in range(1, 11):
            diff = abs(gamblers_ruin_start_bound(q, beta) - gamblers_ruin_exact(q, beta, beta))
            ident_ok = ident_ok and diff <= 1e-12
            ident_worst = max(ident_worst, diff)
    _check(results, "start bound equals exact at i = beta",
           ident_ok, f"worst difference {ident_worst:.3e}")

    mono_ok = True
    for q in (0.05, 0.25, 0.5):
        for beta in (1, 3, 10):
            values = [gamblers_ruin_exact(q, beta, i) for i in range(0, beta + 2)]
            mono_ok = mono_ok and all(a >= b for a, b in zip(values, values[1:]))
            mono_ok = mono_ok and values[0] == 1.0 and values[-1] == 0.0
    _check(results, "absorption probability decreasing in start state",
           mono_ok, "boundary values 1 and 0, interior monotone")

    return results

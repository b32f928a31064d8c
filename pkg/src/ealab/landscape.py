"""Fitness landscapes: OneMax and distorted OneMax with frozen noise.

Distorted OneMax adds a constant bonus d to a random subset D of the
hypercube, each point belonging to D independently with probability p.
The subset is frozen: membership is a deterministic function of the point
and a 64-bit noise key, realized by hashing the point with a keyed
blake2b and comparing the resulting uniform variate against p.  Repeated
evaluations of the same point therefore always agree, and two landscapes
with the same (n, p, d, noise_key) are the same function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from hashlib import blake2b

from .bitstrings import SearchPoint

__all__ = [
    "EvalCounter",
    "TargetSpec",
    "target_reached",
    "OneMaxLandscape",
    "DistortedOneMax",
    "evaluate_onemax",
]

_MASK64 = (1 << 64) - 1
_INV_2_53 = 2.0 ** -53


class EvalCounter:
    """Counts fitness evaluations for one run."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"EvalCounter(count={self.count})"


@dataclass(frozen=True)
class TargetSpec:
    """Fixed-target criterion: stop once fitness reaches n - k_star."""

    k_star: float

    def __post_init__(self):
        if self.k_star < 0:
            raise ValueError(f"k_star must be nonnegative, got {self.k_star!r}")

    def target_value(self, n: int) -> float:
        return n - self.k_star


def target_reached(fitness: float, n: int, spec: TargetSpec) -> bool:
    """True once fitness >= n - k_star."""
    return fitness >= n - spec.k_star


@dataclass(frozen=True)
class OneMaxLandscape:
    """Plain OneMax: fitness is the number of one-bits."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")

    def is_distorted_word(self, word: int) -> bool:
        return False

    def is_distorted(self, x: SearchPoint) -> bool:
        if x.n != self.n:
            raise ValueError(f"dimension mismatch: point has n={x.n}, landscape n={self.n}")
        return False

    def value_of_word(self, word: int):
        """(fitness, onemax value, distorted flag) without dimension checks."""
        om = word.bit_count()
        return (float(om), om, False)

    def evaluate(self, x: SearchPoint, counter: EvalCounter) -> float:
        if x.n != self.n:
            raise ValueError(f"dimension mismatch: point has n={x.n}, landscape n={self.n}")
        counter.count += 1
        return float(x.word.bit_count())


@dataclass(frozen=True)
class DistortedOneMax:
    """OneMax plus a frozen random bonus d on a p-fraction of the cube.

    p <= 0 makes the landscape identical to OneMax on the same seed stream
    (no point is ever hashed), p >= 1 distorts everything.  noise_key is
    reduced to its low 64 bits.
    """

    n: int
    p: float
    d: float
    noise_key: int
    _key_bytes: bytes = field(init=False, repr=False, compare=False)
    _n_bytes: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"distortion probability must lie in [0, 1], got {self.p!r}")
        if self.d < 0:
            raise ValueError(f"distortion bonus must be nonnegative, got {self.d!r}")
        object.__setattr__(self, "_key_bytes", (self.noise_key & _MASK64).to_bytes(8, "little"))
        object.__setattr__(self, "_n_bytes", (self.n + 7) // 8)

    def is_distorted_word(self, word: int) -> bool:
        """Frozen membership test for the distorted set, no dimension check.

        The top 53 bits of an 8-byte keyed blake2b digest give a uniform
        variate on [0, 1) that is compared against p, so membership is
        deterministic per (point, key) and i.i.d. across points for all
        practical purposes.
        """
        p = self.p
        if p <= 0.0:
            return False
        if p >= 1.0:
            return True
        digest = blake2b(
            word.to_bytes(self._n_bytes, "little"),
            key=self._key_bytes,
            digest_size=8,
        ).digest()
        return (int.from_bytes(digest, "little") >> 11) * _INV_2_53 < p

    def is_distorted(self, x: SearchPoint) -> bool:
        if x.n != self.n:
            raise ValueError(f"dimension mismatch: point has n={x.n}, landscape n={self.n}")
        return self.is_distorted_word(x.word)

    def value_of_word(self, word: int):
        """(fitness, onemax value, distorted flag) without dimension checks."""
        om = word.bit_count()
        if self.is_distorted_word(word):
            return (om + self.d, om, True)
        return (float(om), om, False)

    def evaluate(self, x: SearchPoint, counter: EvalCounter) -> float:
        if x.n != self.n:
            raise ValueError(f"dimension mismatch: point has n={x.n}, landscape n={self.n}")
        counter.count += 1
        return self.value_of_word(x.word)[0]


def evaluate_onemax(x: SearchPoint, counter: EvalCounter) -> float:
    """OneMax fitness of x, counted against the given counter."""
    counter.count += 1
    return float(x.word.bit_count())

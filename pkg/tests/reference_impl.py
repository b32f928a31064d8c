"""Straightforward reference implementation used only by tests.

Mirrors the documented per-generation draw order exactly (that order is
part of the package contract) but computes everything else from scratch:
genotypes are plain bit lists, fitness is sum(), distortion hashes pack
bytes by hand, and selection scans lists.  No caching, no clone shortcut,
no packed-integer tricks.  Agreement with the optimized implementation is
therefore evidence about the machinery, not the randomness.
"""

import math
from hashlib import blake2b

import numpy as np


def _hash_distorted(bits, noise_key, p):
    if p <= 0.0:
        return False
    if p >= 1.0:
        return True
    n_bytes = (len(bits) + 7) // 8
    raw = bytearray(n_bytes)
    for i, b in enumerate(bits):
        if b:
            raw[i // 8] |= 1 << (i % 8)
    key = (noise_key & ((1 << 64) - 1)).to_bytes(8, "little")
    digest = blake2b(bytes(raw), key=key, digest_size=8).digest()
    return (int.from_bytes(digest, "little") >> 11) * 2.0**-53 < p


def _evaluate(bits, p, d, noise_key):
    om = sum(bits)
    if _hash_distorted(bits, noise_key, p):
        return (om + d, om, True)
    return (float(om), om, False)


def naive_run(
    algo,
    n,
    k_star,
    budget,
    seed,
    p=0.0,
    d=0.0,
    noise_key=0,
    lam_static=1,
    F=1.5,
    s=1.0,
    lambda_max=None,
):
    """algo in {'sa', 'comma', 'plus', 'one_plus_one'}; returns a dict with
    the trajectory [(gen, lambda_used, fitness, distorted)] and totals."""
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = [int(b) for b in rng.integers(0, 2, size=n, dtype=np.uint8)]
    fitness, om, distorted = _evaluate(bits, p, d, noise_key)
    lam = 1.0 if algo in ("sa", "one_plus_one") else float(lam_static)
    growth = F ** (1.0 / s)
    evaluations = 1
    generation = 0
    target = n - k_star
    trajectory = []

    while fitness < target and evaluations < budget:
        lam_used = lam
        if algo == "sa":
            m = math.floor(lam + 0.5)
        elif algo == "one_plus_one":
            m = 1
        else:
            m = lam_static
        counts = rng.binomial(n, 1.0 / n, size=m)
        total = int(counts.sum())
        positions = rng.integers(0, n, size=total).tolist() if total else []
        offset = 0
        children = []
        for k in counts.tolist():
            if k == 0:
                child = list(bits)
            else:
                pos = positions[offset:offset + k]
                offset += k
                if len(set(pos)) != k:
                    while True:
                        pos = rng.integers(0, n, size=k).tolist()
                        if len(set(pos)) == k:
                            break
                child = list(bits)
                for q in pos:
                    child[q] ^= 1
            children.append((child, _evaluate(child, p, d, noise_key)))
        best = max(v[1][0] for v in children)
        ties = [v for v in children if v[1][0] == best]
        if len(ties) > 1:
            chosen = ties[int(rng.integers(0, len(ties)))]
        else:
            chosen = ties[0]
        old_fitness = fitness
        accept = True
        if algo in ("plus", "one_plus_one"):
            accept = best >= old_fitness
        if accept:
            bits = chosen[0]
            fitness, om, distorted = chosen[1]
        success = fitness > old_fitness
        if algo == "sa":
            if success:
                lam = max(lam / F, 1.0)
            elif lam == lambda_max:
                lam = 1.0
            else:
                lam = min(lam * growth, lambda_max)
        generation += 1
        evaluations += m
        trajectory.append((generation - 1, lam_used, fitness, distorted))

    hit = fitness >= target
    return {
        "evaluations": evaluations,
        "generations": generation,
        "hit_target": hit,
        "censored": not hit,
        "final_fitness": fitness,
        "trajectory": trajectory,
    }

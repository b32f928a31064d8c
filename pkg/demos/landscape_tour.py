"""
A quick tour of the distorted landscape
=======================================

The fitness is the number of ones plus a bonus d on a frozen random
subset of the hypercube. Frozen means: membership is decided by a keyed
hash of the point, so the same point always answers the same way and no
table of 2^n bits is ever stored.
"""

import math

from ealab import DistortedOneMax, SearchPoint, onemax, random_stream, uniform_random_point

n = 30
land = DistortedOneMax(n, p=0.15, d=math.log(n), noise_key=7)

x = SearchPoint.from_string("1" * 20 + "0" * 10)
fitness, om, distorted = land.value_of_word(x.word)
print(f"point {x.to_string()}")
print(f"  ones={om} distorted={distorted} fitness={fitness:.3f}")

# ask again: the answer never changes
for _ in range(3):
    assert land.value_of_word(x.word) == (fitness, om, distorted)
print("  re-evaluated 3 times, identical each time")

# a different key is a different frozen instance
other = DistortedOneMax(n, p=0.15, d=math.log(n), noise_key=8)
rng = random_stream(1)
agree = sum(
    land.is_distorted_word(pt.word) == other.is_distorted_word(pt.word)
    for pt in (uniform_random_point(n, rng) for _ in range(2000))
)
print(f"keys 7 and 8 agree on {agree}/2000 random points (independent coin flips would give ~74%)")

# the empirical distortion rate tracks p
hits = sum(land.is_distorted_word(uniform_random_point(n, rng).word) for _ in range(20000))
print(f"distortion rate over 20000 points: {hits / 20000:.4f} (p = 0.15)")

# the bonus is what makes the landscape deceptive: a distorted point with
# fewer ones can outrank a clean point with more
count = 0
for _ in range(5000):
    pt = uniform_random_point(n, rng)
    f_pt, om_pt, dis_pt = land.value_of_word(pt.word)
    if dis_pt and om_pt < onemax(x) and f_pt > onemax(x):
        count += 1
print(f"{count}/5000 random points beat a clean {onemax(x)}-ones point on fewer ones")

"""Closed-form probabilities against brute force and simulation."""

from ealab import (
    brute_force_absorption,
    clone_presence_lower_bound,
    clone_prob,
    exact_no_clone_prob,
    gamblers_ruin_exact,
    monte_carlo_clone_stats,
    no_clone_lower_bound,
    prob_hamming_three,
    random_stream,
)

# standard bit mutation copies the parent with probability (1-1/n)^n,
# which is why comma selection behaves elitist once lambda is moderate
rng = random_stream(99)
print("n=100 brood clone statistics, 20000 trials per lambda")
print(f"{'lambda':>6} {'P(no clone)':>12} {'observed':>9} {'bound':>7}")
for lam in (1, 2, 5, 10, 20):
    no_clone, with_clone = monte_carlo_clone_stats(100, lam, 20000, rng)
    exact = exact_no_clone_prob(100, lam)
    print(f"{lam:>6} {exact:>12.5f} {no_clone:>9.5f} {no_clone_lower_bound(lam):>7.5f}")
print(f"single-offspring clone probability at n=100: {clone_prob(100):.6f}")
print(f"clone-presence lower bound at n=100, lambda=5: {clone_presence_lower_bound(100, 5):.5f}")
print(f"P(exactly 3 flips) at n=100: {prob_hamming_three(100):.5f} (floor 1/(27e) = {1/(27*2.718281828459045):.5f})")
print()

# the biased walk: probability of reaching 0 before beta+1 from state i
print("absorption at the good end, q=0.25, beta=5")
print(f"{'i':>3} {'closed form':>12} {'matrix solve':>13}")
for i in range(7):
    closed = gamblers_ruin_exact(0.25, 5, i)
    brute = brute_force_absorption(0.25, 5, i)
    print(f"{i:>3} {closed:>12.8f} {brute:>13.8f}")

"""Watch the offspring population size breathe.

On plain OneMax the success rule keeps lambda small early (successes are
cheap) and grows it near the optimum where improvements are rare. The
reset fires when lambda sits at the cap and still fails, which on a
distorted landscape is the escape hatch; here on clean OneMax it shows
up only occasionally, close to the target.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ealab import ControllerParams, DistortedOneMax, SaCommaReset, TargetSpec, run_to_target

n = 500
params = ControllerParams(F=1.5, s=1.0, lambda_max=n * math.log(n))
kind = SaCommaReset(params)
land = DistortedOneMax(n, p=0.0, d=0.0, noise_key=0)  # p=0 is plain OneMax

result = run_to_target(kind, land, TargetSpec(0), budget=10**7, seed=3, log_trajectory=True)
print(f"hit the optimum after {result.evaluations} evaluations, {result.generations} generations")

gens = [t[0] for t in result.trajectory]
lams = [t[1] for t in result.trajectory]
fits = [t[2] for t in result.trajectory]

resets = sum(1 for a, b in zip(lams, lams[1:]) if b == 1.0 and a > params.F)
print(f"lambda peaked at {max(lams):.1f} (cap {params.lambda_max:.1f}), {resets} resets")

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
ax1.plot(gens, fits, lw=0.8)
ax1.set_ylabel("fitness")
ax2.plot(gens, lams, lw=0.8, color="tab:orange")
ax2.set_yscale("log")
ax2.set_ylabel("lambda")
ax2.set_xlabel("generation")
fig.tight_layout()
fig.savefig("controller_dynamics.svg", metadata={"Date": None})
print("wrote controller_dynamics.svg")

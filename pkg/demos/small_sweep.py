"""A desk-scale run of both experiment families.

Tiny dimensions and few replications so the whole script finishes in
well under a minute; the shapes already show what the full-scale runs
show. Writes two CSVs and two SVG plots into the working directory.
"""

from ealab import figure1_sweep, figure2_sweep, write_records_csv
from ealab.plots import plot_comparison, plot_p_sweep

sweep = figure1_sweep([40, 60], replications=10, budget=10**6, base_seed=5)
write_records_csv(sweep.records, "small_p_sweep.csv")
plot_p_sweep(sweep.records, "small_p_sweep.svg")
print("p sweep, normalized median runtime T*p/(n ln n):")
for pt in sweep.points:
    flag = " (median at budget, unreliable)" if pt.stats.median_unreliable else ""
    print(f"  n={pt.n} p={pt.p:.5f}: {pt.stats.normalized_median:.3f}{flag}")

comparison = figure2_sweep([40, 60, 80], replications=10, budget=2 * 10**5, base_seed=5)
write_records_csv(comparison.records, "small_comparison.csv")
plot_comparison(comparison.records, "small_comparison.svg")
print("selection scheme comparison, median evaluations:")
for pt in comparison.points:
    print(f"  n={pt.n} {pt.algorithm}: {pt.stats.median:.0f} ({pt.stats.censored_count} censored)")
for n, ref in comparison.references:
    print(f"  n={n} reference n ln n / p = {ref:.0f}")
print("wrote small_p_sweep.csv/.svg and small_comparison.csv/.svg")

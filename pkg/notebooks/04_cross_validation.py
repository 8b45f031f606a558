# %% [markdown]
# # Cross-validation harness
#
# `cross_validate` runs every invariant over all partitions up to a total and
# a seeded random graph sample.  The report is deterministic.

# %%
from indcomplex import Budgets, cross_validate

report = cross_validate(Budgets(max_partition_total=7, max_random_n=8, samples=100, seed=1))
for check in report.checks:
    print(f"{check.name:<48} {check.instances:>5} {check.failures:>3}")
print("passed:", report.passed)

# %% [markdown]
# The MIS count bounds the chromatic number from above on every graph;
# numpy makes it easy to look at the gap across a sample.

# %%
import numpy as np

from indcomplex import chromatic_number, count_mis
from indcomplex.harness import random_graph_sample

graphs = random_graph_sample(300, (4, 10), seed=3)
gap = np.array([count_mis(g) - chromatic_number(g) for g in graphs])
print("min gap:", gap.min(), "mean gap:", gap.mean().round(2), "max gap:", gap.max())

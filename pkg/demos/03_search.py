"""Finding every circulant with vanishing reduced Euler characteristic.

Connection sets are grouped into multiplier classes first, so each class is
counted once.  The n=36 run takes around half a minute on one core.
"""

# %%
from circulant_chi.graph import construct, enumerate_classes
from circulant_chi.reference_sets import ZERO_CHI_SETS
from circulant_chi.search import cross_reference_table, isomorphism_witness, records_to_csv, run_search

print("classes for n=30:", len(list(enumerate_classes(30))))

# %% n = 30
run = run_search(30)
print(run.summary.to_record())
print(records_to_csv(run.records[:3]))

report = cross_reference_table(run.records, ZERO_CHI_SETS[30])
print("\n".join(report.lines()))

# %% Orders covered by the non-vanishing results have no zero classes
for n in (25, 27):
    print(n, len(run_search(n).records))

# %% n = 36 finds one class more than the published list
run36 = run_search(36)
report = cross_reference_table(run36.records, ZERO_CHI_SETS[36])
print("\n".join(report.lines()))

# The extra class is isomorphic to a listed one, but not by a multiplier.
extra = report.unlisted_classes[0]
g = construct(36, extra["representative"])
h = construct(36, extra["isomorphic_to_entry"])
print(isomorphism_witness(g, h))

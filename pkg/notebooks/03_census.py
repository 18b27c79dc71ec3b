# %% [markdown]
# # A census with cross-checks
#
# Each row is one isomorphism class. Every row carries `checks_passed`,
# which is true only when the traced invariants match the closed forms,
# the map is regular, and reflexibility agrees with the mirror test.

# %%
from paleymaps import census

records = census.run_census(29, 101)
print(len(records), "classes;", "all checks passed:", all(r.checks_passed for r in records))
print(census.dumps([r for r in records if (r.q, r.n) == (29, 14)]))

# %% [markdown]
# The brute-force count over generating pairs of AGL_1^(n)(q) gives the
# same number of classes.

# %%
for q, n in [(8, 7), (13, 6), (17, 8)]:
    print(census.verify_pair(q, n))

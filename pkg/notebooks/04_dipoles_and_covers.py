# %% [markdown]
# # Dipoles and central cyclic covers

# %%
from paleymaps import trace_invariants
from paleymaps.groupmap import (
    build_central_cover, dipole_count, dipole_map, dipole_solutions, quotient_check,
)
from paleymaps.paley import build_paley_map, paley_spec

for u in dipole_solutions(8):
    inv = trace_invariants(dipole_map(8, u), petrie=False)
    print(f"D_8({u}): type {inv.type}, genus {inv.genus}")
print("maps with k = 8:", dipole_count(8))

# %% [markdown]
# Covers of the torus map M_7(3). Vertex and face valencies grow by k, and
# collapsing the sheets recovers the base map.

# %%
base = paley_spec(7, 6, 3)
for k in (3, 5, 7, 9):
    cover = build_central_cover(base, k)
    inv = trace_invariants(cover, petrie=False)
    print(f"k={k}: type {inv.type}, genus {inv.genus}, quotient ok: "
          f"{quotient_check(cover, build_paley_map(base), k)}")

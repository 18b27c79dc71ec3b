# %% [markdown]
# # Generalised Paley maps
#
# For an admissible pair (q, n) the darts are pairs (v, a) with v in GF(q)
# and a in S. Rotation multiplies a by the chosen generator s; the edge
# involution sends (v, a) to (v + a, -a).

# %%
from paleymaps import closed_form_invariants, is_isomorphic, is_reflexible, mirror, paley_map, trace_invariants
from paleymaps.paley import enumerate_admissible, iso_classes

for q, n in [(4, 3), (8, 7), (9, 4), (13, 6), (29, 14)]:
    M = paley_map(q, n)
    traced = trace_invariants(M)
    print(f"q={q:2d} n={n:2d}  type {traced.type}  genus {traced.genus:3d}  petrie {traced.petrie_length}"
          f"  closed form agrees: {traced == closed_form_invariants(q, n)}")

# %% [markdown]
# Edmonds maps: the two embeddings of K8 are mirror images and not isomorphic.

# %%
E1, E2 = (paley_map(8, 7, spec.s) for spec in iso_classes(8, 7))
print("chiral:", not is_reflexible(E1), " mirror pair:", is_isomorphic(mirror(E1), E2))

# %% [markdown]
# Small-genus pairs are infinite in number, so a census needs a bound on q.

# %%
print([(p.q, p.n) for p in enumerate_admissible(40, 1)])

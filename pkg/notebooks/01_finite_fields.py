# %% [markdown]
# # Finite fields and the multiplier subgroup
#
# Elements of GF(p^e) are plain integers. The integer is the coefficient
# vector read in base p with the constant term as the lowest digit, so in
# GF(9) = Z_3[t]/(t^2 + 1) the element t (a square root of -1) is 3.

# %%
from paleymaps.ffield import build_field, frobenius_orbit, minimal_polynomial, subgroup_of_order

F = build_field(3, 2)
print("modulus", F.modulus, "generator", F.generator, F.coefficients(F.generator))

i = F.from_coefficients([0, 1])
print("i*i == -1:", F.mul(i, i) == F.neg(1))

# %% [markdown]
# The order-4 subgroup S of GF(9)* is {1, i, -1, -i}. Its two generators
# i and -i are swapped by the Frobenius map, so they share one minimal
# polynomial t^2 + 1.

# %%
S = subgroup_of_order(F, 4)
print("S =", sorted(S.elements), "generators", S.generators())
print("Frobenius orbit of i:", frobenius_orbit(F, i))
print("minimal polynomial:", minimal_polynomial(F, i))

# %% [markdown]
# The wrapper type is handy for interactive arithmetic.

# %%
x = F("1,1")            # 1 + i
print(x, x ** 2, x ** 8 == 1)

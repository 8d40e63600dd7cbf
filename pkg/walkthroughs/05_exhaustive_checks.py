# %% [markdown]
# # Exhaustive checks
#
# The oracle recomputes everything by brute force over all small words.

# %%
from sweepmap import verify_sweep_bijective, verify_theorems, verify_zeta

print(verify_sweep_bijective(3, 5))

# %%
print(verify_theorems(3, 4))

# %%
print(verify_zeta([(3, -2), (2, -3), (4, -6)]).to_json())

# %% [markdown]
# # The modular sweep map
#
# Letters live in Z/m.  Each position gets a level (prefix sum mod m); the
# sweep reads levels m-1, m-2, ..., 0 and, within a level, right to left.

# %%
from sweepmap import ModWord, inverse_presweep_trace, levels_mod, presweep, sweep_mod, unsweep_mod
from sweepmap.words import parse_word

w = parse_word("3113214", 5)
print("levels  ", tuple(levels_mod(w)))
print("presweep", presweep(w).pretty())
print("sweep   ", sweep_mod(w))

# %% [markdown]
# Blocks are written from level m-1 down to level 0.  Inverting the
# presweep means walking the blocks: start at the level of the whole word,
# take the first letter there, subtract it, repeat.

# %%
p = presweep(w)
res, steps = inverse_presweep_trace(p)
for s in steps:
    print(s.step, s.remaining.pretty().ljust(14), "level", s.level, "".join(map(str, s.recovered)) or "ε")

# %% [markdown]
# The sweep is a bijection, so every word has exactly one preimage.

# %%
u = sweep_mod(w)
print(unsweep_mod(u) == w)
print(unsweep_mod(ModWord(5, (4, 4, 0, 1))))

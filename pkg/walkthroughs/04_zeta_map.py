# %% [markdown]
# # Integer sweeps, Dyck words and zeta
#
# Integer words are inverted by lifting to a large enough modulus.

# %%
from sweepmap import DyckParams, IntWord, dyck_words, enumerate_lattice, lift, modulus_bound
from sweepmap import sweep_int, unsweep_int, zeta, zeta_direct

w = IntWord.of((3, -2, 3, -2, -2))
print(sweep_int(w), "| modulus", modulus_bound(w.content), "| lift", lift(w))
print(unsweep_int(sweep_int(w)))

# %% [markdown]
# zeta is the sweep conjugated by reversal and negation.  On D_{3,-5}
# it permutes the 7 Dyck words.

# %%
P = DyckParams(3, -5)
for d in dyck_words(P):
    z = zeta(d, P)
    print(str(d).ljust(26), "->", z, z == zeta_direct(d, P))

# %% [markdown]
# When a and -b are coprime the lifted word has a one-chain lattice.

# %%
for d in dyck_words(P):
    L = enumerate_lattice(lift(d))
    print(len(L), L.is_chain())

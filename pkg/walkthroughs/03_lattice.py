# %% [markdown]
# # The lattice of equitable partitions
#
# Order partitions by how far right their letters sit.  Covers come from
# moving a minimal balanced block-suffix one block to the right.

# %%
from sweepmap import covers, enumerate_lattice, join, meet, minimal_left_bbs
from sweepmap.words import parse_word

u = parse_word("1331421", 5)
L = enumerate_lattice(u)
bottom = L.nodes[L.bottom]
for s in minimal_left_bbs(bottom):
    print(s.format(bottom), "->", s.positions(bottom))
print([c.pretty() for c in covers(bottom)])

# %%
a, b = covers(bottom)
print("join", join(a, b).pretty(), " meet", meet(a, b).pretty())

# %% [markdown]
# Graphviz source for the Hasse diagram.  Pipe it through `dot -Tsvg`.

# %%
print(L.to_dot())

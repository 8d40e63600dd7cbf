# %% [markdown]
# # Equitable and successful partitions
#
# Place a letter x in block b and it fills columns b, b-1, ..., b-x+1
# (wrapping) of the balancing array.  A partition is equitable when every
# column holds its fair share.

# %%
from sweepmap import balancing_array, column_statuses, rightmost_trace, successful_from_trace
from sweepmap.words import parse_partition, parse_word

u = parse_word("1331421", 5)
left = parse_partition("13|31|4|2|1", 5)
print(balancing_array(left).render())
print([s.status for s in column_statuses(left)])

# %% [markdown]
# Starting with every letter in block 0, keep pushing a letter right into
# the first column that is short.  The result is the rightmost equitable
# partition.

# %%
p, moves = rightmost_trace(u)
for m in moves:
    print(f"column {m.column}: letter {m.index} -> block {m.target}")
print(p.pretty())

# %% [markdown]
# From any equitable partition, shifting the letters an inverse presweep
# could not reach one block right converges to the same place.

# %%
q, rounds = successful_from_trace(left)
for r in rounds:
    print(r.partition.pretty(), "visited", r.failure.visited, "shift", r.failure.positions)
print(q.pretty(), q == p)

# %% [markdown]
# ## Schedules
#
# A day of 5 hours and tasks of lengths 1,3,3,1,4,2,1.  Hour h is block 5-h.

# %%
from sweepmap import Schedule, inspector_check, schedule_all

for s in schedule_all(5, (1, 3, 3, 1, 4, 2, 1)):
    ok, trace = inspector_check(s)
    print(s.starts, s.load(), "successful" if ok else "inspector waits after", trace)

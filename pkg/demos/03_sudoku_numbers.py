# # Exact Sudoku numbers
#
# The Sudoku number is the size of the smallest clue set, colored with
# `chi(G)` colors, that extends to exactly one proper coloring.  Exact
# search enumerates clue sets by size, skipping any set that misses a vertex
# or edge the low-degree rules say must be clued.

# %%

import time

from sudoku_chroma import (
    complete,
    corona,
    corona_bounds,
    cycle,
    forced_sets,
    greedy_sudoku_coloring,
    line_graph,
    path,
    sudoku_number,
    wheel,
)

# %% [markdown]
# ## A few small graphs

# %%

graphs = {
    "K_4": complete(4),
    "C_5": cycle(5),
    "C_4 o K_1": corona(cycle(4), path(1)),
    "C_5 o K_1": corona(cycle(5), path(1)),
    "W_5 o K_1": corona(wheel(5), path(1)),
    "W_4 o K_2": corona(wheel(4), complete(2)),
}
for name, g in graphs.items():
    start = time.monotonic()
    w = sudoku_number(g)
    cert = w.certificate
    print(
        f"{name:10} order {g.order:2}  chi {cert.chi}  lower bound {cert.lower_bound:2}  "
        f"sn {w.sn:2}  clues {dict(w.clue_coloring.items())}  ({time.monotonic() - start:.2f}s)"
    )

# %% [markdown]
# ## Where the lower bound comes from
#
# With `k = chi(G)`, a vertex of degree at most `k - 2` always has two free
# colors, so it must be a clue.  An edge whose ends both have degree at most
# `k - 1` can be recolored, so one of its ends must be a clue.

# %%

f = forced_sets(corona(wheel(5), complete(2)))
print("must include:", sorted(f.must_include))
print("lower bound:", f.lower_bound)

f = forced_sets(corona(wheel(4), complete(2)))
print("edge constraints:", sorted(f.edge_constraints), "lower bound:", f.lower_bound)

# %% [markdown]
# ## Corona bounds and graphs too large for exact search
#
# For `chi(G) >= 3` and `H` of order at most `chi(G) - 2`, `sn(G o H)` lies
# between `n m` and `n m + sn(G)`.  Beyond the exact-search cap, a greedy
# clue-removal heuristic gives an upper bound.

# %%

print(corona_bounds(complete(5), complete(3)))

big = line_graph(corona(cycle(8), path(1)))
clue = greedy_sudoku_coloring(big)
print(f"L(C_8 o K_1): order {big.order}, forced lower bound {forced_sets(big).lower_bound}, greedy upper {len(clue)}")

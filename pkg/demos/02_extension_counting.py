# # Counting extensions of a partial coloring
#
# A partial coloring (the "clues") is uniquely extendable when exactly one
# proper coloring of the whole graph agrees with it.  The counter stops at a
# cap, so "is it unique?" only ever needs a cap of 2.

# %%

from sudoku_chroma import (
    PartialColoring,
    complete,
    corona,
    count_extensions,
    cycle,
    is_uce,
    is_uniquely_extendable,
    path,
    propagate,
    thm23_instance,
    unique_extension,
)

# %% [markdown]
# ## The empty coloring of a triangle
#
# Colorings are labelled: permuting the palette gives a different coloring,
# so `K_3` has 3! = 6 extensions of the empty coloring.

# %%

print(count_extensions(complete(3), PartialColoring.empty(3)))

# %% [markdown]
# ## Pendants alone do not pin down an odd cycle
#
# Coloring the five pendants of `C_5 o K_1` with 1, 2, 3, 1, 2 leaves six
# colorings of the rim.  With a cap of 2 the counter reports `>= 2`.

# %%

g = corona(cycle(5), path(1))
pendants = PartialColoring({5: 1, 6: 2, 7: 3, 8: 1, 9: 2}, 3)
print("exact count:", count_extensions(g, pendants))
print("capped count:", count_extensions(g, pendants, cap=2))

# %% [markdown]
# ## A five-clue Sudoku coloring of `W_4 o K_1`
#
# The hub pendant and every rim pendant are clued.  Nothing is forced by
# singleton lists alone, but probing each remaining color shows the hub
# cannot take color 3, after which everything follows.

# %%

inst = thm23_instance(4)
print("clues:", dict(inst.clue.items()))
print("unique:", is_uniquely_extendable(inst.graph, inst.clue))
print("hub uniquely colorable from the clues:", is_uce(inst.graph, inst.clue, 4))

plain, lists = propagate(inst.graph, inst.clue, probe=False)
print("singleton propagation leaves", len(lists), "open lists, hub list", sorted(lists[4]))

full, lists = propagate(inst.graph, inst.clue)
print("with probing:", "total" if full.is_total(inst.graph) else f"{len(lists)} open lists")
print("extension:", dict(unique_extension(inst.graph, inst.clue).items()))

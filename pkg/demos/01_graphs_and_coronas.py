# # Graphs, coronas and line graphs
#
# Every computation in the toolkit runs on an immutable `Graph` with dense
# vertex ids.  This walk-through builds the base families, combines them with
# the corona product and the line graph, and checks the size formulas.

# %%

from sudoku_chroma import (
    complete,
    corona,
    cycle,
    line_graph,
    parse_family,
    path,
    serialize_graph,
    wheel,
)

# %% [markdown]
# ## Base families
#
# A wheel `W_n` has its rim at ids `0..n-1` and the hub last, at id `n`.

# %%

w = wheel(4)
print("W_4:", w.order, "vertices,", w.size, "edges")
print("hub neighbours:", sorted(w.neighbors(4)))
print("labels:", w.labels)

# %% [markdown]
# ## Corona product
#
# `corona(G, H)` keeps `G`'s vertices first and then appends one copy of `H`
# per vertex of `G`, joined entirely to that vertex.  Copy `i` starts at id
# `n_G + i * n_H`.

# %%

g = corona(w, complete(2))
print("W_4 o K_2:", g.order, "vertices,", g.size, "edges")
for i in range(w.order):
    a, b = w.order + 2 * i, w.order + 2 * i + 1
    print(f"  copy at {g.labels[i]}: ids {a}, {b} -> labels {g.labels[a]}, {g.labels[b]}")

# The order and size follow n_G (1 + n_H) and m_G + n_G (m_H + n_H).
h = complete(3)
k = corona(complete(4), h)
assert k.order == 4 * (1 + 3)
assert k.size == 6 + 4 * (3 + 3)

# %% [markdown]
# ## Line graphs
#
# Vertex `i` of `line_graph(G)` is the `i`-th edge of `G.edges()`.

# %%

base = corona(cycle(3), path(1))
lg = line_graph(base)
for i, (u, v) in enumerate(base.edges()):
    print(f"  line vertex {i} = edge {lg.labels[i]}, degree {lg.degree(i)}")

# %% [markdown]
# ## Family expressions
#
# The same graphs can be described as text, which is what the `gen`
# subcommand accepts.

# %%

for expr in ["corona(cycle:5,complete:1)", "line(corona(cycle:3,complete:1))", "pendants(complete:4, 3)"]:
    g = parse_family(expr)
    print(f"{expr:40} order {g.order:3} size {g.size:3}")

print(serialize_graph(cycle(4)))

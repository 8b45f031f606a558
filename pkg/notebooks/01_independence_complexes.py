# %% [markdown]
# # Independence complexes
#
# The faces of the independence complex of a graph are its independent
# vertex sets, so the facets are the maximal independent sets.  This walk
# through builds a few small graphs and looks at their complexes.

# %%
from indcomplex import (
    complement,
    count_mis,
    delete_vertex,
    graph_from_edges,
    independence_complex,
    is_pure,
    link,
    maximal_independent_sets,
)

c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
c5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])

# %% [markdown]
# The 4-cycle has exactly two maximal independent sets, its diagonals.
# Enumeration runs Bron-Kerbosch on the complement graph.

# %%
print("complement of C4:", complement(c4).edges())
print("MIS of C4:", [sorted(s) for s in maximal_independent_sets(c4)])
print("MIS count of C5:", count_mis(c5))

# %% [markdown]
# Facets are stored largest first, then lexicographically.

# %%
d = independence_complex(p4)
print("facets of P4:", d.facet_lists(), "pure:", is_pure(d))
print("link of vertex 0:", link(d, [0]).facet_lists())
print("deletion of vertex 0:", delete_vertex(d, 0).facet_lists())

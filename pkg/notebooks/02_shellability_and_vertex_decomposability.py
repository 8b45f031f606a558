# %% [markdown]
# # Shellings and vertex decompositions
#
# `find_shelling` searches over *sets* of already placed facets: whether a
# facet can come next only depends on which facets precede it.  The result is
# a certificate that can be replayed with `is_shelling_order`.

# %%
from indcomplex import (
    find_shelling,
    graph_from_edges,
    independence_complex,
    is_shelling_order,
    make_complex,
    vertex_decomposition,
)

p4 = independence_complex(graph_from_edges(4, [(0, 1), (1, 2), (2, 3)]))
cert = find_shelling(p4)
print("order:", [sorted(p4.facets[i]) for i in cert.order])
print("witnesses (position, vertex):", cert.witnesses)
print("replay:", is_shelling_order(p4, cert.order))

# %% [markdown]
# Two disjoint edges cannot be shelled: the second facet always differs from
# the first in two vertices.

# %%
print(find_shelling(make_complex(4, [[0, 1], [2, 3]])))

# %% [markdown]
# Vertex decomposition: the tree records the shedding vertex at each node.

# %%
import json

print(json.dumps(vertex_decomposition(p4).to_dict(), indent=2))

# %% [markdown]
# # Complete multipartite graphs
#
# For a complete multipartite graph the maximal independent sets are exactly
# the parts, so every property reduces to arithmetic on the part sizes.
# Here the closed forms are laid side by side with the general checkers.

# %%
from indcomplex import (
    Partition,
    cohen_macaulay_verdict,
    complete_multipartite,
    enumerate_partitions,
    find_shelling,
    independence_complex,
    is_unmixed,
    is_vertex_decomposable,
    multipartite_is_cm,
    multipartite_is_shellable,
    multipartite_is_unmixed,
    multipartite_is_vd,
)

header = f"{'parts':<12}{'shell':>7}{'(gen)':>7}{'vd':>6}{'(gen)':>7}{'unmix':>7}{'(gen)':>7}{'cm':>6}  verdict"
print(header)
for p in enumerate_partitions(5):
    g = complete_multipartite(p)
    c = independence_complex(g)
    v = cohen_macaulay_verdict(g)
    print(
        f"{str(p):<12}{multipartite_is_shellable(p)!s:>7}{find_shelling(c) is not None!s:>7}"
        f"{multipartite_is_vd(p)!s:>6}{is_vertex_decomposable(c)!s:>7}"
        f"{multipartite_is_unmixed(p)!s:>7}{is_unmixed(g)!s:>7}{multipartite_is_cm(p)!s:>6}  {v.reason.value}"
    )

# %% [markdown]
# The canonical shelling puts the large part first; every singleton part is
# then witnessed by that first facet.

# %%
from indcomplex import canonical_shelling_multipartite

cert = canonical_shelling_multipartite(Partition((3, 1, 1)))
print(cert)

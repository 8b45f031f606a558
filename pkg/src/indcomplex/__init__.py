"""Independence complexes of finite simple graphs.

Brute-force decision procedures for shellability, vertex decomposability,
unmixedness and Cohen-Macaulayness, alongside closed-form answers for
complete multipartite graphs and a harness checking that the two agree.
"""
from .checkers import (
    CmReason,
    CmState,
    CmVerdict,
    ShellingCertificate,
    VDTree,
    canonical_shelling_multipartite,
    cohen_macaulay_verdict,
    find_shelling,
    is_shelling_order,
    is_unmixed,
    is_vertex_decomposable,
    minimal_vertex_covers,
    multipartite_is_cm,
    multipartite_is_shellable,
    multipartite_is_unmixed,
    multipartite_is_vd,
    shelling_witnesses,
    vertex_decomposition,
)
from .complex import (
    Complex,
    count_mis,
    delete_vertex,
    independence_complex,
    is_pure,
    is_simplex,
    link,
    make_complex,
    maximal_independent_sets,
)
from .errors import IndComplexError, InputError, ResourceLimitError
from .graph import (
    Graph,
    Partition,
    chromatic_number,
    complement,
    complete_graph,
    complete_multipartite,
    detect_multipartite,
    format_graph_text,
    graph_from_edges,
    parse_graph_text,
)
from .harness import (
    Budgets,
    ValidationReport,
    check_mis_chromatic_bound,
    cross_validate,
    enumerate_partitions,
    random_graph,
)

__version__ = "0.1.0"

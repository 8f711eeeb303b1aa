"""ramseyforge: clique statistics, clique packings, unit-distance embeddings,
and numeric bounds for diagonal distance Ramsey numbers."""

from ramseyforge.graphs import (
    CliqueSet,
    Graph,
    complement,
    complete_graph,
    complete_multipartite,
    contains_balanced_multipartite,
    count_cliques,
    empty_graph,
    enumerate_cliques,
    from_edges,
    induced_subgraph,
    read_edge_list,
    sample_gnp_half,
    write_edge_list,
)

__all__ = [
    "CliqueSet",
    "Graph",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "contains_balanced_multipartite",
    "count_cliques",
    "empty_graph",
    "enumerate_cliques",
    "from_edges",
    "induced_subgraph",
    "read_edge_list",
    "sample_gnp_half",
    "write_edge_list",
]

__version__ = "0.1.0"

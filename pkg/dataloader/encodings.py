import numpy as np

from .base import BaseGraph


def has_edge(g, u, v):
    """
    Binary search for v in the sorted neighbor slice of u.
    """

    lo, hi = g.offsets[u], g.offsets[u + 1]
    idx = lo + np.searchsorted(g.neighbors[lo:hi], v)
    return idx < hi and g.neighbors[idx] == v


def complement(g):
    """
    Edge complement on the same vertex set (and labels).
    Dense O(|V|^2) construction, meant for the DIMACS-sized instances.
    """

    n = g.num_vertices
    dense = np.ones((n, n), dtype=bool)
    us, vs = g.edges()
    dense[us, vs] = False
    dense[vs, us] = False
    us, vs = np.nonzero(np.triu(dense, k=1))
    return BaseGraph.from_edges(n, us, vs, g.labels)


def to_edge_list(g, header=True):
    """
    Serializes the graph as a plain edge list using the original vertex labels.
    The header records the vertex count and the id base, so isolated vertices survive a re-parse;
    it is left out when the labels are not a contiguous range.
    """

    us, vs = g.edges()
    lines = []
    base = int(g.labels[0]) if g.num_vertices else 0
    if header and np.array_equal(g.labels, np.arange(g.num_vertices) + base):
        lines.append("% vertices {} base {}".format(g.num_vertices, base))
    lines += ["{} {}".format(g.labels[u], g.labels[v]) for u, v in zip(us, vs)]
    return "\n".join(lines) + "\n"


def check_graph(g):
    """
    Asserts the CSR invariants: monotone offsets, sorted duplicate-free slices,
    no self-loops and symmetric adjacency.
    """

    assert g.offsets[0] == 0
    assert np.all(np.diff(g.offsets) >= 0)
    assert g.offsets[-1] == 2 * g.num_edges == len(g.neighbors)
    for v in range(g.num_vertices):
        nbrs = g.neighbors_of(v)
        assert np.all(np.diff(nbrs) > 0), "slice of {} not strictly ascending".format(v)
        assert not np.any(nbrs == v), "self-loop on {}".format(v)
    adj = g.adjacency()
    assert (adj != adj.T).nnz == 0, "adjacency is not symmetric"


def from_networkx(nx_graph):
    """
    Relabels a networkx graph to dense ids in sorted node order; labels keep the node ids
    when they are integers.
    """

    nodes = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = np.array([(index[u], index[v]) for u, v in nx_graph.edges()], dtype=np.int64).reshape(-1, 2)
    labels = nodes if all(isinstance(node, (int, np.integer)) for node in nodes) else None
    return BaseGraph.from_edges(len(nodes), edges[:, 0], edges[:, 1], labels)

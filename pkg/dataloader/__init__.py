from .base import BaseGraph, GraphFormatError
from .dimacs import DIMACSLoader, parse_dimacs
from .edgelist import EdgeListLoader, parse_edge_list
from .encodings import complement, from_networkx, has_edge, to_edge_list

LOADERS = {
    "edgelist": EdgeListLoader,
    "dimacs": DIMACSLoader,
}


def load_graph(path, fmt="edgelist", complemented=False):
    if fmt not in LOADERS:
        raise GraphFormatError("unknown graph format '{}'".format(fmt))
    g = LOADERS[fmt]().load(path)
    if complemented:
        g = complement(g)
    return g

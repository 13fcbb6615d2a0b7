import argparse
import os

import networkx as nx
import numpy as np

from dataloader.encodings import from_networkx, to_edge_list


def named_graphs():
    """
    Small instances with a known minimum vertex cover.
    """

    return {
        "p3": nx.path_graph(3),  # 1
        "c5": nx.cycle_graph(5),  # 3
        "k4": nx.complete_graph(4),  # 3
        "star6": nx.star_graph(5),  # 1
        "petersen": nx.petersen_graph(),  # 6
        "tree_2_4": nx.balanced_tree(2, 4),
    }


def gnp_complement(n, p, seed):
    """
    Edge complement of G(n, p). With p close to 1 it is sparse with a large minimum cover, a hard
    instance for the branch-and-reduce search.
    """

    return nx.complement(nx.gnp_random_graph(n, p, seed=seed))


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="datasets/", help="output directory")
    parser.add_argument("--n", type=int, nargs="+", default=[100, 150], help="G(n,p) sizes")
    parser.add_argument("--p", type=float, nargs="+", default=[0.9], help="G(n,p) edge probabilities")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not os.path.exists(args.out):
        os.makedirs(args.out)

    graphs = named_graphs()
    rng = np.random.default_rng(args.seed)
    for n in args.n:
        for p in args.p:
            graphs["gnp{}_{}_c".format(n, p)] = gnp_complement(n, p, int(rng.integers(2**31)))

    for name, nx_graph in graphs.items():
        g = from_networkx(nx_graph)
        path = os.path.join(args.out, name + ".el")
        with open(path, "w") as fid:
            fid.write(to_edge_list(g))
        print("{}: |V|={}, |E|={} -> {}".format(name, g.num_vertices, g.num_edges, path))

import os
import sys

import networkx as nx
import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from dataloader.base import BaseGraph  # noqa: E402
from dataloader.encodings import from_networkx  # noqa: E402
from metrics.load import PhaseTimer, WorkerStats  # noqa: E402

# name -> (graph, minimum vertex cover size)
NAMED = {
    "empty": (nx.empty_graph(3), 0),
    "p2": (nx.path_graph(2), 1),
    "p3": (nx.path_graph(3), 1),
    "p5": (nx.path_graph(5), 2),
    "triangle": (nx.complete_graph(3), 2),
    "c4": (nx.cycle_graph(4), 2),
    "c5": (nx.cycle_graph(5), 3),
    "k4": (nx.complete_graph(4), 3),
    "k6": (nx.complete_graph(6), 5),
    "star6": (nx.star_graph(5), 1),
    "petersen": (nx.petersen_graph(), 6),
    "tree_2_2": (nx.balanced_tree(2, 2), 2),
    "tree_2_3": (nx.balanced_tree(2, 3), 5),
    "grid_3_4": (nx.grid_2d_graph(3, 4), 6),
}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def graph_from_edges(n, edges):
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    return BaseGraph.from_edges(n, edges[:, 0], edges[:, 1])


def random_graph(rng, n, p):
    """
    G(n, p) drawn from a numpy generator.
    """

    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(us.size) < p
    return BaseGraph.from_edges(n, us[keep], vs[keep])


def hard_graph(n, p, seed):
    """
    Complement of G(n, p). With p close to 1 it is sparse and its minimum cover is large
    (|V| minus the clique number of G(n, p)), the hard case for branch-and-reduce.
    """

    return from_networkx(nx.complement(nx.gnp_random_graph(n, p, seed=seed)))


@pytest.fixture(params=sorted(NAMED.keys()))
def named_graph(request):
    nx_graph, mvc = NAMED[request.param]
    return request.param, from_networkx(nx_graph), mvc


@pytest.fixture
def petersen():
    return from_networkx(nx.petersen_graph())


@pytest.fixture
def c5():
    return from_networkx(nx.cycle_graph(5))


@pytest.fixture
def p3():
    return graph_from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def star():
    return from_networkx(nx.star_graph(5))


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def timed_stats():
    """
    Worker stats with phase timing on: the search takes the interpreted path.
    """

    return WorkerStats(timer=PhaseTimer(enabled=True))

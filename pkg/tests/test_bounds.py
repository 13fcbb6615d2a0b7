import networkx as nx
import numpy as np
import pytest

from conftest import graph_from_edges, random_graph
from dataloader.encodings import from_networkx
from search.bounds import SolveMode, greedy_approx, is_cover_found, should_prune
from search.oracle import GraphTooLargeError, brute_force_cover, brute_force_mvc
from search.sequential import verify_cover
from search.state import SearchNode, init_root, remove_vertex_into_cover


def node_with(cover_count, alive_edge_count):
    return SearchNode(np.zeros(1, dtype=np.int32), cover_count, alive_edge_count)


@pytest.mark.parametrize("kind, k", [("mvc", 3), ("pvc", None), ("pvc", 0), ("pvc", 2.5), ("max", None)])
def test_solve_mode_rejects(kind, k):
    if kind == "mvc":
        # k is ignored for mvc
        assert SolveMode(kind, k).bound_value(7) == 7
        return
    with pytest.raises(ValueError):
        SolveMode(kind, k)


def test_solve_mode_bounds():
    assert SolveMode.pvc(4).bound_value(9) == 4
    assert SolveMode.pvc(4).depth_bound(9, 20) == 4
    assert SolveMode.mvc().depth_bound(9, 20) == 9
    assert SolveMode.pvc(10**12).depth_bound(9, 20) == 20


def test_greedy_edgeless():
    assert greedy_approx(graph_from_edges(4, []))[0] == 0


def test_greedy_star(star):
    assert greedy_approx(star) == (1, [0])


def test_greedy_cycle(c5):
    assert greedy_approx(c5) == (3, [0, 2, 4])


def test_greedy_upper_bound(rng):
    for _ in range(200):
        g = random_graph(rng, 11, rng.uniform(0.1, 0.7))
        size, cover = greedy_approx(g)
        assert size == len(cover)
        assert verify_cover(g, cover)
        assert size >= brute_force_mvc(g)


@pytest.mark.parametrize("mode", [SolveMode.mvc(), SolveMode.pvc(6)])
def test_should_prune_monotone_in_cover_size(mode):
    best = 7
    for edges in range(0, 60):
        pruned = [should_prune(node_with(size, edges), mode, best) for size in range(0, 10)]
        # once pruned, a larger cover stays pruned
        assert pruned == sorted(pruned)


def random_tree(rng, n):
    return graph_from_edges(n, [(v, int(rng.integers(0, v))) for v in range(1, n)])


def test_greedy_is_optimal_on_forests(rng):
    graphs = [from_networkx(nx.path_graph(n)) for n in range(1, 12)]
    graphs += [from_networkx(nx.star_graph(n)) for n in range(1, 12)]
    graphs += [random_tree(rng, int(rng.integers(2, 18))) for _ in range(100)]
    for g in graphs:
        size, cover = greedy_approx(g)
        assert size == brute_force_mvc(g)
        assert verify_cover(g, cover)


@pytest.mark.parametrize(
    "mode, cover_count, edges, best, expected",
    [
        (SolveMode.mvc(), 3, 0, 3, True),
        (SolveMode.mvc(), 2, 5, 5, True),
        (SolveMode.mvc(), 2, 4, 5, False),
        (SolveMode.mvc(), 0, 0, 1, False),
        (SolveMode.pvc(2), 1, 1, None, False),
        (SolveMode.pvc(2), 1, 2, None, True),
        (SolveMode.pvc(2), 3, 0, None, True),
        (SolveMode.pvc(2), 2, 0, None, False),
    ],
)
def test_should_prune(mode, cover_count, edges, best, expected):
    assert should_prune(node_with(cover_count, edges), mode, best) == expected


def test_is_cover_found(p3):
    assert is_cover_found(init_root(graph_from_edges(3, [])))
    node = init_root(p3)
    assert not is_cover_found(node)
    remove_vertex_into_cover(node, p3, 1)
    assert is_cover_found(node)


def test_oracle_named(named_graph):
    name, g, mvc = named_graph
    if g.num_vertices > 20:
        pytest.skip("too large for the oracle")
    cover = brute_force_cover(g)
    assert len(cover) == mvc
    assert verify_cover(g, cover)


def test_oracle_small():
    assert brute_force_mvc(graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])) == 2
    assert brute_force_mvc(graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])) == 3


def test_oracle_too_large():
    with pytest.raises(GraphTooLargeError):
        brute_force_cover(graph_from_edges(21, [(0, 20)]))

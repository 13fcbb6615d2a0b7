import networkx as nx
import numpy as np
import pytest

from conftest import graph_from_edges, random_graph
from dataloader.base import BaseGraph
from dataloader.encodings import from_networkx
from search.bounds import SolveMode
from search.oracle import brute_force_mvc
from search.reductions import (
    apply_degree_one,
    apply_degree_two_triangle,
    apply_high_degree,
    reduce_fixpoint,
    reduction_bound,
)
from search.kernels import BOARD_SIZE, BEST, kernel_params, reduce_jit
from search.state import clone_node, cover_vertices, init_root, remove_vertex_into_cover, validate_node

MVC = SolveMode.mvc()


def test_degree_one_edge():
    g = graph_from_edges(2, [(0, 1)])
    node = init_root(g)
    assert apply_degree_one(node, g)
    assert cover_vertices(node) == [1]


def test_degree_one_path(p3):
    node = init_root(p3)
    assert apply_degree_one(node, p3)
    assert cover_vertices(node) == [1]
    assert node.alive_edge_count == 0


def test_degree_one_p4():
    g = from_networkx(nx.path_graph(4))
    node = init_root(g)
    apply_degree_one(node, g)
    assert node.cover_count == 2
    assert node.alive_edge_count == 0
    validate_node(node, g)


def test_degree_one_no_change(c5):
    node = init_root(c5)
    assert not apply_degree_one(node, c5)
    assert node == init_root(c5)


def test_degree_two_triangle(triangle):
    node = init_root(triangle)
    assert apply_degree_two_triangle(node, triangle)
    assert cover_vertices(node) == [1, 2]


def test_degree_two_triangle_with_pendant():
    # v0 has degree 2 in the triangle {0, 1, 2} and fires first
    g = graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    node = init_root(g)
    assert apply_degree_two_triangle(node, g)
    assert cover_vertices(node) == [1, 2]
    assert node.alive_edge_count == 0
    assert node.cover_count == brute_force_mvc(g)


def test_degree_two_no_triangle():
    g = from_networkx(nx.cycle_graph(4))
    node = init_root(g)
    assert not apply_degree_two_triangle(node, g)


def test_high_degree_star(star):
    node = init_root(star)
    assert reduction_bound(node, MVC, 2).limit == 1
    assert apply_high_degree(node, star, MVC, 2)
    assert cover_vertices(node) == [0]
    assert node.degrees[1:].tolist() == [0] * 5


def test_high_degree_loose_bound(petersen):
    node = init_root(petersen)
    assert not apply_high_degree(node, petersen, MVC, 10)


def test_high_degree_cycle(c5):
    node = init_root(c5)
    assert not apply_high_degree(node, c5, MVC, 3)


def test_high_degree_pvc(star):
    node = init_root(star)
    assert reduction_bound(node, SolveMode.pvc(1), 1).limit == 1
    assert apply_high_degree(node, star, SolveMode.pvc(1), 1)
    assert cover_vertices(node) == [0]


def test_reduction_bound_clamped(p3):
    node = init_root(p3)
    assert reduction_bound(node, MVC, 0).limit == 0


def test_fixpoint_path():
    g = from_networkx(nx.path_graph(5))
    node = init_root(g)
    reduce_fixpoint(node, g, MVC, 10)
    assert cover_vertices(node) == [1, 3]
    assert node.alive_edge_count == 0


def test_fixpoint_cycle(c5):
    node = init_root(c5)
    reduce_fixpoint(node, c5, MVC, 100)
    assert node == init_root(c5)


def test_fixpoint_binary_tree():
    g = from_networkx(nx.balanced_tree(2, 2))
    node = init_root(g)
    reduce_fixpoint(node, g, MVC, 100)
    assert cover_vertices(node) == [1, 2]
    assert node.alive_edge_count == 0


def test_fixpoint_reads_callable_bound(star):
    node = init_root(star)
    reduce_fixpoint(node, star, MVC, lambda: 2)
    assert cover_vertices(node) == [0]


@pytest.mark.parametrize("seed", range(5))
def test_fixpoint_is_stable(seed):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        g = random_graph(rng, 14, 0.25)
        node = init_root(g)
        reduce_fixpoint(node, g, MVC, g.num_vertices + 1)
        validate_node(node, g)
        before = node.degrees.copy(), node.cover_count
        assert not apply_degree_one(node, g)
        assert not apply_degree_two_triangle(node, g)
        assert not apply_high_degree(node, g, MVC, g.num_vertices + 1)
        assert (node.degrees == before[0]).all() and node.cover_count == before[1]


def residual(node, g):
    us, vs = g.edges()
    alive = node.alive
    keep = alive[us] & alive[vs]
    return BaseGraph.from_edges(g.num_vertices, us[keep], vs[keep])


def test_fixpoint_keeps_an_optimum(rng):
    for _ in range(150):
        g = random_graph(rng, 12, 0.3)
        opt = brute_force_mvc(g)
        node = init_root(g)
        reduce_fixpoint(node, g, MVC, opt + 1)
        assert node.cover_count + brute_force_mvc(residual(node, g)) == opt


def test_degree_rules_are_sound():
    rng = np.random.default_rng(3)
    for _ in range(300):
        g = random_graph(rng, int(rng.integers(4, 15)), rng.uniform(0.1, 0.9))
        node = init_root(g)
        while apply_degree_one(node, g) | apply_degree_two_triangle(node, g):
            pass
        assert node.cover_count + brute_force_mvc(residual(node, g)) == brute_force_mvc(g)


def random_node(rng, g):
    node = init_root(g)
    for v in rng.permutation(g.num_vertices)[: int(rng.integers(0, 4))]:
        if node.alive[v]:
            remove_vertex_into_cover(node, g, v)
    return node


def test_fixpoint_is_deterministic(rng):
    for _ in range(100):
        g = random_graph(rng, 14, rng.uniform(0.1, 0.6))
        node = random_node(rng, g)
        a, b = clone_node(node), clone_node(node)
        best = int(rng.integers(1, 15))
        reduce_fixpoint(a, g, MVC, best)
        reduce_fixpoint(b, g, MVC, best)
        assert a == b


@pytest.mark.parametrize("mode", [MVC, SolveMode.pvc(4)])
def test_compiled_fixpoint_matches(rng, mode):
    for _ in range(200):
        g = random_graph(rng, int(rng.integers(2, 16)), rng.uniform(0.1, 0.8))
        node = random_node(rng, g)
        best = int(rng.integers(1, 16))
        expected = clone_node(node)
        reduce_fixpoint(expected, g, mode, best)

        degrees = node.degrees.copy()
        meta = np.array([node.cover_count, node.alive_edge_count], dtype=np.int64)
        board = np.zeros(BOARD_SIZE, dtype=np.int64)
        board[BEST] = best
        reduce_jit(g.offsets, g.neighbors, degrees, meta, board, kernel_params(g, mode))
        assert degrees.tolist() == expected.degrees.tolist()
        assert meta.tolist() == [expected.cover_count, expected.alive_edge_count]

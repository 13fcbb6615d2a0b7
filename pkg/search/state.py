"""
Search-tree node (G, S) as a degree array over the immutable base graph.
"""

import numpy as np

# degree of a vertex deleted into the cover
REMOVED = np.iinfo(np.int32).max


class StackOverflowError(RuntimeError):
    """
    A push would exceed the depth the local stack was provisioned for.
    """


class SearchNode:
    """
    Self-contained (G, S) pair: degrees[v] is the current degree of v, or REMOVED if v is in S.
    Nodes are copied between tree levels, never shared between workers.
    """

    __slots__ = ("degrees", "cover_count", "alive_edge_count")

    def __init__(self, degrees, cover_count, alive_edge_count):
        self.degrees = degrees
        self.cover_count = cover_count
        self.alive_edge_count = alive_edge_count

    def __eq__(self, other):
        if not isinstance(other, SearchNode):
            return NotImplemented
        return (
            self.cover_count == other.cover_count
            and self.alive_edge_count == other.alive_edge_count
            and np.array_equal(self.degrees, other.degrees)
        )

    def __repr__(self):
        return "SearchNode(|S|={}, |E|={})".format(self.cover_count, self.alive_edge_count)

    @property
    def alive(self):
        return self.degrees != REMOVED


def init_root(g):
    return SearchNode(g.degrees.astype(np.int32), 0, g.num_edges)


def clone_node(node):
    return SearchNode(node.degrees.copy(), node.cover_count, node.alive_edge_count)


def alive_neighbors(node, g, v):
    nbrs = g.neighbors_of(v)
    return nbrs[node.degrees[nbrs] != REMOVED]


def remove_vertex_into_cover(node, g, v):
    """
    G = G - {v}, S = S + {v}.
    """

    degrees = node.degrees
    assert degrees[v] != REMOVED, "vertex {} is already in the cover".format(v)
    nbrs = alive_neighbors(node, g, v)
    degrees[nbrs] -= 1
    node.alive_edge_count -= len(nbrs)
    degrees[v] = REMOVED
    node.cover_count += 1


def remove_neighbors_into_cover(node, g, v):
    """
    G = G - N(v), S = S + N(v); v stays alive with degree 0.
    """

    assert node.degrees[v] != REMOVED, "vertex {} is already in the cover".format(v)
    for u in alive_neighbors(node, g, v):
        remove_vertex_into_cover(node, g, u)


def max_degree_vertex(node):
    """
    Smallest-id alive vertex of maximum degree (possibly 0), None if every vertex is in S.
    """

    if node.degrees.size == 0:
        return None
    masked = np.where(node.degrees == REMOVED, -1, node.degrees)
    v = int(np.argmax(masked))
    return None if masked[v] < 0 else v


def cover_vertices(node):
    return np.flatnonzero(node.degrees == REMOVED).tolist()


def validate_node(node, g):
    """
    Recomputes every degree from the base graph and checks the counters against them.
    """

    alive = node.alive
    expected = g.adjacency().dot(alive.astype(np.int64))
    assert np.array_equal(node.degrees[alive], expected[alive]), "stale degrees"
    assert node.cover_count == int(np.count_nonzero(~alive)), "cover counter out of sync"
    degree_sum = int(node.degrees[alive].astype(np.int64).sum())
    assert degree_sum == 2 * node.alive_edge_count, "edge counter out of sync"


class LocalStack:
    """
    Depth-first stack of one worker, stored as a [rows x |V|] degree matrix plus the
    (|S|, |E|) counters of every entry so the compiled traversal can push and pop in place.
    Rows are allocated on demand up to capacity; see SolveMode.depth_bound.
    """

    INITIAL_ROWS = 16

    def __init__(self, capacity, num_vertices):
        self.capacity = capacity
        self.num_vertices = num_vertices
        rows = min(capacity, self.INITIAL_ROWS)
        self.degrees = np.empty((rows, num_vertices), dtype=np.int32)
        self.meta = np.empty((rows, 2), dtype=np.int64)
        self.top = 0
        self.high_water = 0

    @property
    def rows(self):
        return len(self.degrees)

    def reserve(self):
        """
        Makes room for one more entry.
        """

        if self.top >= self.capacity:
            raise StackOverflowError("local stack provisioned for {} entries".format(self.capacity))
        if self.top < self.rows:
            return
        rows = min(self.capacity, max(1, 2 * self.rows))
        degrees = np.empty((rows, self.num_vertices), dtype=np.int32)
        meta = np.empty((rows, 2), dtype=np.int64)
        degrees[: self.top] = self.degrees[: self.top]
        meta[: self.top] = self.meta[: self.top]
        self.degrees, self.meta = degrees, meta

    def push(self, node):
        self.reserve()
        self.degrees[self.top] = node.degrees
        self.meta[self.top] = (node.cover_count, node.alive_edge_count)
        self.top += 1
        self.high_water = max(self.high_water, self.top)

    def pop(self):
        self.top -= 1
        cover_count, alive_edge_count = self.meta[self.top].tolist()
        return SearchNode(self.degrees[self.top].copy(), cover_count, alive_edge_count)

    def empty(self):
        return self.top == 0

    def __len__(self):
        return self.top

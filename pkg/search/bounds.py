from dataclasses import dataclass
from typing import Optional

from .reductions import apply_degree_one, apply_degree_two_triangle
from .state import cover_vertices, init_root, max_degree_vertex, remove_vertex_into_cover

MODES = ("mvc", "pvc")


@dataclass(frozen=True)
class SolveMode:
    """
    MVC: find a minimum vertex cover. PVC: find a vertex cover of size at most k.
    """

    kind: str = "mvc"
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in MODES:
            raise ValueError("unknown mode '{}', expected one of {}".format(self.kind, MODES))
        if self.kind == "pvc" and (self.k is None or int(self.k) != self.k or self.k < 1):
            raise ValueError("PVC needs an integer k >= 1, got {}".format(self.k))

    @classmethod
    def mvc(cls):
        return cls("mvc")

    @classmethod
    def pvc(cls, k):
        return cls("pvc", k)

    @property
    def is_pvc(self):
        return self.kind == "pvc"

    def bound_value(self, best):
        return self.k if self.is_pvc else best

    def depth_bound(self, greedy_size, num_vertices):
        """
        Local stack capacity: a path branches at most k (PVC) or greedy (MVC) times, and never
        more than |V| times.
        """

        bound = self.k if self.is_pvc else greedy_size
        return min(bound, num_vertices)


def greedy_approx(g):
    """
    Upper bound used to initialize best: apply the degree-one and degree-two-triangle rules,
    take the max-degree vertex, repeat until no edge is left.
    High-degree is skipped since no best exists yet.
    :return size, cover: cover as a sorted list of vertex ids
    """

    node = init_root(g)
    while True:
        while apply_degree_one(node, g) | apply_degree_two_triangle(node, g):
            pass
        if node.alive_edge_count == 0:
            break
        remove_vertex_into_cover(node, g, max_degree_vertex(node))
    return node.cover_count, cover_vertices(node)


def should_prune(node, mode, best):
    """
    True if the branch holds no smaller cover (MVC) or no cover within k (PVC).
    Remaining degrees are bounded by the budget after high-degree, so more than
    budget^2 edges cannot be covered.
    """

    size, edges = node.cover_count, node.alive_edge_count
    if mode.is_pvc:
        return size > mode.k or edges > (mode.k - size) ** 2
    return size >= best or edges > (best - size - 1) ** 2


def is_cover_found(node):
    return node.alive_edge_count == 0

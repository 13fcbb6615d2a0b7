from dataclasses import dataclass

import numpy as np

from dataloader.encodings import has_edge
from metrics.load import NULL_TIMER

from .state import REMOVED, alive_neighbors, remove_vertex_into_cover


@dataclass(frozen=True)
class ReductionBound:
    """
    Largest degree a vertex outside the cover may keep: best - |S| - 1 (MVC) or k - |S| (PVC).
    """

    limit: int


def reduction_bound(node, mode, best_or_k):
    if mode.is_pvc:
        limit = best_or_k - node.cover_count
    else:
        limit = best_or_k - node.cover_count - 1
    return ReductionBound(max(0, limit))


def _next_vertex(degrees, start, select):
    """
    Smallest vertex id >= start whose degree is selected, -1 if none.
    Only the tail of the degree array is scanned.
    """

    hits = np.flatnonzero(select(degrees[start:]))
    return start + int(hits[0]) if hits.size else -1


def apply_degree_one(node, g):
    """
    For every vertex of degree one (ascending id, degree read at visit time),
    its only neighbor goes into the cover.
    """

    changed = False
    v = 0
    while True:
        v = _next_vertex(node.degrees, v, lambda d: d == 1)
        if v < 0:
            return changed
        u = alive_neighbors(node, g, v)[0]
        remove_vertex_into_cover(node, g, u)
        changed = True
        v += 1


def apply_degree_two_triangle(node, g):
    """
    For every vertex v with N(v) = {u, w} and uw an edge, both u and w go into the cover.
    """

    changed = False
    v = 0
    while True:
        v = _next_vertex(node.degrees, v, lambda d: d == 2)
        if v < 0:
            return changed
        u, w = alive_neighbors(node, g, v)
        if has_edge(g, u, w):
            remove_vertex_into_cover(node, g, u)
            remove_vertex_into_cover(node, g, w)
            changed = True
        v += 1


def apply_high_degree(node, g, mode, best_or_k):
    """
    Every vertex whose degree exceeds the remaining budget goes into the cover.
    The budget is recomputed after each removal since |S| grows.
    """

    changed = False
    v = 0
    while True:
        limit = reduction_bound(node, mode, best_or_k).limit
        v = _next_vertex(node.degrees, v, lambda d: (d != REMOVED) & (d > limit))
        if v < 0:
            return changed
        remove_vertex_into_cover(node, g, v)
        changed = True
        v += 1


def reduce_fixpoint(node, g, mode, best_or_k, timer=NULL_TIMER):
    """
    Applies degree-one, degree-two-triangle and high-degree in this order until a full round
    leaves the node unchanged.
    :param best_or_k: current best (MVC) or k (PVC); a callable is re-read every round
    """

    read = best_or_k if callable(best_or_k) else (lambda: best_or_k)
    while True:
        changed = False
        with timer.track("reduce_degree_one"):
            changed |= apply_degree_one(node, g)
        with timer.track("reduce_degree_two_triangle"):
            changed |= apply_degree_two_triangle(node, g)
        with timer.track("reduce_high_degree"):
            changed |= apply_high_degree(node, g, mode, read())
        if not changed:
            return

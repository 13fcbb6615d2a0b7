import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from metrics.load import NULL_TIMER, WorkerStats

from .bounds import SolveMode, greedy_approx, is_cover_found, should_prune
from .kernels import BEST, BOARD_SIZE, HALT, compiled_depth_first
from .reductions import reduce_fixpoint
from .state import (
    LocalStack,
    clone_node,
    cover_vertices,
    init_root,
    max_degree_vertex,
    remove_neighbors_into_cover,
    remove_vertex_into_cover,
)

PRUNED = "pruned"
COVER_FOUND = "cover"
BRANCH = "branch"


@dataclass
class Solution:
    """
    :param cover: cover in input-file ids
    :param feasible: PVC answer (always True for a completed MVC search)
    :param status: complete / timeout / budget
    """

    size: Optional[int]
    cover: list = field(default_factory=list)
    feasible: bool = True
    status: str = "complete"
    greedy_size: Optional[int] = None


def verify_cover(g, vertices):
    """
    True if every edge has at least one endpoint in vertices (dense ids).
    """

    mask = np.zeros(g.num_vertices, dtype=bool)
    mask[np.asarray(vertices, dtype=np.int64)] = True
    us, vs = g.edges()
    return bool(np.all(mask[us] | mask[vs]))


class SearchState:
    """
    Best-so-far bookkeeping and run limits of a single-threaded search.
    The parallel schedulers share a locked subclass of it between workers.
    board mirrors best and the stop flag for the compiled kernels.
    """

    def __init__(self, mode, best, best_cover, node_budget=None, timeout_s=None):
        self.mode = mode
        self.best = best
        self.best_cover = best_cover
        self.found = False
        self.status = "complete"
        self.visited = 0
        self.reserved = 0
        self.node_budget = node_budget
        self.deadline = None if timeout_s is None else time.monotonic() + timeout_s
        self.board = np.zeros(BOARD_SIZE, dtype=np.int64)
        if not mode.is_pvc:
            self.board[BEST] = best

    def bound_value(self):
        return self.mode.bound_value(self.best)

    @property
    def stopped(self):
        return self.status != "complete" or (self.mode.is_pvc and self.found)

    def abort(self, status):
        if self.status == "complete":
            self.status = status
        self.board[HALT] = 1

    def tick(self):
        """
        Counts one visited tree node; False once a run limit is hit.
        """

        self.visited += 1
        if self.node_budget is not None and self.visited > self.node_budget:
            self.abort("budget")
        elif self.deadline is not None and time.monotonic() >= self.deadline:
            self.abort("timeout")
        return not self.stopped

    def grant(self, wanted):
        """
        Number of tree nodes the next compiled slice may visit, 0 once a run limit is hit.
        Only asked for while the caller still has a node to visit.
        """

        if self.deadline is not None and time.monotonic() >= self.deadline:
            self.abort("timeout")
        if self.stopped:
            return 0
        if self.node_budget is None:
            return wanted
        left = self.node_budget - self.visited - self.reserved
        if left <= 0:
            self.abort("budget")
            return 0
        granted = min(wanted, left)
        self.reserved += granted
        return granted

    def settle(self, granted, used):
        if self.node_budget is not None:
            self.reserved -= granted
        self.visited += used

    def offer_cover(self, node):
        if self.mode.is_pvc:
            if self.found:
                return False
            self.found = True
            self.board[HALT] = 1
        elif node.cover_count >= self.best:
            return False
        self.best = node.cover_count
        self.best_cover = cover_vertices(node)
        if not self.mode.is_pvc:
            self.board[BEST] = self.best
        return True


def visit(node, g, mode, state, timer=NULL_TIMER):
    """
    Reduces a tree node and classifies it.
    :return outcome, v_max: v_max is only set when the node has to branch
    """

    reduce_fixpoint(node, g, mode, state.bound_value, timer)
    with timer.track("prune_check"):
        if should_prune(node, mode, state.best):
            return PRUNED, None
        if is_cover_found(node):
            return COVER_FOUND, None
    with timer.track("max_degree_scan"):
        v = max_degree_vertex(node)
    return BRANCH, v


def split(node, g, v, timer=NULL_TIMER):
    """
    Builds the G - N(v) child and turns node itself into the G - v child.
    """

    with timer.track("branch_remove_neighbors"):
        child = clone_node(node)
        remove_neighbors_into_cover(child, g, v)
    with timer.track("branch_remove_vertex"):
        remove_vertex_into_cover(node, g, v)
    return child


def depth_first(node, g, mode, state, stack, stats, place_child=None):
    """
    Traverses the sub-tree rooted at node: the G - N(v_max) child is deferred through
    place_child (the local stack by default), the G - v_max child is processed next.
    Returns once the local stack is empty or the state is stopped.
    """

    timer = stats.timer

    def push(child):
        with timer.track("stack"):
            stack.push(child)

    place_child = place_child or push
    while True:
        if not state.tick():
            return
        stats.nodes += 1
        outcome, v = visit(node, g, mode, state, timer)

        if outcome == BRANCH:
            place_child(split(node, g, v, timer))
            stats.max_stack_depth = max(stats.max_stack_depth, len(stack))
            continue

        if outcome == COVER_FOUND:
            state.offer_cover(node)
            if state.stopped:
                return

        if stack.empty():
            return
        with timer.track("stack"):
            node = stack.pop()


def traverse(node, g, mode, state, stack, stats, place_child=None, threshold=None):
    """
    Runs depth_first when the worker times its phases, the compiled kernel otherwise.
    :param threshold: compiled kernel only, hands G - N(v_max) children to place_child while the
        worklist holds fewer entries than this
    """

    if stats.timer.enabled:
        return depth_first(node, g, mode, state, stack, stats, place_child)
    return compiled_depth_first(node, g, mode, state, stack, stats, place_child, threshold)


def _search(g, mode, node_budget, timeout_s, stats):
    greedy_size, greedy_cover = greedy_approx(g)
    if mode.is_pvc:
        state = SearchState(mode, mode.k + 1, None, node_budget, timeout_s)
    else:
        state = SearchState(mode, greedy_size, greedy_cover, node_budget, timeout_s)

    stats = stats if stats is not None else WorkerStats()
    stats.timer.start()
    stack = LocalStack(mode.depth_bound(greedy_size, g.num_vertices), g.num_vertices)
    traverse(init_root(g), g, mode, state, stack, stats)
    stats.timer.stop()
    return state, greedy_size


def _solution(g, state, greedy_size):
    if state.best_cover is None:
        return Solution(None, [], False, state.status, greedy_size)
    cover = g.labels[np.asarray(state.best_cover, dtype=np.int64)].tolist()
    feasible = state.found if state.mode.is_pvc else True
    return Solution(len(cover), cover, feasible, state.status, greedy_size)


def solve_mvc_seq(g, node_budget=None, timeout_s=None, stats=None):
    """
    Reference branch-and-reduce search for a minimum vertex cover.
    """

    return _solution(g, *_search(g, SolveMode.mvc(), node_budget, timeout_s, stats))


def solve_pvc_seq(g, k, node_budget=None, timeout_s=None, stats=None):
    """
    Stops at the first cover of size <= k; feasible=False if the whole tree holds none.
    """

    return _solution(g, *_search(g, SolveMode.pvc(k), node_budget, timeout_s, stats))

"""
Compiled depth-first traversal. Visits, reduces and branches tree nodes with the same rules and
the same order as the interpreted path (reductions.py, sequential.depth_first), on plain arrays,
without holding the GIL.
"""

import numpy as np
from numba import njit

from .state import REMOVED, SearchNode

# traverse_jit events
EMPTY = 0  # current node done and local stack exhausted
YIELD = 1  # node allowance used up, the current node is still to be visited
STOP = 2  # stop flag raised on the board
COVER = 3  # current node is a cover
CHILD = 4  # a G - N(v_max) child waits in the hand-off buffer

# descend_jit outcomes
REACHED = 0
DIED = 1
FOUND = 2
LIMIT = 3

# board slots, shared by every worker of a run
BEST, HALT, WORKLIST_SIZE = 0, 1, 2
BOARD_SIZE = 3

# cursor slots, one cursor per worker
TOP, PENDING, NODES, DEPTH = 0, 1, 2, 3

# params slots
IS_PVC, K, DONATE, THRESHOLD = 0, 1, 2, 3

CHUNK = 512


@njit(cache=True)
def _remove_vertex(offsets, neighbors, degrees, meta, v):
    for i in range(offsets[v], offsets[v + 1]):
        u = neighbors[i]
        if degrees[u] != REMOVED:
            degrees[u] -= 1
            meta[1] -= 1
    degrees[v] = REMOVED
    meta[0] += 1


@njit(cache=True)
def _remove_neighbors(offsets, neighbors, degrees, meta, v):
    for i in range(offsets[v], offsets[v + 1]):
        u = neighbors[i]
        if degrees[u] != REMOVED:
            _remove_vertex(offsets, neighbors, degrees, meta, u)


@njit(cache=True)
def _has_edge(offsets, neighbors, u, v):
    lo = offsets[u]
    hi = offsets[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        w = neighbors[mid]
        if w == v:
            return True
        if w < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True)
def _degree_one(offsets, neighbors, degrees, meta):
    changed = False
    for v in range(degrees.shape[0]):
        if degrees[v] != 1:
            continue
        for i in range(offsets[v], offsets[v + 1]):
            u = neighbors[i]
            if degrees[u] != REMOVED:
                _remove_vertex(offsets, neighbors, degrees, meta, u)
                break
        changed = True
    return changed


@njit(cache=True)
def _degree_two_triangle(offsets, neighbors, degrees, meta):
    changed = False
    for v in range(degrees.shape[0]):
        if degrees[v] != 2:
            continue
        u = -1
        w = -1
        for i in range(offsets[v], offsets[v + 1]):
            x = neighbors[i]
            if degrees[x] != REMOVED:
                if u < 0:
                    u = x
                else:
                    w = x
                    break
        if _has_edge(offsets, neighbors, u, w):
            _remove_vertex(offsets, neighbors, degrees, meta, u)
            _remove_vertex(offsets, neighbors, degrees, meta, w)
            changed = True
    return changed


@njit(cache=True)
def _reduction_limit(meta, is_pvc, bound):
    if is_pvc:
        limit = bound - meta[0]
    else:
        limit = bound - meta[0] - 1
    return max(limit, 0)


@njit(cache=True)
def _high_degree(offsets, neighbors, degrees, meta, is_pvc, bound):
    changed = False
    for v in range(degrees.shape[0]):
        d = degrees[v]
        if d != REMOVED and d > _reduction_limit(meta, is_pvc, bound):
            _remove_vertex(offsets, neighbors, degrees, meta, v)
            changed = True
    return changed


@njit(cache=True)
def reduce_jit(offsets, neighbors, degrees, meta, board, params):
    is_pvc = params[IS_PVC] != 0
    while True:
        one = _degree_one(offsets, neighbors, degrees, meta)
        two = _degree_two_triangle(offsets, neighbors, degrees, meta)
        bound = params[K] if is_pvc else board[BEST]
        high = _high_degree(offsets, neighbors, degrees, meta, is_pvc, bound)
        if not (one or two or high):
            return


@njit(cache=True)
def _prune(meta, board, params):
    size = meta[0]
    edges = meta[1]
    if params[IS_PVC] != 0:
        k = params[K]
        return size > k or edges > (k - size) * (k - size)
    best = board[BEST]
    return size >= best or edges > (best - size - 1) * (best - size - 1)


@njit(cache=True)
def _max_degree_vertex(degrees):
    best_v = -1
    best_d = -1
    for v in range(degrees.shape[0]):
        d = degrees[v]
        if d != REMOVED and d > best_d:
            best_d = d
            best_v = v
    return best_v


@njit(nogil=True, cache=True)
def traverse_jit(
    offsets,
    neighbors,
    degrees,
    meta,
    stack_degrees,
    stack_meta,
    cursor,
    board,
    params,
    child_degrees,
    child_meta,
    allowance,
):
    """
    Depth-first loop over the current node (degrees, meta) and the local stack rows [0, cursor[TOP]).
    Branching pushes the G - N(v_max) child on the stack, or hands it to the caller (CHILD) when
    donation is open (board[WORKLIST_SIZE] < threshold) or the allocated rows are used up.
    Visits at most allowance nodes per call.
    :return: event code
    """

    visited = 0
    while True:
        if cursor[PENDING] == 0:
            top = cursor[TOP]
            if top == 0:
                return EMPTY
            top -= 1
            degrees[:] = stack_degrees[top]
            meta[0] = stack_meta[top, 0]
            meta[1] = stack_meta[top, 1]
            cursor[TOP] = top
            cursor[PENDING] = 1
        if board[HALT] != 0:
            return STOP
        if visited >= allowance:
            return YIELD

        visited += 1
        cursor[NODES] += 1
        reduce_jit(offsets, neighbors, degrees, meta, board, params)
        if _prune(meta, board, params):
            cursor[PENDING] = 0
            continue
        if meta[1] == 0:
            cursor[PENDING] = 0
            return COVER

        v = _max_degree_vertex(degrees)
        top = cursor[TOP]
        donate = params[DONATE] != 0 and board[WORKLIST_SIZE] < params[THRESHOLD]
        if donate or top == stack_degrees.shape[0]:
            child_degrees[:] = degrees
            child_meta[0] = meta[0]
            child_meta[1] = meta[1]
            _remove_neighbors(offsets, neighbors, child_degrees, child_meta, v)
            _remove_vertex(offsets, neighbors, degrees, meta, v)
            return CHILD

        row = stack_degrees[top]
        row[:] = degrees
        row_meta = stack_meta[top]
        row_meta[0] = meta[0]
        row_meta[1] = meta[1]
        _remove_neighbors(offsets, neighbors, row, row_meta, v)
        _remove_vertex(offsets, neighbors, degrees, meta, v)
        cursor[TOP] = top + 1
        if top + 1 > cursor[DEPTH]:
            cursor[DEPTH] = top + 1


@njit(nogil=True, cache=True)
def descend_jit(offsets, neighbors, degrees, meta, path, depth, cursor, board, params, allowance):
    """
    Walks depth levels down from the node: bit j of path picks the branch at level j
    (0 = G - v_max, 1 = G - N(v_max)).
    :return: REACHED, DIED (pruned), FOUND (node is a cover) or LIMIT
    """

    for level in range(depth):
        if board[HALT] != 0 or level >= allowance:
            return LIMIT
        cursor[NODES] += 1
        reduce_jit(offsets, neighbors, degrees, meta, board, params)
        if _prune(meta, board, params):
            return DIED
        if meta[1] == 0:
            return FOUND
        v = _max_degree_vertex(degrees)
        if (path >> level) & 1:
            _remove_neighbors(offsets, neighbors, degrees, meta, v)
        else:
            _remove_vertex(offsets, neighbors, degrees, meta, v)
    return REACHED


def kernel_params(g, mode, threshold=None):
    """
    :param threshold: donation threshold, None disables hand-offs to the worklist
    """

    params = np.zeros(4, dtype=np.int64)
    if mode.is_pvc:
        params[IS_PVC] = 1
        # k >= |V| never prunes nor reduces differently from k = |V|
        params[K] = min(mode.k, g.num_vertices)
    if threshold is not None:
        params[DONATE] = 1
        params[THRESHOLD] = threshold
    return params


def _node_view(degrees, meta):
    return SearchNode(degrees, int(meta[0]), int(meta[1]))


def compiled_depth_first(node, g, mode, state, stack, stats, place_child=None, threshold=None):
    """
    Same contract as sequential.depth_first, run in CHUNK-sized compiled slices. Between slices the
    run limits are checked and the events the kernel cannot handle (covers, hand-offs) are served.
    """

    place_child = place_child or stack.push
    params = kernel_params(g, mode, threshold)
    degrees = np.ascontiguousarray(node.degrees, dtype=np.int32)
    meta = np.array([node.cover_count, node.alive_edge_count], dtype=np.int64)
    child_degrees = np.empty_like(degrees)
    child_meta = np.zeros(2, dtype=np.int64)
    cursor = np.zeros(4, dtype=np.int64)
    cursor[PENDING] = 1

    while cursor[PENDING] or stack.top:
        allowance = state.grant(CHUNK)
        if allowance == 0:
            return
        cursor[TOP] = stack.top
        cursor[NODES] = 0
        cursor[DEPTH] = stack.top
        event = traverse_jit(
            g.offsets,
            g.neighbors,
            degrees,
            meta,
            stack.degrees,
            stack.meta,
            cursor,
            state.board,
            params,
            child_degrees,
            child_meta,
            allowance,
        )
        used = int(cursor[NODES])
        state.settle(allowance, used)
        stats.nodes += used
        stack.top = int(cursor[TOP])
        stack.high_water = max(stack.high_water, int(cursor[DEPTH]))
        stats.max_stack_depth = max(stats.max_stack_depth, int(cursor[DEPTH]))

        if event == CHILD:
            place_child(_node_view(child_degrees.copy(), child_meta))
            stats.max_stack_depth = max(stats.max_stack_depth, stack.top)
        elif event == COVER:
            state.offer_cover(_node_view(degrees, meta))
            if state.stopped:
                return
        elif event == STOP:
            return


def compiled_descend(node, g, mode, state, path, depth, stats):
    """
    Replays the first depth levels of a StackOnly sub-tree path in place.
    :return: True if node now is the sub-tree root, False if the path ended before depth d
    """

    allowance = state.grant(depth)
    if allowance == 0:
        return False
    meta = np.array([node.cover_count, node.alive_edge_count], dtype=np.int64)
    cursor = np.zeros(4, dtype=np.int64)
    outcome = descend_jit(
        g.offsets, g.neighbors, node.degrees, meta, path, depth, cursor, state.board, kernel_params(g, mode), allowance
    )
    used = int(cursor[NODES])
    state.settle(allowance, used)
    stats.nodes += used
    node.cover_count, node.alive_edge_count = int(meta[0]), int(meta[1])

    if outcome == FOUND:
        state.offer_cover(node)
    elif outcome == LIMIT and not state.stopped:
        state.abort("budget")
    return outcome == REACHED

import numpy as np

MAX_ORACLE_VERTICES = 20


class GraphTooLargeError(ValueError):
    pass


def brute_force_cover(g):
    """
    Exhaustive minimum vertex cover: every subset of V is a bit mask, each edge keeps the
    masks touching it, the smallest surviving mask wins (lowest mask among ties).
    """

    n = g.num_vertices
    if n > MAX_ORACLE_VERTICES:
        raise GraphTooLargeError(
            "oracle limited to {} vertices, got {}".format(MAX_ORACLE_VERTICES, n)
        )
    us, vs = g.edges()
    if us.size == 0:
        return []

    masks = np.arange(1 << n, dtype=np.int64)
    covers = np.ones(masks.size, dtype=bool)
    for u, v in zip(us, vs):
        covers &= (masks & ((1 << int(u)) | (1 << int(v)))) != 0

    popcount = np.zeros(masks.size, dtype=np.int64)
    for bit in range(n):
        popcount += (masks >> bit) & 1

    candidates = masks[covers]
    best = int(candidates[np.argmin(popcount[covers])])
    return [v for v in range(n) if best >> v & 1]


def brute_force_mvc(g):
    return len(brute_force_cover(g))

import threading

from search.kernels import compiled_descend
from search.sequential import BRANCH, COVER_FOUND, PRUNED, traverse, visit
from search.state import LocalStack, init_root, remove_neighbors_into_cover, remove_vertex_into_cover

from .base import BaseScheduler


class StackOnlyScheduler(BaseScheduler):
    """
    Baseline distributing the 2^d sub-trees rooted at depth d across workers.
    Sub-tree indices are claimed from a shared counter; the worker replays the root path
    (bit j of the index picks the branch at level j, 0 = G - v_max, 1 = G - N(v_max))
    and then traverses the sub-tree on its local stack.
    """

    name = "stackonly"

    def setup(self):
        self.depth = self.config.stackonly_depth
        self.num_subtrees = 1 << self.depth
        self._next_subtree = 0
        self._claim_lock = threading.Lock()

    def claim(self):
        with self._claim_lock:
            t = self._next_subtree
            self._next_subtree += 1
        return t if t < self.num_subtrees else None

    def replay(self, t, stats):
        """
        Walks from the root to sub-tree t, None if the path dies before depth d.
        """

        node = init_root(self.g)
        if not stats.timer.enabled:
            reached = compiled_descend(node, self.g, self.mode, self.shared, t, self.depth, stats)
            return node if reached else None

        timer = stats.timer
        for level in range(self.depth):
            if not self.shared.tick():
                return None
            stats.nodes += 1
            outcome, v = visit(node, self.g, self.mode, self.shared, timer)
            if outcome == PRUNED:
                return None
            if outcome == COVER_FOUND:
                self.shared.offer_cover(node)
                return None

            assert outcome == BRANCH
            if (t >> level) & 1:
                with timer.track("branch_remove_neighbors"):
                    remove_neighbors_into_cover(node, self.g, v)
            else:
                with timer.track("branch_remove_vertex"):
                    remove_vertex_into_cover(node, self.g, v)
        return node

    def work(self, stats):
        stack = LocalStack(self.depth_bound, self.g.num_vertices)
        while not self.shared.stopped:
            t = self.claim()
            if t is None:
                return
            node = self.replay(t, stats)
            if node is not None:
                traverse(node, self.g, self.mode, self.shared, stack, stats)

    def report(self, workers, greedy_size, wall_ms):
        report = super().report(workers, greedy_size, wall_ms)
        report.depth = self.depth
        return report


def run_stackonly(g, mode, config):
    return StackOnlyScheduler(g, mode, config).run()

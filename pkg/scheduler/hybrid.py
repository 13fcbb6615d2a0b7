from search.sequential import traverse
from search.state import LocalStack, init_root

from .base import BaseScheduler
from .worklist import GlobalWorklist


class HybridScheduler(BaseScheduler):
    """
    Per-worker local stacks plus a threshold-gated global worklist.
    Each worker traverses its sub-tree depth-first; on every branch the G - N(v_max) child is
    donated to the worklist while it holds fewer than `threshold` entries, otherwise it is
    pushed on the local stack. Idle workers pull new sub-tree roots from the worklist.
    """

    name = "hybrid"

    def setup(self):
        self.worklist = GlobalWorklist(
            self.config.worklist_capacity, self.config.threshold, self.num_workers, board=self.shared.board
        )
        self.shared.worklist = self.worklist
        self.worklist.add(init_root(self.g))

    def donate_or_push(self, child, stack, stats):
        timer = stats.timer
        if self.worklist.below_threshold():
            with timer.track("worklist_add"):
                accepted = self.worklist.add(child)
            if accepted:
                return
        # full under a race: keep it local
        with timer.track("stack"):
            stack.push(child)

    def work(self, stats):
        stack = LocalStack(self.depth_bound, self.g.num_vertices)
        while True:
            with stats.timer.track("worklist_remove"):
                node = self.worklist.remove_or_done(self.shared, self.config.backoff)
            if node is None:
                return
            traverse(
                node,
                self.g,
                self.mode,
                self.shared,
                stack,
                stats,
                place_child=lambda child: self.donate_or_push(child, stack, stats),
                threshold=self.config.threshold,
            )

    def report(self, workers, greedy_size, wall_ms):
        report = super().report(workers, greedy_size, wall_ms)
        report.capacity = self.config.worklist_capacity
        report.threshold_fraction = self.config.threshold_fraction
        return report


def run_hybrid(g, mode, config):
    return HybridScheduler(g, mode, config).run()

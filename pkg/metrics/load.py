import time
from contextlib import nullcontext
from dataclasses import dataclass, field

import numpy as np

PHASES = (
    "worklist_remove",
    "worklist_add",
    "stack",
    "reduce_degree_one",
    "reduce_degree_two_triangle",
    "reduce_high_degree",
    "max_degree_scan",
    "branch_remove_neighbors",
    "branch_remove_vertex",
    "prune_check",
)


class _Span:
    __slots__ = ("totals", "category", "t0")

    def __init__(self, totals, category):
        self.totals = totals
        self.category = category

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.totals[self.category] += time.perf_counter() - self.t0
        return False


class PhaseTimer:
    """
    Accumulates the time one worker spends on each activity of the traversal.
    Shares are normalized to the worker lifetime (start() to stop()).
    """

    def __init__(self, enabled=True):
        self.enabled = enabled
        self.totals = dict.fromkeys(PHASES, 0.0)
        self._t0 = None
        self._elapsed = 0.0

    def track(self, category):
        if not self.enabled:
            return nullcontext()
        return _Span(self.totals, category)

    def start(self):
        self._t0 = time.perf_counter()

    def stop(self):
        if self._t0 is not None:
            self._elapsed += time.perf_counter() - self._t0
            self._t0 = None

    @property
    def elapsed(self):
        return self._elapsed

    def shares(self):
        if self._elapsed <= 0.0:
            return dict.fromkeys(PHASES, 0.0)
        return {key: val / self._elapsed for key, val in self.totals.items()}


NULL_TIMER = PhaseTimer(enabled=False)


@dataclass
class WorkerStats:
    """
    Per-worker counters: visited tree nodes, deepest local stack and phase times.
    """

    worker_id: int = 0
    nodes: int = 0
    max_stack_depth: int = 0
    timer: PhaseTimer = field(default_factory=lambda: PhaseTimer(enabled=False))


@dataclass
class LoadReport:
    worker_nodes: list
    load_ratios: list
    phase_shares: dict
    max_stack_depth: list

    @property
    def max_load_ratio(self):
        return max(self.load_ratios) if self.load_ratios else 1.0

    @property
    def min_load_ratio(self):
        return min(self.load_ratios) if self.load_ratios else 1.0


def load_ratios(counts):
    """
    Visited-node count of each worker divided by the mean across workers.
    """

    counts = np.asarray(counts, dtype=np.float64)
    if counts.size == 0:
        return []
    mean = counts.mean()
    if mean == 0.0:
        return [1.0] * counts.size
    return (counts / mean).tolist()


def collect_metrics(workers):
    """
    Load distribution and time breakdown of a finished run.
    Phase shares are averaged across workers, the untracked remainder is reported as "other".
    """

    counts = [w.nodes for w in workers]
    shares = dict.fromkeys(PHASES, 0.0)
    for w in workers:
        for key, val in w.timer.shares().items():
            shares[key] += val / len(workers)
    shares["other"] = max(0.0, 1.0 - sum(shares.values()))

    return LoadReport(
        worker_nodes=counts,
        load_ratios=load_ratios(counts),
        phase_shares=shares,
        max_stack_depth=[w.max_stack_depth for w in workers],
    )

import logging
import threading
import time
from abc import abstractmethod
from dataclasses import dataclass
from typing import Optional

from metrics.load import PhaseTimer, WorkerStats, collect_metrics
from metrics.report import RunReport
from search.bounds import greedy_approx

from .worklist import SharedSolverState

logger = logging.getLogger(__name__)

STRATEGIES = ("seq", "stackonly", "hybrid", "oracle")


@dataclass
class SchedulerConfig:
    """
    Execution settings of a solve. threshold = round(threshold_fraction x worklist_capacity),
    never below 1.
    """

    num_workers: int = 8
    strategy: str = "hybrid"
    worklist_capacity: int = 131072
    threshold_fraction: float = 0.5
    stackonly_depth: int = 8
    backoff: float = 1e-4
    node_budget: Optional[int] = None
    timeout: Optional[float] = None
    phase_timing: bool = True

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError("unknown strategy '{}', expected one of {}".format(self.strategy, STRATEGIES))
        if self.num_workers < 1:
            raise ValueError("need at least one worker, got {}".format(self.num_workers))
        if self.worklist_capacity < 1:
            raise ValueError("worklist capacity must be >= 1, got {}".format(self.worklist_capacity))
        if not 0.0 < self.threshold_fraction <= 1.0:
            raise ValueError("threshold fraction must be in (0, 1], got {}".format(self.threshold_fraction))
        if self.stackonly_depth < 1:
            raise ValueError("StackOnly depth must be >= 1, got {}".format(self.stackonly_depth))
        if self.backoff < 0:
            raise ValueError("backoff must be >= 0, got {}".format(self.backoff))

    @property
    def threshold(self):
        return max(1, int(round(self.threshold_fraction * self.worklist_capacity)))

    @classmethod
    def from_config(cls, config):
        """
        Builds the typed settings from the 'solver', 'scheduler' and 'metrics' config sections.
        """

        sched = config["scheduler"]
        return cls(
            num_workers=sched["workers"],
            strategy=config["solver"]["strategy"],
            worklist_capacity=sched["worklist_capacity"],
            threshold_fraction=sched["threshold_fraction"],
            stackonly_depth=sched["stackonly_depth"],
            backoff=sched["backoff_us"] * 1e-6,
            node_budget=sched["node_budget"],
            timeout=sched["timeout_s"],
            phase_timing=config["metrics"]["phase_timing"],
        )


class BaseScheduler:
    """
    Base class for the parallel traversal strategies.
    Initializes best with the greedy cover, runs one thread per worker and gathers the report.
    """

    name = None

    def __init__(self, g, mode, config):
        self.g = g
        self.mode = mode
        self.config = config
        self.num_workers = config.num_workers
        self.depth_bound = None
        self.shared = None

    @abstractmethod
    def setup(self):
        """
        Seeds the shared structures before the workers start.
        """
        raise NotImplementedError

    @abstractmethod
    def work(self, stats):
        """
        Worker loop, returns once the traversal is over for this worker.
        """
        raise NotImplementedError

    def _worker_main(self, stats):
        stats.timer.start()
        try:
            self.work(stats)
        except Exception as e:
            logger.exception("Unhandled exception in worker %d", stats.worker_id)
            self.shared.fail(e)
        finally:
            stats.timer.stop()

    def run(self):
        t0 = time.perf_counter()

        greedy_size, greedy_cover = greedy_approx(self.g)
        if self.mode.is_pvc:
            self.shared = SharedSolverState(
                self.mode, self.mode.k + 1, None, self.config.node_budget, self.config.timeout
            )
        else:
            self.shared = SharedSolverState(
                self.mode, greedy_size, greedy_cover, self.config.node_budget, self.config.timeout
            )
        self.depth_bound = self.mode.depth_bound(greedy_size, self.g.num_vertices)
        self.setup()

        workers = [
            WorkerStats(worker_id=i, timer=PhaseTimer(self.config.phase_timing)) for i in range(self.num_workers)
        ]
        threads = [
            threading.Thread(target=self._worker_main, args=(stats,), name="{}-{}".format(self.name, i))
            for i, stats in enumerate(workers)
        ]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        if self.shared.error is not None:
            raise self.shared.error

        wall_ms = (time.perf_counter() - t0) * 1e3
        return self.report(workers, greedy_size, wall_ms)

    def report(self, workers, greedy_size, wall_ms):
        shared = self.shared
        load = collect_metrics(workers)
        if shared.best_cover is None:
            size, cover, feasible = None, [], False
        else:
            cover = sorted(self.g.labels[shared.best_cover].tolist())
            size, feasible = len(cover), shared.found if self.mode.is_pvc else True

        return RunReport(
            n=self.g.num_vertices,
            m=self.g.num_edges,
            mode=self.mode.kind,
            k=self.mode.k,
            strategy=self.name,
            workers=self.num_workers,
            backoff_us=self.config.backoff * 1e6,
            size=size,
            feasible=feasible,
            cover=cover,
            greedy_size=greedy_size,
            status=shared.status,
            wall_ms=wall_ms,
            visited_nodes=sum(load.worker_nodes),
            worker_nodes=load.worker_nodes,
            load_ratios=load.load_ratios,
            max_stack_depth=load.max_stack_depth,
            phase_shares=load.phase_shares,
        )

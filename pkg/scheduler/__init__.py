from .base import STRATEGIES, BaseScheduler, SchedulerConfig
from .hybrid import HybridScheduler, run_hybrid
from .sequential import run_oracle, run_sequential
from .stackonly import StackOnlyScheduler, run_stackonly
from .worklist import GlobalWorklist, SharedSolverState

RUNNERS = {
    "seq": run_sequential,
    "stackonly": run_stackonly,
    "hybrid": run_hybrid,
    "oracle": run_oracle,
}


def solve(g, mode, config):
    """
    Runs the strategy named by config.strategy.
    """

    return RUNNERS[config.strategy](g, mode, config)

from .load import PHASES, LoadReport, PhaseTimer, WorkerStats, collect_metrics
from .report import RunReport

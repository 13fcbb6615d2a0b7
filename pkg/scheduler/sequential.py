import time

from metrics.load import PhaseTimer, WorkerStats, collect_metrics
from metrics.report import RunReport
from search.oracle import brute_force_cover
from search.sequential import solve_mvc_seq, solve_pvc_seq


def run_sequential(g, mode, config):
    """
    Reference search reported through the same metrics as the parallel strategies (one worker).
    """

    stats = WorkerStats(timer=PhaseTimer(config.phase_timing))
    t0 = time.perf_counter()
    if mode.is_pvc:
        solution = solve_pvc_seq(g, mode.k, config.node_budget, config.timeout, stats)
    else:
        solution = solve_mvc_seq(g, config.node_budget, config.timeout, stats)
    wall_ms = (time.perf_counter() - t0) * 1e3
    load = collect_metrics([stats])

    return RunReport(
        n=g.num_vertices,
        m=g.num_edges,
        mode=mode.kind,
        k=mode.k,
        strategy="seq",
        workers=1,
        size=solution.size,
        feasible=solution.feasible,
        cover=sorted(solution.cover),
        greedy_size=solution.greedy_size,
        status=solution.status,
        wall_ms=wall_ms,
        visited_nodes=stats.nodes,
        worker_nodes=load.worker_nodes,
        load_ratios=load.load_ratios,
        max_stack_depth=load.max_stack_depth,
        phase_shares=load.phase_shares,
    )


def run_oracle(g, mode, config=None):
    """
    Exhaustive answer for small graphs (|V| <= 20), same report shape.
    """

    t0 = time.perf_counter()
    cover = brute_force_cover(g)
    wall_ms = (time.perf_counter() - t0) * 1e3
    feasible = True if not mode.is_pvc else len(cover) <= mode.k
    labels = g.labels[cover].tolist() if feasible else []

    return RunReport(
        n=g.num_vertices,
        m=g.num_edges,
        mode=mode.kind,
        k=mode.k,
        strategy="oracle",
        workers=1,
        size=len(labels) if feasible else None,
        feasible=feasible,
        cover=labels,
        wall_ms=wall_ms,
        worker_nodes=[0],
        load_ratios=[1.0],
        max_stack_depth=[0],
    )

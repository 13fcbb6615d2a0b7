import argparse
import itertools
import os
import sys

import mlflow
import pandas as pd

from configs.parser import YAMLParser
from dataloader import load_graph
from dataloader.utils import ProgressBar
from scheduler import SchedulerConfig, solve
from search.bounds import SolveMode
from utils.mlflow import log_config
from utils.utils import save_csv

PROBLEMS = {
    "mvc": None,
    "pvc_min-1": -1,
    "pvc_min": 0,
    "pvc_min+1": 1,
}


def strategy_configs(bench, strategy, base):
    """
    Scheduler configurations swept for one strategy.
    seq runs once; stackonly sweeps workers x depths; hybrid sweeps workers x capacities x fractions.
    """

    if strategy == "seq":
        return [SchedulerConfig(**dict(base, strategy="seq", num_workers=1))]
    if strategy == "stackonly":
        return [
            SchedulerConfig(**dict(base, strategy="stackonly", num_workers=w, stackonly_depth=d))
            for w, d in itertools.product(bench["workers"], bench["depths"])
        ]
    if strategy == "hybrid":
        return [
            SchedulerConfig(
                **dict(base, strategy="hybrid", num_workers=w, worklist_capacity=c, threshold_fraction=f)
            )
            for w, c, f in itertools.product(bench["workers"], bench["capacities"], bench["threshold_fractions"])
        ]
    raise ValueError("strategy '{}' can't be swept".format(strategy))


def config_label(sched):
    if sched.strategy == "stackonly":
        return "w{} d{}".format(sched.num_workers, sched.stackonly_depth)
    if sched.strategy == "hybrid":
        return "w{} c{} f{:g}".format(sched.num_workers, sched.worklist_capacity, sched.threshold_fraction)
    return "w{}".format(sched.num_workers)


def problem_modes(problems, min_size):
    """
    MVC plus the PVC instances around the minimum; k < 1 is skipped.
    """

    modes = []
    for name in problems:
        if name not in PROBLEMS:
            raise ValueError("unknown sweep problem '{}', expected one of {}".format(name, list(PROBLEMS)))
        offset = PROBLEMS[name]
        if offset is None:
            modes.append((name, SolveMode.mvc()))
        elif min_size is not None and min_size + offset >= 1:
            modes.append((name, SolveMode.pvc(min_size + offset)))
    return modes


def select_best(df):
    """
    Marks, per (instance, problem, strategy), the configuration with the lowest median wall time
    over its complete repeats.
    """

    df = df.copy()
    df["median_wall_ms"] = df.groupby(["instance", "problem", "strategy", "config"])["wall_ms"].transform("median")
    df["is_best"] = False
    done = df[df["status"] == "complete"]
    if len(done):
        medians = done.groupby(["instance", "problem", "strategy", "config"], as_index=False)["wall_ms"].median()
        best = medians.loc[medians.groupby(["instance", "problem", "strategy"])["wall_ms"].idxmin()]
        keys = set(zip(best["instance"], best["problem"], best["strategy"], best["config"]))
        df["is_best"] = [
            key in keys for key in zip(df["instance"], df["problem"], df["strategy"], df["config"])
        ]
    return df


def summary(df):
    """
    One line per (instance, problem, strategy): best configuration, its median wall time and
    worst load ratio.
    """

    best = df[df["is_best"]]
    if not len(best):
        return pd.DataFrame()
    return (
        best.groupby(["instance", "problem", "strategy"], as_index=False)
        .agg(
            config=("config", "first"),
            k=("k", "first"),
            size=("size", "first"),
            feasible=("feasible", "first"),
            median_wall_ms=("median_wall_ms", "first"),
            max_load_ratio=("max_load_ratio", "max"),
        )
        .sort_values(["instance", "problem", "strategy"])
    )


def speedup_path(output):
    return os.path.splitext(output)[0] + "_speedup.csv"


def degree_class(avg_degree, cutoff):
    return "high" if avg_degree >= cutoff else "low"


def speedups(df):
    """
    Hybrid speedup per (instance, problem) as ratios of the best median wall times,
    other / hybrid, so > 1 means Hybrid is faster.
    """

    best = df[df["is_best"]]
    if not len(best):
        return pd.DataFrame()
    keys = ["instance", "degree_class", "avg_degree", "problem"]
    table = (
        best.groupby(keys + ["strategy"])["median_wall_ms"].first().unstack("strategy").rename_axis(columns=None)
    ).reset_index()

    def ratio(other):
        if other not in table or "hybrid" not in table:
            return float("nan")
        return table[other] / table["hybrid"].where(table["hybrid"] > 0)

    table["hybrid_vs_stackonly"] = ratio("stackonly")
    table["hybrid_vs_seq"] = ratio("seq")
    return table.sort_values(keys)


def speedups_by_degree(table):
    """
    Median speedups per (degree category, problem).
    """

    if not len(table):
        return pd.DataFrame()
    return (
        table.groupby(["degree_class", "problem"], as_index=False)
        .agg(
            instances=("instance", "nunique"),
            hybrid_vs_stackonly=("hybrid_vs_stackonly", "median"),
            hybrid_vs_seq=("hybrid_vs_seq", "median"),
        )
        .sort_values(["degree_class", "problem"])
    )


def bench_sweep(args, config_parser):
    """
    Runs the configured sweep, writes one csv row per run and the Hybrid speedup table next to it.
    :return: path of the csv file
    """

    config = config_parser.config
    bench = config["bench"]
    verbose = config["vis"]["verbose"]
    output = args.output if args.output is not None else bench["output"]

    # asserts
    assert len(bench["instances"]) > 0, "Config error: no bench instances"
    assert bench["repeats"] >= 1, "Config error: bench repeats must be >= 1"

    base = {
        "backoff": config["scheduler"]["backoff_us"] * 1e-6,
        "node_budget": config["scheduler"]["node_budget"],
        "timeout": config["scheduler"]["timeout_s"],
        "phase_timing": config["metrics"]["phase_timing"],
    }
    reference = SchedulerConfig(
        **dict(base, strategy=bench["reference_strategy"], num_workers=max(bench["workers"]))
    )

    if not args.debug:
        if args.path_mlflow:
            mlflow.set_tracking_uri(args.path_mlflow)
        mlflow.set_experiment(config["experiment"])
        mlflow.start_run()
        log_config(config)

    rows = []
    min_sizes = {}
    for instance in bench["instances"]:
        name = instance.get("name", os.path.basename(instance["path"]))
        g = load_graph(instance["path"], instance.get("format", "edgelist"), instance.get("complement", False))
        avg_degree = 2 * g.num_edges / max(g.num_vertices, 1)
        if verbose:
            print("{}: |V|={}, |E|={}".format(name, g.num_vertices, g.num_edges))

        # the PVC instances need the minimum
        if name not in min_sizes:
            ref = solve(g, SolveMode.mvc(), reference)
            min_sizes[name] = ref.size if ref.complete else None
            if verbose:
                print("{}: min = {} ({})".format(name, min_sizes[name], ref.status))

        runs = [
            (problem, mode, sched, repeat)
            for problem, mode in problem_modes(bench["problems"], min_sizes[name])
            for strategy in bench["strategies"]
            for sched in strategy_configs(bench, strategy, base)
            for repeat in range(bench["repeats"])
        ]

        bar = ProgressBar(name, max=len(runs)) if config["vis"]["bars"] else None
        for problem, mode, sched, repeat in runs:
            meta = {
                "instance": name,
                "avg_degree": avg_degree,
                "degree_class": degree_class(avg_degree, bench["degree_cutoff"]),
                "problem": problem,
                "config": config_label(sched),
                "repeat": repeat,
            }
            try:
                report = solve(g, mode, sched)
                report.file = instance["path"]
                report.complemented = bool(instance.get("complement", False))
                rows.append(dict(meta, **report.to_row()))
            except Exception as e:
                # keep sweeping
                print("\n{} {} {}: {}".format(name, problem, meta["config"], e), file=sys.stderr)
                rows.append(
                    dict(meta, strategy=sched.strategy, workers=sched.num_workers, k=mode.k, status="error")
                )
            if bar is not None:
                bar.step("{} {}".format(name, problem))
        if bar is not None:
            bar.finish()

    df = select_best(pd.DataFrame(rows))
    df.to_csv(output, index=False)
    table = speedups(df)
    table.to_csv(speedup_path(output), index=False)
    if not args.debug:
        save_csv(df.to_dict("records"), os.path.basename(output))
        save_csv(table.to_dict("records"), os.path.basename(speedup_path(output)))
        mlflow.end_run()

    if verbose:
        print("\n" + summary(df).to_string(index=False))
        if len(table):
            print("\n" + speedups_by_degree(table).to_string(index=False))
        print("Sweep stored at " + output)

    return output


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--config",
        default="configs/bench_sweep.yml",
        help="sweep configuration",
    )
    parser.add_argument(
        "--output",
        default=None,
        help="csv file (bench.output if omitted)",
    )
    parser.add_argument(
        "--path_mlflow",
        default="",
        help="location of the mlflow ui",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="don't track the sweep with mlflow",
    )
    args = parser.parse_args()

    # launch sweep
    bench_sweep(args, YAMLParser(args.config))

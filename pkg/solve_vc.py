import argparse
import sys

import mlflow

from configs.parser import YAMLParser
from dataloader import LOADERS, load_graph
from scheduler import STRATEGIES, SchedulerConfig, solve
from search.bounds import MODES, SolveMode
from utils.mlflow import log_config, log_results
from utils.utils import write_report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCOMPLETE = 2

OUTPUTS = ("json", "csv", "text")


class ArgumentParser(argparse.ArgumentParser):
    """
    Usage errors exit with status 1 (argparse defaults to 2, reserved for incomplete runs).
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "{}: error: {}\n".format(self.prog, message))


def build_parser():
    parser = ArgumentParser(description="Exact minimum / parameterized vertex cover solver")
    parser.add_argument("--config", default=None, help="solve configuration (defaults if omitted)")
    parser.add_argument("--input", default=None, help="graph file")
    parser.add_argument("--format", default=None, choices=sorted(LOADERS.keys()), help="graph file format")
    parser.add_argument(
        "--complement", action="store_true", default=None, help="solve on the edge complement of the input"
    )
    parser.add_argument("--mode", default=None, choices=MODES, help="mvc: minimum cover, pvc: cover of size <= k")
    parser.add_argument("--k", type=int, default=None, help="cover size bound (pvc only)")
    parser.add_argument("--strategy", default=None, choices=STRATEGIES, help="traversal strategy")
    parser.add_argument("--workers", type=int, default=None, help="number of worker threads")
    parser.add_argument("--worklist-capacity", type=int, default=None, help="global worklist entries (hybrid)")
    parser.add_argument(
        "--threshold-fraction", type=float, default=None, help="donation threshold as fraction of capacity (hybrid)"
    )
    parser.add_argument("--depth", type=int, default=None, help="starting depth (stackonly)")
    parser.add_argument("--backoff-us", type=float, default=None, help="sleep on an empty worklist (hybrid)")
    parser.add_argument("--node-budget", type=int, default=None, help="stop after this many tree nodes")
    parser.add_argument("--timeout-s", type=float, default=None, help="stop after this many seconds")
    parser.add_argument(
        "--no-phase-timing",
        action="store_false",
        dest="phase_timing",
        default=None,
        help="skip per-phase timing and run the compiled search engine",
    )
    parser.add_argument("--output", default=None, choices=OUTPUTS, help="report format")
    parser.add_argument("--report", default=None, help="report file (stdout if omitted)")
    parser.add_argument("--path_mlflow", default="", help="location of the mlflow ui")
    parser.add_argument("--debug", action="store_true", help="don't track the run with mlflow")
    return parser


def config_error(message):
    print("Config error: " + message, file=sys.stderr)
    return EXIT_ERROR


def run(args, config_parser):
    """
    Loads the graph, solves it and writes the report.
    :return: exit status
    """

    config = config_parser.merge_args(args)
    verbose = config["vis"]["verbose"]

    # asserts
    if config["data"]["path"] is None:
        return config_error("no input graph, use --input or data.path")
    if config["solver"]["mode"] == "pvc" and config["solver"]["k"] is None:
        return config_error("pvc needs k, use --k or solver.k")
    if config["output"]["format"] not in OUTPUTS:
        return config_error("unknown output format '{}'".format(config["output"]["format"]))
    if args.depth is not None and config["solver"]["strategy"] != "stackonly":
        print("Config warning: --depth only applies to stackonly, ignored", file=sys.stderr)

    try:
        mode = SolveMode(config["solver"]["mode"], config["solver"]["k"])
        sched_config = SchedulerConfig.from_config(config)
        g = load_graph(config["data"]["path"], config["data"]["format"], config["data"]["complement"])
    except (ValueError, OSError) as e:
        return config_error(str(e))

    if verbose:
        print(
            "Loaded {}: |V|={}, |E|={}".format(config["data"]["path"], g.num_vertices, g.num_edges),
            file=sys.stderr,
        )

    if not args.debug:
        if args.path_mlflow:
            mlflow.set_tracking_uri(args.path_mlflow)
        mlflow.set_experiment(config["experiment"])
        mlflow.start_run()
        log_config(config)

    try:
        report = solve(g, mode, sched_config)
    except ValueError as e:
        if not args.debug:
            mlflow.end_run(status="FAILED")
        return config_error(str(e))

    report.file = config["data"]["path"]
    report.complemented = bool(config["data"]["complement"])

    if not args.debug:
        log_results(report)
        mlflow.end_run()

    write_report(report.render(config["output"]["format"]), config["output"]["report"])
    if verbose:
        print(
            "{}: size={} feasible={} in {:.3f} ms".format(report.status, report.size, report.feasible, report.wall_ms),
            file=sys.stderr,
        )

    return EXIT_OK if report.complete else EXIT_INCOMPLETE


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        config_parser = YAMLParser(args.config)
    except OSError as e:
        return config_error(str(e))
    return run(args, config_parser)


if __name__ == "__main__":
    sys.exit(main())

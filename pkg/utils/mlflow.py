import mlflow

from configs.parser import YAMLParser


def log_config(config):
    """
    Log the flattened configuration as parameters of the active MlFlow run.
    """

    params = {key: str(val) for key, val in YAMLParser.flatten(config).items()}
    params.pop("bench.instances", None)
    mlflow.log_params(params)


def log_results(report, fname="report.json"):
    """
    Log the numeric results of a solve as metrics and the full report as artifact.
    """

    metrics = {
        "wall_ms": report.wall_ms,
        "visited_nodes": report.visited_nodes,
        "max_load_ratio": report.max_load_ratio,
        "feasible": float(report.feasible),
    }
    if report.size is not None:
        metrics["size"] = report.size
    if report.greedy_size is not None:
        metrics["greedy_size"] = report.greedy_size
    for key, val in report.phase_shares.items():
        metrics["share_" + key] = val
    mlflow.log_metrics(metrics)
    mlflow.set_tag("status", report.status)
    mlflow.log_dict(report.to_dict(), fname)

import os

import mlflow
import pandas as pd


def write_report(text, path=None):
    """
    Writes a rendered report to path, or to stdout if no path is given.
    """

    if path is None:
        print(text, end="")
        return
    dirname = os.path.dirname(path)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname)
    with open(path, "w") as fid:
        fid.write(text)


def append_csv(rows, path):
    # header only on creation
    if not os.path.isfile(path):
        pd.DataFrame(rows).to_csv(path, index=False)
    else:
        pd.DataFrame(rows).to_csv(path, mode="a", header=False, index=False)


def save_csv(rows, fname):
    """
    Appends rows to a csv artifact of the active MlFlow run.
    """

    path = mlflow.get_artifact_uri(artifact_path=fname)
    if path[:7] == "file://":  # to_csv() doesn't work with 'file://'
        path = path[7:]
    if not os.path.isfile(path):
        mlflow.log_text("", fname)
    append_csv(rows, path)

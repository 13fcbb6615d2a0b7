import json
from dataclasses import asdict, dataclass, field, fields
from typing import Optional

import pandas as pd


@dataclass
class RunReport:
    """
    Outcome of one solve: input metadata, configuration echo, result, timing and load metrics.
    """

    # input
    file: str = ""
    n: int = 0
    m: int = 0
    complemented: bool = False

    # problem and configuration
    mode: str = "mvc"
    k: Optional[int] = None
    strategy: str = "seq"
    workers: int = 1
    capacity: Optional[int] = None
    threshold_fraction: Optional[float] = None
    depth: Optional[int] = None
    backoff_us: Optional[float] = None

    # result
    size: Optional[int] = None
    feasible: bool = True
    cover: list = field(default_factory=list)
    greedy_size: Optional[int] = None
    status: str = "complete"
    wall_ms: float = 0.0

    # load
    visited_nodes: int = 0
    worker_nodes: list = field(default_factory=list)
    load_ratios: list = field(default_factory=list)
    max_stack_depth: list = field(default_factory=list)
    phase_shares: dict = field(default_factory=dict)

    @property
    def complete(self):
        return self.status == "complete"

    @property
    def max_load_ratio(self):
        return max(self.load_ratios) if self.load_ratios else 1.0

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        return cls(**{key: val for key, val in data.items() if key in names})

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_row(self):
        """
        Flat record for CSV output: cover omitted, lists joined, phase shares as columns.
        """

        row = self.to_dict()
        row.pop("cover")
        shares = row.pop("phase_shares")
        for key in ("worker_nodes", "load_ratios", "max_stack_depth"):
            row[key] = " ".join("{:g}".format(val) for val in row[key])
        row["max_load_ratio"] = self.max_load_ratio
        for key, val in shares.items():
            row["share_" + key] = val
        return row

    def to_csv(self):
        return pd.DataFrame([self.to_row()]).to_csv(index=False)

    def to_text(self):
        lines = [
            "input:    {} (|V|={}, |E|={}{})".format(
                self.file or "-", self.n, self.m, ", complemented" if self.complemented else ""
            ),
            "problem:  {}{}".format(self.mode.upper(), "" if self.k is None else " k={}".format(self.k)),
            "strategy: {} x{}".format(self.strategy, self.workers),
            "status:   {}".format(self.status),
            "size:     {}".format(self.size),
            "feasible: {}".format(self.feasible),
            "wall:     {:.3f} ms".format(self.wall_ms),
            "nodes:    {} (max load ratio {:.3f})".format(self.visited_nodes, self.max_load_ratio),
        ]
        if self.phase_shares:
            shares = sorted(self.phase_shares.items(), key=lambda kv: -kv[1])
            lines.append("phases:   " + ", ".join("{} {:.1%}".format(k, v) for k, v in shares if v > 0))
        if self.cover:
            lines.append("cover:    " + " ".join(str(v) for v in self.cover))
        return "\n".join(lines) + "\n"

    def render(self, fmt="json"):
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError("unknown output format '{}'".format(fmt))

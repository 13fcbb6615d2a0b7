import yaml


class YAMLParser:
    """ YAML parser for vertex cover solve and benchmark config files """

    # CLI flag (argparse dest) -> (section, key)
    ARGS = {
        "input": ("data", "path"),
        "format": ("data", "format"),
        "complement": ("data", "complement"),
        "mode": ("solver", "mode"),
        "k": ("solver", "k"),
        "strategy": ("solver", "strategy"),
        "workers": ("scheduler", "workers"),
        "worklist_capacity": ("scheduler", "worklist_capacity"),
        "threshold_fraction": ("scheduler", "threshold_fraction"),
        "depth": ("scheduler", "stackonly_depth"),
        "backoff_us": ("scheduler", "backoff_us"),
        "node_budget": ("scheduler", "node_budget"),
        "timeout_s": ("scheduler", "timeout_s"),
        "phase_timing": ("metrics", "phase_timing"),
        "output": ("output", "format"),
        "report": ("output", "report"),
    }

    def __init__(self, config=None):
        self.reset_config()
        if config is not None:
            self.parse_config(config)

    def parse_config(self, file):
        with open(file) as fid:
            yaml_config = yaml.load(fid, Loader=yaml.FullLoader)
        self.parse_dict(yaml_config or {})

    @property
    def config(self):
        return self._config

    def reset_config(self):
        self._config = {}

        # MLFlow experiment name
        self._config["experiment"] = "Default"

        # input graph
        self._config["data"] = {}
        self._config["data"]["path"] = None
        self._config["data"]["format"] = "edgelist"
        self._config["data"]["complement"] = False

        # problem
        self._config["solver"] = {}
        self._config["solver"]["mode"] = "mvc"
        self._config["solver"]["k"] = None
        self._config["solver"]["strategy"] = "hybrid"

        # execution
        self._config["scheduler"] = {}
        self._config["scheduler"]["workers"] = 8
        self._config["scheduler"]["worklist_capacity"] = 131072
        self._config["scheduler"]["threshold_fraction"] = 0.5
        self._config["scheduler"]["stackonly_depth"] = 8
        self._config["scheduler"]["backoff_us"] = 100
        self._config["scheduler"]["node_budget"] = None
        self._config["scheduler"]["timeout_s"] = None

        # instrumentation
        self._config["metrics"] = {}
        self._config["metrics"]["phase_timing"] = True

        # report
        self._config["output"] = {}
        self._config["output"]["format"] = "json"
        self._config["output"]["report"] = None

        # console
        self._config["vis"] = {}
        self._config["vis"]["verbose"] = True
        self._config["vis"]["bars"] = True

        # benchmark sweep
        self._config["bench"] = {}
        self._config["bench"]["instances"] = []
        self._config["bench"]["problems"] = ["mvc", "pvc_min-1", "pvc_min", "pvc_min+1"]
        self._config["bench"]["strategies"] = ["seq", "stackonly", "hybrid"]
        self._config["bench"]["workers"] = [8]
        self._config["bench"]["depths"] = [8, 12, 16]
        self._config["bench"]["capacities"] = [131072, 262144, 524288]
        self._config["bench"]["threshold_fractions"] = [0.25, 0.5, 0.75, 1.0]
        self._config["bench"]["repeats"] = 1
        self._config["bench"]["reference_strategy"] = "hybrid"
        self._config["bench"]["degree_cutoff"] = 8.0
        self._config["bench"]["output"] = "bench_results.csv"

    def parse_dict(self, input_dict, parent=None):
        if parent is None:
            parent = self._config
        for key, val in input_dict.items():
            if isinstance(val, dict):
                if key not in parent.keys():
                    parent[key] = {}
                self.parse_dict(val, parent[key])
            else:
                parent[key] = val

    def merge_args(self, args):
        """
        Overwrites config entries with the command line flags that were given explicitly.
        """

        for dest, (section, key) in self.ARGS.items():
            val = getattr(args, dest, None)
            if val is not None:
                self._config[section][key] = val
        return self._config

    @staticmethod
    def flatten(config, prefix=""):
        """
        Flattens nested sections into dotted keys (mlflow params are flat).
        """

        flat = {}
        for key, val in config.items():
            if isinstance(val, dict):
                flat.update(YAMLParser.flatten(val, prefix + key + "."))
            else:
                flat[prefix + key] = val
        return flat

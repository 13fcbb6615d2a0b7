from progress.bar import Bar


class ProgressBar(Bar):
    """
    Sweep progress: runs done, elapsed time and remaining time estimate.
    """

    suffix = "%(index)d/%(max)d runs, %(elapsed_td)s elapsed, ETA: %(eta_td)s"

    def step(self, label=None):
        if label is not None:
            self.message = label
        self.next()

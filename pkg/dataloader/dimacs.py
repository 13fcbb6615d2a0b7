import numpy as np

from .base import BaseGraph, BaseGraphLoader, GraphFormatError


class DIMACSLoader(BaseGraphLoader):
    """
    Reader for the DIMACS ascii clique/coloring format (.clq, .col):
    'c' comment lines, one 'p edge N M' line and 'e u v' lines with 1-based ids.
    """

    def parse(self, stream):
        num_vertices = None
        us, vs = [], []
        for idx, line in enumerate(self.lines(stream)):
            tokens = line.split()
            if not tokens or tokens[0] == "c":
                continue

            if tokens[0] == "p":
                if num_vertices is not None:
                    raise GraphFormatError("duplicate problem line", idx + 1)
                if len(tokens) < 3:
                    raise GraphFormatError("expected 'p edge N M'", idx + 1)
                num_vertices = self.vertex_id(tokens[2], idx + 1)

            elif tokens[0] == "e":
                if num_vertices is None:
                    raise GraphFormatError("edge before the problem line", idx + 1)
                if len(tokens) < 3:
                    raise GraphFormatError("expected 'e u v'", idx + 1)
                u = self.vertex_id(tokens[1], idx + 1)
                v = self.vertex_id(tokens[2], idx + 1)
                for w in (u, v):
                    if w < 1 or w > num_vertices:
                        raise GraphFormatError(
                            "vertex {} out of range 1..{}".format(w, num_vertices), idx + 1
                        )
                us.append(u - 1)
                vs.append(v - 1)

            else:
                raise GraphFormatError("unknown line type '{}'".format(tokens[0]), idx + 1)

        if num_vertices is None:
            raise GraphFormatError("missing problem line 'p edge N M'")

        labels = np.arange(num_vertices) + 1
        return BaseGraph.from_edges(num_vertices, us, vs, labels)


def parse_dimacs(text):
    return DIMACSLoader().parse(text)

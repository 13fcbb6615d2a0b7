import re

import numpy as np

from .base import BaseGraph, BaseGraphLoader, GraphFormatError

# written by to_edge_list, keeps isolated vertices and the id base
HEADER = re.compile(r"^[#%]\s*vertices\s+(\d+)\s+base\s+(\d+)\s*$")


class EdgeListLoader(BaseGraphLoader):
    """
    Reader for plain "u v" edge lists (KONECT, SNAP and PACE style).
    Lines starting with '#' or '%' are comments, extra columns (weights, timestamps) are ignored.
    A '% vertices N base B' comment fixes the vertex count and the id base; without it,
    ids are 1-based if the smallest id in the file is 1, 0-based otherwise.
    """

    COMMENTS = ("#", "%")

    def parse(self, stream):
        header = None
        us, vs = [], []
        for idx, line in enumerate(self.lines(stream)):
            line = line.strip()
            if not line:
                continue
            if line.startswith(self.COMMENTS):
                match = HEADER.match(line)
                if match is not None:
                    if header is not None:
                        raise GraphFormatError("duplicate vertices header", idx + 1)
                    if us:
                        raise GraphFormatError("vertices header after the first edge", idx + 1)
                    header = int(match.group(1)), int(match.group(2))
                continue

            tokens = line.split()
            if len(tokens) < 2:
                raise GraphFormatError("expected 'u v', got '{}'".format(line), idx + 1)
            u = self.vertex_id(tokens[0], idx + 1)
            v = self.vertex_id(tokens[1], idx + 1)
            if header is not None:
                num_vertices, base = header
                for w in (u, v):
                    if w < base or w >= base + num_vertices:
                        raise GraphFormatError(
                            "vertex {} out of range {}..{}".format(w, base, base + num_vertices - 1), idx + 1
                        )
            us.append(u)
            vs.append(v)

        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if header is not None:
            num_vertices, base = header
        elif us.size == 0:
            num_vertices, base = 0, 0
        else:
            base = 1 if min(us.min(), vs.min()) == 1 else 0
            num_vertices = int(max(us.max(), vs.max())) + 1 - base
        labels = np.arange(num_vertices) + base
        return BaseGraph.from_edges(num_vertices, us - base, vs - base, labels)


def parse_edge_list(text):
    return EdgeListLoader().parse(text)

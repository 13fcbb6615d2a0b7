from abc import abstractmethod

import numpy as np
import scipy.sparse as sp


class GraphFormatError(ValueError):
    """
    Raised when an input graph file cannot be parsed.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class BaseGraph:
    """
    Immutable compressed sparse row adjacency of a finite, simple and undirected graph.
    Shared read-only by every worker of a run.
    :param offsets: [|V| + 1] array, offsets[v]..offsets[v + 1] delimits the neighbor slice of v
    :param neighbors: [2 x |E|] array of vertex ids, every slice sorted ascending
    :param labels: [|V|] array with the id of each vertex in the input file
    """

    def __init__(self, offsets, neighbors, labels=None):
        self.offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        self.neighbors = np.ascontiguousarray(neighbors, dtype=np.int64)
        self.num_vertices = len(self.offsets) - 1
        self.num_edges = int(self.offsets[-1]) // 2
        if labels is None:
            labels = np.arange(self.num_vertices)
        self.labels = np.ascontiguousarray(labels, dtype=np.int64)
        self.degrees = np.diff(self.offsets)

        for array in (self.offsets, self.neighbors, self.labels, self.degrees):
            array.flags.writeable = False

    @classmethod
    def from_edges(cls, num_vertices, us, vs, labels=None):
        """
        Builds the CSR structure from two endpoint arrays.
        Self-loops and duplicate pairs (in either orientation) are dropped.
        """

        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        keep = us != vs
        lo = np.minimum(us[keep], vs[keep])
        hi = np.maximum(us[keep], vs[keep])

        if num_vertices == 0 or lo.size == 0:
            offsets = np.zeros(num_vertices + 1, dtype=np.int64)
            return cls(offsets, np.zeros(0, dtype=np.int64), labels)

        pairs = np.unique(np.stack([lo, hi], axis=1), axis=0)
        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        adj = sp.csr_matrix(
            (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(num_vertices, num_vertices)
        )
        adj.sort_indices()
        return cls(adj.indptr, adj.indices, labels)

    def neighbors_of(self, v):
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def edges(self):
        """
        :return us, vs: [|E|] endpoint arrays with us < vs
        """

        us = np.repeat(np.arange(self.num_vertices), self.degrees)
        mask = us < self.neighbors
        return us[mask], self.neighbors[mask]

    def adjacency(self):
        data = np.ones(len(self.neighbors), dtype=np.int8)
        return sp.csr_matrix(
            (data, self.neighbors, self.offsets), shape=(self.num_vertices, self.num_vertices)
        )

    def index_of(self, labels):
        """
        Maps input-file ids back to dense vertex ids.
        """

        return np.searchsorted(self.labels, np.asarray(labels, dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, BaseGraph):
            return NotImplemented
        return (
            np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.neighbors, other.neighbors)
            and np.array_equal(self.labels, other.labels)
        )

    def __repr__(self):
        return "BaseGraph(|V|={}, |E|={})".format(self.num_vertices, self.num_edges)


class BaseGraphLoader:
    """
    Base class for graph readers.
    """

    def __init__(self, config=None):
        self.config = config

    @abstractmethod
    def parse(self, stream):
        raise NotImplementedError

    def load(self, path):
        with open(path) as fid:
            return self.parse(fid)

    @staticmethod
    def lines(stream):
        """
        Accepts either a whole string or an iterable of lines.
        """

        if isinstance(stream, str):
            return stream.splitlines()
        return stream

    @staticmethod
    def vertex_id(token, line):
        try:
            value = int(token)
        except ValueError:
            raise GraphFormatError("malformed vertex id '{}'".format(token), line) from None
        if value < 0:
            raise GraphFormatError("negative vertex id {}".format(value), line)
        return value

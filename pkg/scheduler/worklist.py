import threading
from collections import deque

from search.kernels import BEST, HALT, WORKLIST_SIZE
from search.sequential import SearchState
from search.state import cover_vertices


class GlobalWorklist:
    """
    Bounded pool through which workers donate deferred branches.
    Entries are removed in FIFO order. The termination check and the adds happen under the same
    condition lock, so a donation can never race past a "done" decision.
    :param board: optional kernel board, its WORKLIST_SIZE slot follows the pool size
    """

    def __init__(self, capacity, threshold, num_workers, board=None):
        self.capacity = capacity
        self.threshold = threshold
        self.num_workers = num_workers
        self.board = board
        self._entries = deque()
        self._cond = threading.Condition()
        self._waiting = 0
        self._done = False
        self.total_added = 0
        self.total_removed = 0

    @property
    def size(self):
        return len(self._entries)

    @property
    def done(self):
        return self._done

    def below_threshold(self):
        return len(self._entries) < self.threshold

    def _publish_size(self):
        if self.board is not None:
            self.board[WORKLIST_SIZE] = len(self._entries)

    def add(self, node):
        """
        :return: False if the pool is at capacity, the caller keeps the node
        """

        with self._cond:
            if len(self._entries) >= self.capacity:
                return False
            self._entries.append(node)
            self.total_added += 1
            self._publish_size()
            self._cond.notify()
            return True

    def remove_or_done(self, shared, backoff=1e-4):
        """
        Blocks until a node is available (returned) or the traversal is over (None).
        Over means: stop requested on the shared state, or the pool is empty while every
        worker is waiting here.
        """

        with self._cond:
            self._waiting += 1
            while True:
                if self._entries:
                    self._waiting -= 1
                    self.total_removed += 1
                    node = self._entries.popleft()
                    self._publish_size()
                    return node
                if self._done or shared.stopped:
                    return None
                if self._waiting == self.num_workers:
                    self._done = True
                    self._cond.notify_all()
                    return None
                self._cond.wait(timeout=backoff)

    def wake_all(self):
        with self._cond:
            self._cond.notify_all()


class SharedSolverState(SearchState):
    """
    Search state shared by all workers: best only decreases and is read without locking
    (a stale value prunes less, never wrongly). Certificate updates take the lock and re-check.
    """

    def __init__(self, mode, best, best_cover, node_budget=None, timeout_s=None):
        super().__init__(mode, best, best_cover, node_budget, timeout_s)
        self._lock = threading.Lock()
        self.error = None
        self.worklist = None

    def tick(self):
        if self.node_budget is None:
            if self.deadline is not None and not self.stopped:
                return super().tick()
            return not self.stopped
        with self._lock:
            return super().tick()

    def grant(self, wanted):
        with self._lock:
            return super().grant(wanted)

    def settle(self, granted, used):
        with self._lock:
            super().settle(granted, used)

    def abort(self, status):
        super().abort(status)
        if self.worklist is not None:
            self.worklist.wake_all()

    def fail(self, error):
        with self._lock:
            if self.error is None:
                self.error = error
        self.abort("error")

    def offer_cover(self, node):
        size = node.cover_count
        if not self.mode.is_pvc and size >= self.best:
            return False
        cover = cover_vertices(node)
        with self._lock:
            if self.mode.is_pvc:
                if self.found:
                    return False
                self.found = True
                self.board[HALT] = 1
            elif size >= self.best:
                return False
            else:
                self.board[BEST] = size
            self.best = size
            self.best_cover = cover
        if self.mode.is_pvc and self.worklist is not None:
            self.worklist.wake_all()
        return True

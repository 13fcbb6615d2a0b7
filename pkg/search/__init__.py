from .bounds import SolveMode, greedy_approx, is_cover_found, should_prune
from .oracle import GraphTooLargeError, brute_force_cover, brute_force_mvc
from .reductions import ReductionBound, reduce_fixpoint
from .sequential import Solution, solve_mvc_seq, solve_pvc_seq, verify_cover
from .state import REMOVED, LocalStack, SearchNode, StackOverflowError, init_root

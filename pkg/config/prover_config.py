"""
Configuration file for the prover
Defaults for every search, synthesis and testing budget, and the ProverConfig
bundle the engine and the command line share.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

# ============================================================================
# CONFIGURE PROOF SEARCH
# ============================================================================
DEFAULT_TIMEOUT = 60.0          # seconds per goal file
DEFAULT_SEED = 0
MAX_DEPTH = 12                  # goals per branch
GENERALIZE_CHECK_TESTS = 100    # tests run before trusting a generalized goal

# ============================================================================
# CONFIGURE DEDUCTIVE SOLVER
# ============================================================================
DEDUCT_DEPTH = 4                # premise rewrites per branch
DEDUCT_BUDGET = 20_000          # states explored per goal
FALSIFY_TESTS = 100
SPLIT_DEPTH = 3                 # nested case splits on conditions

# ============================================================================
# CONFIGURE SYNTHESIS
# ============================================================================
SYNTH_SIZE = 11                 # AST nodes
SYNTH_TESTS = 50                # tests per constructor task
SYNTH_VALIDATION_TESTS = 200    # fresh tests for the assembled lemma
MAX_CANDIDATES = 60_000         # retained enumeration candidates per task
SYNTH_CONSTANTS = (0, 1)

# ============================================================================
# CONFIGURE RANDOM TESTING
# ============================================================================
SIZE_BOUND = 6                  # constructors along the recursive spine
INT_RANGE = (-8, 8)
EVAL_FUEL = 200_000             # evaluation steps per term
MAX_VALUE_DEPTH = 128           # deeper ADT values count as running out of fuel
AUDIT_TESTS = 500               # soundness audit of proved reports


@dataclass(frozen=True)
class ProverConfig:
    timeout: float = DEFAULT_TIMEOUT
    seed: int = DEFAULT_SEED
    max_depth: int = MAX_DEPTH
    synth_size: int = SYNTH_SIZE
    synth_tests: int = SYNTH_TESTS
    synth_validation_tests: int = SYNTH_VALIDATION_TESTS
    max_candidates: int = MAX_CANDIDATES
    deduct_depth: int = DEDUCT_DEPTH
    deduct_budget: int = DEDUCT_BUDGET
    falsify_tests: int = FALSIFY_TESTS
    split_depth: int = SPLIT_DEPTH
    generalize_check_tests: int = GENERALIZE_CHECK_TESTS
    size_bound: int = SIZE_BOUND
    int_range: tuple[int, int] = INT_RANGE
    fuel: int = EVAL_FUEL

    def replace(self, **changes) -> ProverConfig:
        return replace(self, **changes)

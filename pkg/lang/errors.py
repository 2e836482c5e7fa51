"""
Errors - exception hierarchy shared by every package of the prover
"""


class ProverError(Exception):
    """Base class of every error raised by the prover"""


# ============================================================================
# INPUT ERRORS (cli exit code 3)
# ============================================================================

class SpecError(ProverError):
    """A spec file could not be turned into a well-formed Spec"""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, position: tuple[int, int] | None = None):
        self.position = position
        if position is not None:
            message = f"line {position[0]}, column {position[1]}: {message}"
        super().__init__(message)


class SpecTypeError(SpecError):
    def __init__(self, term, expected, found, message: str | None = None):
        self.term = term
        self.expected = expected
        self.found = found
        super().__init__(message or f"type error in {term}: expected {expected}, found {found}")


class NonExhaustiveMatch(SpecError):
    def __init__(self, csr: str, missing: str):
        self.csr = csr
        self.missing = missing
        super().__init__(f"{csr}: no branch for constructor {missing}")


class IllegalSelfCall(SpecError):
    def __init__(self, csr: str, offending):
        self.csr = csr
        self.offending = offending
        super().__init__(f"{csr}: self call {offending} is not structurally canonical")


class DuplicateName(SpecError):
    def __init__(self, name: str, what: str = "name"):
        self.name = name
        super().__init__(f"duplicate {what}: {name}")


class CyclicDefinition(SpecError):
    def __init__(self, names):
        self.names = tuple(names)
        super().__init__("definitions call each other: " + ", ".join(self.names))


# ============================================================================
# EVALUATION
# ============================================================================

class FuelExhausted(ProverError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"evaluation exceeded {budget} steps")


# ============================================================================
# REWRITING, SYNTHESIS AND SEARCH
# ============================================================================

class NotEligible(ProverError):
    """Every argument of the application is a leaf"""


class NotFriendly(ProverError):
    """The goal is not in the induction-friendly form the operation needs"""


class NotFound(ProverError):
    def __init__(self, size_bound: int):
        self.size_bound = size_bound
        super().__init__(f"no candidate up to size {size_bound}")


class SynthesisFailed(ProverError):
    pass


class NoExtraction(ProverError):
    pass


class NoCsrOccurrence(ProverError):
    pass


class ProgressViolation(ProverError):
    pass


class ProofTimeout(ProverError):
    pass


class ReplayError(ProverError):
    pass

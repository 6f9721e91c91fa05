"""Exception hierarchy shared by the sequence modules and the CLI."""


class SeqlabError(Exception):
    """Base class; the CLI maps any uncaught subclass to exit code 3."""

    reason = "runtime-error"


class BoundExhausted(SeqlabError):
    reason = "bound-exhausted"


class OutOfRange(SeqlabError):
    """An argument lies outside the range an algorithm is certified for."""

    reason = "out-of-range"


class PrecisionCeiling(SeqlabError):
    reason = "precision-ceiling"


class MemoryBudgetExceeded(SeqlabError):
    reason = "memory-budget"


class StepCapExceeded(SeqlabError):
    reason = "step-cap"


class GenerationError(SeqlabError):
    reason = "generation-error"


class PowertrainOverflow(SeqlabError):
    reason = "powertrain-overflow"


class BFileError(SeqlabError):
    reason = "bfile-parse"


class FetchError(SeqlabError):
    reason = "fetch-error"

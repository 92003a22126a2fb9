import logging
import os

logger = logging.getLogger(__name__)

invoker = 'matchpoly'

# The defaults of every recognised option. ``k`` bounds boundary, apex and
# adhesion sizes; ``oracle_cap`` fences the exponential enumeration oracle;
# ``work_limit`` fences the |G|^O(k) candidate loops of the table operations.
default_options = {
    'quiet': True,
    'k': 4,
    'oracle_cap': 20,
    'work_limit': 1_000_000,
    'threads': os.cpu_count() or 1,
}


class MatchpolyError(Exception):
    """Base class of all errors raised by matchpoly."""


# Parse errors (exit code 1)
class FormatError(MatchpolyError, ValueError):
    pass


# Validation errors (exit code 2)
class NotAMatching(MatchpolyError, ValueError):
    pass


class NotPerfect(MatchpolyError, ValueError):
    pass


class NotLaurent(MatchpolyError, ValueError):
    pass


class MalformedRotation(MatchpolyError, ValueError):
    pass


class NotPlanarEmbedding(MatchpolyError, ValueError):
    pass


class NotPlanar(MatchpolyError, ValueError):
    pass


class NotSkewSymmetric(MatchpolyError, ValueError):
    pass


class PreconditionViolated(MatchpolyError, ValueError):
    def __init__(self, clause, message):
        self.clause = clause
        super().__init__('{}: {}'.format(clause, message))


class OverlapViolated(PreconditionViolated):
    pass


class LabelMismatch(PreconditionViolated):
    pass


class MissingPs(MatchpolyError, ValueError):
    pass


class InvalidDecomposition(MatchpolyError, ValueError):
    pass


class ValidationFailed(InvalidDecomposition):
    def __init__(self, report):
        self.report = report
        super().__init__(report.describe())


class NotPlanarAfterApex(MatchpolyError, ValueError):
    pass


class GlueNotClique(MatchpolyError, ValueError):
    pass


class InvalidDrawing(MatchpolyError, ValueError):
    pass


# Arithmetic errors
class DivisionByZero(MatchpolyError, ZeroDivisionError):
    pass


class PoleAtPoint(MatchpolyError, ZeroDivisionError):
    pass


# Resource errors (exit code 3)
class TooLarge(MatchpolyError):
    pass


class TooLargeForFallback(TooLarge):
    pass


class WorkLimitExceeded(MatchpolyError):
    pass


# Internal invariant violations (exit code 4)
class EmbeddingBroken(MatchpolyError, RuntimeError):
    pass


def process_options(options=None):
    '''
    Fill in the defaults of ``options`` and validate the values. Unknown keys
    raise ValueError. Returns a new dict; the argument is not modified.
    '''
    if options is None:
        return dict(default_options)
    if not isinstance(options, dict):
        raise ValueError(f"Options must be provided as a dict, not '{type(options).__name__}'")
    unknown = sorted(set(options) - set(default_options))
    if unknown:
        raise ValueError(f"Unknown option '{unknown[0]}'; options must be among {', '.join(sorted(default_options))}")
    result = dict(default_options)
    result.update(options)
    result['quiet'] = bool(result['quiet'])
    for key in ('k', 'work_limit', 'threads'):
        if not isinstance(result[key], int) or isinstance(result[key], bool) or result[key] < 1:
            raise ValueError(f"Option '{key}' must be a positive integer, not {result[key]!r}")
    if not isinstance(result['oracle_cap'], int) or isinstance(result['oracle_cap'], bool) or result['oracle_cap'] < 0:
        raise ValueError(f"Option 'oracle_cap' must be a nonnegative integer, not {result['oracle_cap']!r}")
    return result


class WorkCounter:
    '''Counts enumerated candidates of one table operation against the work limit.'''

    def __init__(self, limit, operation):
        self.limit = limit
        self.operation = operation
        self.count = 0

    def tick(self):
        self.count += 1
        if self.count > self.limit:
            raise WorkLimitExceeded(
                '{}: {} enumerated more than {} candidate matchings'.format(invoker, self.operation, self.limit))

"""
Exceptions raised by the positivity library.

Every error carries a machine-readable ``code`` that management commands
copy into the JSON report, and an ``exit_status`` for the shell.
"""


class PositivityError(Exception):
    """Base class for all errors raised by the positivity app"""
    code = 'positivity_error'
    exit_status = 2

    def __init__(self, message: str, code: str = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code

    def as_dict(self):
        return {'code': self.code, 'message': self.message}


class InputError(PositivityError):
    """Malformed input, dimension mismatch or out-of-range index"""
    code = 'input_error'


class PreconditionError(PositivityError):
    """A mathematical precondition of the requested operation does not hold"""
    code = 'precondition_error'


class BudgetExhausted(PositivityError):
    """
    A bounded search ran out of budget.

    This is a failure to construct, never a refutation: a larger cap or
    retry budget may well succeed.
    """
    code = 'budget_exhausted'
    exit_status = 1

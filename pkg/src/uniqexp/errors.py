"""Exception hierarchy.

``InputError`` covers everything a caller can fix by changing the input
(the CLI maps it to exit code 2). ``DeciderDisagreement`` means two
independent deciders contradicted each other, which is a bug, never an
input problem (exit code 3).
"""


class InputError(ValueError):
    pass


class BaseTooSmallError(InputError):
    pass


class EmptyDigitsError(InputError):
    pass


class NegativeDigitError(InputError):
    pass


class DuplicateDigitError(InputError):
    pass


class PreconditionError(InputError):
    """Valid object, but outside the domain of the requested operation."""


class ResourceCapError(InputError):
    def __init__(self, message, cap):
        super().__init__(f"{message} (cap = {cap})")
        self.cap = cap


class DeciderDisagreement(RuntimeError):
    pass

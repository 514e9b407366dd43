"""Exception hierarchy shared by the services and the CLI."""

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3


class LRBError(Exception):
    """Base class for every failure the library reports on purpose."""

    exit_code = EXIT_DOMAIN


class ClosureCapExceededError(LRBError):
    def __init__(self, cap: int, what: str = "closure"):
        super().__init__(f"{what} exceeds the element cap of {cap}")
        self.cap = cap


class InconsistentOracleError(LRBError):
    pass


class NotALeftRegularBandError(LRBError):
    pass


class LemmaViolationError(LRBError):
    """Strict support drop or the sw reconstruction failed for some element."""

    def __init__(self, message: str, element: int):
        super().__init__(message)
        self.element = element


class HypothesisNotSatisfiedError(LRBError):
    def __init__(self, violation):
        upper, lower = violation
        super().__init__(
            f"distinct-eigenvalue hypothesis fails: ideals {upper} > {lower} share a lambda"
        )
        self.violation = violation


class InvalidMeasureError(LRBError):
    def __init__(self, message: str, element=None, total=None):
        super().__init__(message)
        self.element = element
        self.total = total


class InputError(LRBError, ValueError):
    exit_code = EXIT_INPUT


class UnknownLabelError(InputError):
    def __init__(self, label: str):
        super().__init__(f"unknown element label: {label!r}")
        self.label = label


class MalformedRationalError(InputError):
    def __init__(self, text: str):
        super().__init__(f"malformed rational: {text!r}")
        self.text = text

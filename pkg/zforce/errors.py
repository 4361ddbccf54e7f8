"""zforce errors - every failure raised by the package derives from ZforceError"""


class ZforceError(ValueError):
    """Base class for zforce errors"""


class GraphError(ZforceError):
    """Malformed graph input: bad vertex id, self-loop or empty graph"""


class CapExceededError(ZforceError):
    """An order or enumeration cap was exceeded"""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} {value} exceeds the configured cap of {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class FamilyError(ZforceError):
    """Unknown graph family or a parameter below the family minimum"""


class NotZeroForcingError(ZforceError):
    """A zero forcing precondition does not hold for the given set"""


class ConstructionError(ZforceError):
    """A published construction failed its self-validation"""

    def __init__(self, construction: str, diagnostic: str):
        super().__init__(f"{construction}: {diagnostic}")
        self.construction = construction
        self.diagnostic = diagnostic


class FormatError(ZforceError):
    """graph6 or edge-list input could not be decoded"""


class UnknownClaimError(ZforceError):
    """No verification driver is registered under the given claim id"""


class ConfigError(ZforceError):
    """Invalid limits or environment configuration"""


class UsageError(ZforceError):
    """Invalid command-line usage"""


__all__ = [
    'CapExceededError',
    'ConfigError',
    'ConstructionError',
    'FamilyError',
    'FormatError',
    'GraphError',
    'NotZeroForcingError',
    'UnknownClaimError',
    'UsageError',
    'ZforceError',
]

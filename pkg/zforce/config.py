"""zforce config - runtime caps shared by every module"""
import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from typing import Iterator, Optional

from .errors import CapExceededError, ConfigError

# Vertex sets are single machine words up to this order
HARD_ORDER_CAP = 64
# 2^n subset scans stop being desk scale past this order
HARD_ENUMERATION_CAP = 24
HARD_SWEEP_ORDER = 7


@dataclass(frozen=True)
class Limits:
    """Active caps and defaults; replace with configure() or override_limits()"""

    order_cap: int = 64
    enumeration_cap: int = 24
    enumeration_warn: int = 20
    fort_enumeration_cap: int = 24
    sweep_max_order: int = 6
    sweep_long_order: int = 7
    workers: int = 1
    seed: int = 0
    # tqdm bars on stderr for sweeps
    progress: bool = False

    def validate(self) -> "Limits":
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ConfigError(f"{f.name} must be non-negative, got {getattr(self, f.name)}")
        if not 1 <= self.order_cap <= HARD_ORDER_CAP:
            raise ConfigError(f"order_cap must lie in 1..{HARD_ORDER_CAP}, got {self.order_cap}")
        if not 1 <= self.enumeration_cap <= HARD_ENUMERATION_CAP:
            raise ConfigError(
                f"enumeration_cap must lie in 1..{HARD_ENUMERATION_CAP}, got {self.enumeration_cap}"
            )
        if not 1 <= self.fort_enumeration_cap <= HARD_ENUMERATION_CAP:
            raise ConfigError(
                f"fort_enumeration_cap must lie in 1..{HARD_ENUMERATION_CAP}, "
                f"got {self.fort_enumeration_cap}"
            )
        if self.sweep_long_order > HARD_SWEEP_ORDER:
            raise ConfigError(f"sweep_long_order must be at most {HARD_SWEEP_ORDER}")
        if self.sweep_max_order > self.sweep_long_order:
            raise ConfigError("sweep_max_order cannot exceed sweep_long_order")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        return self


_ENVIRONMENT = {
    "ZFORCE_ORDER_CAP": "order_cap",
    "ZFORCE_ENUMERATION_CAP": "enumeration_cap",
    "ZFORCE_WORKERS": "workers",
    "ZFORCE_SEED": "seed",
}


def _from_environment() -> Limits:
    changes = {}
    for variable, name in _ENVIRONMENT.items():
        raw = os.environ.get(variable)
        if raw is None or raw == "":
            continue
        try:
            changes[name] = int(raw)
        except ValueError:
            raise ConfigError(f"{variable} must be an integer, got {raw!r}") from None
    return replace(Limits(), **changes).validate()


# Global state
_limits: Optional[Limits] = None


def get_limits() -> Limits:
    """Active limits, read from the environment on first use"""
    global _limits
    if _limits is None:
        _limits = _from_environment()
    return _limits


def configure(**changes) -> Limits:
    """Replace individual limits for the rest of the process"""
    global _limits
    try:
        _limits = replace(get_limits(), **changes).validate()
    except TypeError as e:
        raise ConfigError(str(e)) from None
    return _limits


@contextmanager
def override_limits(**changes) -> Iterator[Limits]:
    """Temporarily replace limits; the previous limits come back on exit"""
    global _limits
    previous = get_limits()
    try:
        yield configure(**changes)
    finally:
        _limits = previous


def check_order(n: int, what: str = "graph order") -> None:
    cap = get_limits().order_cap
    if n > cap:
        raise CapExceededError(what, n, cap)


def check_enumeration(n: int, what: str = "enumeration order") -> None:
    cap = get_limits().enumeration_cap
    if n > cap:
        raise CapExceededError(what, n, cap)


__all__ = [
    'HARD_ENUMERATION_CAP',
    'HARD_ORDER_CAP',
    'HARD_SWEEP_ORDER',
    'Limits',
    'check_enumeration',
    'check_order',
    'configure',
    'get_limits',
    'override_limits',
]

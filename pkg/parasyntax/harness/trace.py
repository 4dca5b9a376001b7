"""
Observable behaviour of a program run.

Two runs behave the same when their traces are equal event for event.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional, Tuple, Union

__all__ = [
    "Call",
    "DEFAULT_FUEL",
    "Event",
    "MAX_CALL_DEPTH",
    "Mark",
    "Print",
    "Return",
    "Trace",
    "Trap",
    "TrapKind",
    "Trapped",
]

DEFAULT_FUEL = 100_000
MAX_CALL_DEPTH = 64


class TrapKind(Enum):
    Fuel = "fuel"
    DivZero = "div-zero"
    Bounds = "bounds"
    Type = "type"
    Unbound = "unbound"
    StackOverflow = "stack-overflow"
    BadInit = "bad-init"


@dataclass(frozen=True)
class Print:
    value: Any

    def __str__(self):
        return f"print {self.value!r}"


@dataclass(frozen=True)
class Call:
    """A call to a function the program does not define."""

    name: str
    args: Tuple[Any, ...]

    def __str__(self):
        return f"call {self.name}{self.args!r}"


@dataclass(frozen=True)
class Return:
    value: Any

    def __str__(self):
        return f"return {self.value!r}"


@dataclass(frozen=True)
class Trap:
    kind: TrapKind

    def __str__(self):
        return f"trap {self.kind.value}"


@dataclass(frozen=True)
class Mark:
    """A store into the coverage array."""

    index: int

    def __str__(self):
        return f"mark {self.index}"


Event = Union[Print, Call, Return, Trap, Mark]


class Trapped(Exception):
    def __init__(self, kind: TrapKind):
        self.kind = kind
        super().__init__(kind.value)


@dataclass
class Trace:
    events: List[Event] = field(default_factory=list)

    def erase_markers(self) -> "Trace":
        return Trace([e for e in self.events if not isinstance(e, Mark)])

    @property
    def marks(self) -> List[int]:
        return [e.index for e in self.events if isinstance(e, Mark)]

    @property
    def trap(self) -> Optional[TrapKind]:
        last = self.events[-1] if self.events else None
        return last.kind if isinstance(last, Trap) else None

    def first_difference(self, other: "Trace") -> Optional[int]:
        """Index of the first differing event, absent when the traces are equal."""
        for i, (a, b) in enumerate(zip(self.events, other.events)):
            if a != b:
                return i
        if len(self.events) != len(other.events):
            return min(len(self.events), len(other.events))
        return None

    def __len__(self):
        return len(self.events)

    def __str__(self):
        return "\n".join(map(str, self.events))

"""
Sorts classify term positions.

.. code-block:: python

    from parasyntax.terms import Atomic, ListOf
    ListOf(Atomic("BlockItemL")) == ListOf(Atomic("BlockItemL"))  # True
    str(ListOf(Atomic("BlockItemL")))  # "[BlockItemL]"
"""
from dataclasses import dataclass
from enum import Enum

INT_MIN = -(2 ** 63)
INT_MAX = 2 ** 63 - 1

__all__ = [
    "INT_MAX",
    "INT_MIN",
    "Atomic",
    "ListOf",
    "OptionOf",
    "PairOf",
    "Prim",
    "Sort",
    "prim_sort",
]


class Sort:
    """Base class of the sort shapes; equality is structural."""


@dataclass(frozen=True)
class Atomic(Sort):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ListOf(Sort):
    elem: Sort

    def __str__(self):
        return f"[{self.elem}]"


@dataclass(frozen=True)
class PairOf(Sort):
    first: Sort
    second: Sort

    def __str__(self):
        return f"({self.first}, {self.second})"


@dataclass(frozen=True)
class OptionOf(Sort):
    elem: Sort

    def __str__(self):
        return f"?{self.elem}"


class Prim(Enum):
    """Primitive payload types. Int is 64-bit signed."""

    Int = "Int"
    Bool = "Bool"
    String = "String"

    def accepts(self, value) -> bool:
        if self is Prim.Int:
            # bool is a subclass of int
            return (
                isinstance(value, int)
                and not isinstance(value, bool)
                and INT_MIN <= value <= INT_MAX
            )
        if self is Prim.Bool:
            return isinstance(value, bool)
        return isinstance(value, str)


def prim_sort(prim: Prim) -> Atomic:
    """Sort of the leaf terms boxing a primitive inside a container."""
    return Atomic(f"#{prim.value}")

"""
Schemas: families of mutually recursive algebraic data types, and the neutral
`GenericValue` encoding of their values.

Lists are encoded as Python tuples and pairs as 2-tuples; which one a tuple is
depends on the schema type at its position.
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Tuple

from cached_property import cached_property

from ..terms import Prim

__all__ = [
    "ConstructorDecl",
    "GenericValue",
    "ListT",
    "Named",
    "PairT",
    "PrimT",
    "Schema",
    "SchemaType",
    "TypeApp",
    "TypeDef",
]


class SchemaType:
    pass


@dataclass(frozen=True)
class PrimT(SchemaType):
    prim: Prim

    def __str__(self):
        return self.prim.value


@dataclass(frozen=True)
class Named(SchemaType):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ListT(SchemaType):
    elem: SchemaType

    def __str__(self):
        return f"[{self.elem}]"


@dataclass(frozen=True)
class PairT(SchemaType):
    first: SchemaType
    second: SchemaType

    def __str__(self):
        return f"({self.first},{self.second})"


@dataclass(frozen=True)
class TypeApp(SchemaType):
    """Applicative surface syntax, e.g. `(List Int)`; normalized after validation."""

    head: str
    args: Tuple[SchemaType, ...]

    def __str__(self):
        if not self.args:
            return self.head
        return "(" + " ".join([self.head, *map(str, self.args)]) + ")"


@dataclass(frozen=True)
class ConstructorDecl:
    name: str
    args: Tuple[SchemaType, ...]

    def __str__(self):
        return " ".join([self.name, *map(str, self.args)])


@dataclass(frozen=True)
class TypeDef:
    name: str
    constructors: Tuple[ConstructorDecl, ...]

    def __str__(self):
        return f"type {self.name} = " + " | ".join(map(str, self.constructors))


@dataclass(frozen=True)
class Schema:
    name: str
    """Namespace of the generated kinds and sorts."""
    types: Tuple[TypeDef, ...]
    root: str

    @cached_property
    def type_defs(self) -> Dict[str, Tuple[ConstructorDecl, ...]]:
        return {t.name: t.constructors for t in self.types}

    @cached_property
    def owner(self) -> Dict[str, str]:
        """Constructor name to the name of the type it builds."""
        return {c.name: t.name for t in self.types for c in t.constructors}

    def constructors(self) -> Iterator[Tuple[str, ConstructorDecl]]:
        for t in self.types:
            for c in t.constructors:
                yield t.name, c

    def constructor(self, name: str) -> Optional[ConstructorDecl]:
        for _, c in self.constructors():
            if c.name == name:
                return c
        return None

    def __str__(self):
        return "\n".join(map(str, self.types))


@dataclass(frozen=True)
class GenericValue:
    """A value of an original AST: a constructor name and its arguments."""

    ctor: str
    args: Tuple[Any, ...] = ()

    def __str__(self):
        return f"{self.ctor}({', '.join(_show(a) for a in self.args)})"


def _show(value) -> str:
    if isinstance(value, tuple):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    if isinstance(value, str):
        return repr(value)
    return str(value)

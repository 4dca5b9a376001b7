"""
Kind checking of schemas.

Every constructor argument must have kind `*`: primitives and declared type names
are `*`, `List` is `* -> *` and `Pair` is `* -> * -> *`. Violations are reported
with the rule that failed rather than raised, so a caller sees all of them.
"""
from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from ..terms import Prim
from .types import ListT, Named, PairT, PrimT, Schema, SchemaType, TypeApp

__all__ = ["ValidationReport", "Violation", "normalize_type", "validate_schema"]

PRIMS = {p.value: p for p in Prim}
ARITIES = {"List": 1, "Pair": 2}


@dataclass(frozen=True)
class Violation:
    rule: str
    """One of PRIM, CON, LIST, PAIR, APP, DECL."""
    error: str
    where: str
    detail: str

    def __str__(self):
        return f"[{self.rule}] {self.error} in {self.where}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def errors(self) -> List[str]:
        return [v.error for v in self.violations]

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(map(str, self.violations))


def _check(t: SchemaType, defined: Set[str], where: str) -> Iterator[Violation]:
    if isinstance(t, PrimT):
        return
    if isinstance(t, Named):
        if t.name not in defined:
            yield Violation("CON", "UnknownTypeName", where, t.name)
    elif isinstance(t, ListT):
        yield from _check(t.elem, defined, where)
    elif isinstance(t, PairT):
        yield from _check(t.first, defined, where)
        yield from _check(t.second, defined, where)
    elif isinstance(t, TypeApp):
        if t.head in ARITIES:
            if len(t.args) != ARITIES[t.head]:
                yield Violation(
                    t.head.upper(),
                    "BadArity",
                    where,
                    f"{t.head} needs {ARITIES[t.head]} argument(s), got {len(t.args)}",
                )
        elif t.head in PRIMS:
            if t.args:
                yield Violation("PRIM", "PrimitiveApplied", where, str(t))
        elif t.head not in defined:
            yield Violation("CON", "UnknownTypeName", where, t.head)
        elif t.args:
            yield Violation("APP", "NotAConstructor", where, str(t))
        for arg in t.args:
            yield from _check(arg, defined, where)


def validate_schema(schema: Schema) -> ValidationReport:
    violations: List[Violation] = []
    defined: Set[str] = set()
    constructors: Set[str] = set()
    for typedef in schema.types:
        if typedef.name in defined:
            violations.append(
                Violation("DECL", "DuplicateType", typedef.name, typedef.name)
            )
        defined.add(typedef.name)
    if schema.root not in defined:
        violations.append(Violation("DECL", "UnknownTypeName", "root", schema.root))
    for type_name, ctor in schema.constructors():
        if ctor.name in constructors:
            violations.append(
                Violation("DECL", "DuplicateConstructor", type_name, ctor.name)
            )
        constructors.add(ctor.name)
        for arg in ctor.args:
            violations.extend(_check(arg, defined, ctor.name))
    return ValidationReport(tuple(violations))


def normalize_type(t: SchemaType) -> SchemaType:
    """Rewrite applicative forms into ListT/PairT/PrimT/Named; `t` must be valid."""
    if isinstance(t, ListT):
        return ListT(normalize_type(t.elem))
    if isinstance(t, PairT):
        return PairT(normalize_type(t.first), normalize_type(t.second))
    if isinstance(t, TypeApp):
        args = [normalize_type(a) for a in t.args]
        if t.head == "List":
            return ListT(args[0])
        if t.head == "Pair":
            return PairT(args[0], args[1])
        if t.head in PRIMS:
            return PrimT(PRIMS[t.head])
        return Named(t.head)
    return t

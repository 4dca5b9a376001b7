"""
Reader for the schema file format.

.. code-block:: text

    # comments run to the end of the line
    type Arith = Add Atom Atom
    type Atom = Var String | Const Lit
    type Lit = Lit Int

Constructor arguments are `Int`, `Bool`, `String`, a type name, `[t]`, `(t,u)`,
or the applicative forms `(List t)` and `(Pair t u)`. A definition may continue
on following lines that start with `|`. A `root <Name>` line selects the root
type; otherwise the first definition is the root.
"""
import re
from pathlib import Path
from typing import List, Optional, Tuple

from ..errors import SchemaSyntaxError, SourceError
from ..terms import Prim
from .types import (
    ConstructorDecl,
    ListT,
    Named,
    PairT,
    PrimT,
    Schema,
    SchemaType,
    TypeApp,
    TypeDef,
)

__all__ = ["load_schema", "parse_schema"]

TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")
PRIMS = {p.value: p for p in Prim}


def _tokenize(text: str, line: int) -> List[str]:
    tokens = []
    for match in TOKEN.finditer(text):
        word, char = match.groups()
        if word:
            tokens.append(word)
        elif char and not char.isspace():
            if char not in "[](),|=":
                raise SchemaSyntaxError(line, f"unexpected character {char!r}")
            tokens.append(char)
    return tokens


class _Reader:
    def __init__(self, tokens: List[str], line: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        token = self.peek()
        if token is None:
            raise SchemaSyntaxError(self.line, "unexpected end of line")
        self.pos += 1
        return token

    def expect(self, token: str):
        found = self.next()
        if found != token:
            raise SchemaSyntaxError(self.line, f"expected {token!r}, found {found!r}")

    def name(self) -> str:
        token = self.next()
        if not (token[0].isalpha() or token[0] == "_"):
            raise SchemaSyntaxError(self.line, f"expected a name, found {token!r}")
        return token

    def atom(self) -> SchemaType:
        token = self.peek()
        if token == "[":
            self.next()
            elem = self.atom()
            self.expect("]")
            return ListT(elem)
        if token == "(":
            self.next()
            first = self.atom()
            if self.peek() == ",":
                self.next()
                second = self.atom()
                self.expect(")")
                return PairT(first, second)
            args = []
            while self.peek() != ")":
                args.append(self.atom())
            self.next()
            if not args:
                return first
            if not isinstance(first, (Named, PrimT, TypeApp)) or (
                isinstance(first, TypeApp) and first.args
            ):
                raise SchemaSyntaxError(self.line, f"cannot apply {first}")
            return TypeApp(str(first), tuple(args))
        name = self.name()
        if name in ("List", "Pair"):
            return TypeApp(name, ())
        if name in PRIMS:
            return PrimT(PRIMS[name])
        return Named(name)

    def constructor(self) -> ConstructorDecl:
        name = self.name()
        args = []
        while self.peek() not in (None, "|"):
            args.append(self.atom())
        return ConstructorDecl(name, tuple(args))

    def alternatives(self) -> List[ConstructorDecl]:
        constructors = [self.constructor()]
        while self.peek() == "|":
            self.next()
            constructors.append(self.constructor())
        return constructors


def parse_schema(text: str, name: str) -> Schema:
    types: List[Tuple[str, List[ConstructorDecl]]] = []
    root = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = _tokenize(line, number)
        reader = _Reader(tokens, number)
        head = reader.peek()
        if head == "type":
            reader.next()
            type_name = reader.name()
            reader.expect("=")
            types.append((type_name, reader.alternatives()))
        elif head == "|":
            if not types:
                raise SchemaSyntaxError(number, "continuation before any definition")
            reader.next()
            types[-1][1].extend(reader.alternatives())
        elif head == "root":
            reader.next()
            root = reader.name()
        else:
            raise SchemaSyntaxError(number, f"expected 'type', found {head!r}")
        if reader.peek() is not None:
            raise SchemaSyntaxError(number, f"trailing {reader.peek()!r}")
    if not types:
        raise SchemaSyntaxError(1, "empty schema")
    return Schema(
        name=name,
        types=tuple(TypeDef(t, tuple(cs)) for t, cs in types),
        root=root or types[0][0],
    )


def load_schema(path: Path, name: Optional[str] = None) -> Schema:
    """Read a schema file; the namespace defaults to the file stem."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SourceError.from_error(path, e) from e
    return parse_schema(text, name or path.stem)

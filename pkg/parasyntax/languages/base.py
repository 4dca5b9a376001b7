"""
Shared machinery of the mini-language frontends: a regex tokenizer, a
recursive-descent parser base, printer helpers, and :class:`LanguageDef`, which
ties a schema, its IPS signature, its injections and its operations together.
"""
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

from cached_property import cached_property

from ..errors import ParseError, UnrepresentableTerm
from ..fragments import GENERIC_SIGNATURE, RESERVED_SORTS, LanguageOps
from ..injections import InjectionTable
from ..schema import (
    GenericValue,
    ModularizedLanguage,
    Schema,
    from_modular,
    load_schema,
    modularize_schema,
    sum_signatures,
    to_modular,
)
from ..terms import INT_MAX, Atomic, NodeKind, Signature, Sort, Term, extract_list, walk
from ..traversal import rewrite, transform_bottom_up

__all__ = [
    "LanguageDef",
    "Lexer",
    "Parser",
    "Printer",
    "Token",
    "indent",
    "injection_kind",
    "list_paths",
]

logger = logging.getLogger(__name__)

INDENT = "  "


@dataclass(frozen=True)
class Token:
    kind: str
    """One of `int`, `name`, `string`, `op` and `eof`."""
    text: str
    line: int
    col: int


class Lexer:
    """
    Longest-match tokenizer over a fixed operator set.

    .. code-block:: python

        lexer = Lexer(["==", "=", ";"], comment="//")
        lexer.tokenize("x == 1;")
    """

    def __init__(self, operators: Sequence[str], comment: str):
        ops = "|".join(re.escape(op) for op in sorted(operators, key=len, reverse=True))
        patterns = [
            ("comment", re.escape(comment) + r"[^\n]*"),
            ("newline", r"\n"),
            ("skip", r"[ \t\r]+"),
            ("int", r"[0-9]+"),
            ("name", r"[A-Za-z_][A-Za-z0-9_]*"),
            ("string", r'"(?:[^"\\\n]|\\.)*"'),
            ("op", ops),
            ("mismatch", r"."),
        ]
        self.regex = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in patterns))

    def tokenize(self, text: str) -> List[Token]:
        tokens = []
        line, line_start = 1, 0
        for match in self.regex.finditer(text):
            kind = match.lastgroup
            col = match.start() - line_start + 1
            if kind == "newline":
                line, line_start = line + 1, match.end()
            elif kind == "mismatch":
                raise ParseError(line, col, "a token", match.group())
            elif kind not in ("skip", "comment"):
                tokens.append(Token(kind, match.group(), line, col))
        tokens.append(Token("eof", "", line, len(text) - line_start + 1))
        return tokens


class Parser:
    """Recursive-descent parser base over a token list."""

    keywords: FrozenSet[str] = frozenset()

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != "eof":
            self.pos += 1
        return token

    def at(self, *texts: str, offset: int = 0) -> bool:
        token = self.peek(offset)
        return token.kind in ("op", "name") and token.text in texts

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(repr(text))
        return self.advance()

    def error(self, expected: str) -> ParseError:
        token = self.peek()
        found = token.text if token.kind != "eof" else "end of input"
        return ParseError(token.line, token.col, expected, found)

    def at_name(self) -> bool:
        token = self.peek()
        return token.kind == "name" and token.text not in self.keywords

    def name(self) -> str:
        if not self.at_name():
            raise self.error("an identifier")
        return self.advance().text

    def integer(self) -> int:
        token = self.peek()
        if token.kind != "int":
            raise self.error("an integer")
        value = int(token.text)
        if value > INT_MAX:
            raise self.error("an integer that fits in 64 bits")
        self.advance()
        return value

    def separated(self, item: Callable[[], object], close: str, sep: str = ",") -> tuple:
        """Items separated by `sep` up to (and including) `close`."""
        items = []
        if not self.accept(close):
            items.append(item())
            while self.accept(sep):
                items.append(item())
            self.expect(close)
        return tuple(items)

    def binary(
        self, levels: Sequence[Sequence[str]], operand: Callable[[], GenericValue], level: int = 0
    ) -> GenericValue:
        """Left-associative binary operators, `levels` from loosest to tightest."""
        if level == len(levels):
            return operand()
        left = self.binary(levels, operand, level + 1)
        while self.at(*levels[level]):
            op = self.advance().text
            right = self.binary(levels, operand, level + 1)
            left = GenericValue("Binary", (op, left, right))
        return left

    def finish(self, value):
        if self.peek().kind != "eof":
            raise self.error("end of input")
        return value


def indent(lines: Sequence[str]) -> List[str]:
    return [INDENT + line for line in lines]


class Printer:
    """Expression printing with minimal parentheses, driven by precedence tables."""

    binary_precedence: Dict[str, int] = {}
    unary_precedence = 0
    postfix_precedence = 0

    def render(self, e: GenericValue) -> Tuple[str, int]:
        raise NotImplementedError

    def expr(self, e: GenericValue, min_prec: int = 0) -> str:
        text, prec = self.render(e)
        return f"({text})" if prec < min_prec else text

    def binary(self, e: GenericValue) -> Tuple[str, int]:
        op, left, right = e.args
        prec = self.binary_precedence[op]
        return f"{self.expr(left, prec)} {op} {self.expr(right, prec + 1)}", prec

    def args(self, es: Sequence[GenericValue]) -> str:
        return ", ".join(self.expr(e) for e in es)


class LanguageDef(ABC):
    """
    A registered mini-language.

    The IPS signature is the modularized signature without the kinds in `removed`,
    plus the generic fragments and the language's injection kinds. `trans_rules` and
    `untrans_rules` map kind names to node translations applied bottom-up.
    """

    name: str
    extension: str
    removed: Tuple[str, ...] = ()

    @property
    @abstractmethod
    def schema_path(self) -> Path:
        pass

    @abstractmethod
    def parse(self, text: str) -> GenericValue:
        pass

    @abstractmethod
    def pretty(self, ast: GenericValue) -> str:
        pass

    @abstractmethod
    def injection_kinds(self) -> List[NodeKind]:
        pass

    @abstractmethod
    def declare_injections(self, table: InjectionTable) -> InjectionTable:
        pass

    @abstractmethod
    def make_ops(self) -> LanguageOps:
        pass

    @abstractmethod
    def trans_rules(self) -> Dict[str, Callable[[Term], Term]]:
        pass

    @abstractmethod
    def untrans_rules(self) -> Dict[str, Callable[[Term], Term]]:
        pass

    @cached_property
    def schema(self) -> Schema:
        return load_schema(self.schema_path, self.name)

    @cached_property
    def modular(self) -> ModularizedLanguage:
        return modularize_schema(self.schema)

    @cached_property
    def signature(self) -> Signature:
        generated = set(self.modular.sort_of.values())
        assert not generated & RESERVED_SORTS, f"{self.name} redefines a generic sort"
        return sum_signatures(
            f"{self.name}.IPS",
            [self.modular.signature, GENERIC_SIGNATURE],
            minus=[f"{self.name}.{kind}" for kind in self.removed],
            plus=self.injection_kinds(),
        )

    @cached_property
    def injections(self) -> InjectionTable:
        table = self.declare_injections(InjectionTable(self.signature))
        logger.debug(
            "registered %s: %d kinds, %d injections",
            self.name,
            len(self.signature),
            len(table),
        )
        return table

    @cached_property
    def ops(self) -> LanguageOps:
        return self.make_ops()

    def sort(self, type_name: str) -> Atomic:
        return self.modular.sort_of[type_name]

    @property
    def expr_sort(self) -> Sort:
        return self.sort("Expr")

    @property
    def stmt_sort(self) -> Sort:
        return self.sort("Stmt")

    @property
    def block_sort(self) -> Sort:
        return self.sort("Block")

    def kind(self, name: str) -> NodeKind:
        """A kind of this language by its unqualified name, removed kinds included."""
        qualified = f"{self.name}.{name}"
        return self.signature.get(qualified) or self.modular.signature[qualified]

    def node(self, name: str, *children: Term, payloads: Sequence = ()) -> Term:
        return Term(self.kind(name), tuple(payloads), tuple(children))

    def wrap(self, name: str, term: Term) -> Term:
        return self.node(name, term)

    def unwrap(self, name: str, term: Term) -> Term:
        if term.kind != self.kind(name):
            raise UnrepresentableTerm(self.name, term)
        return term.children[0]

    def expect(self, term: Term, kind: NodeKind) -> Tuple[Term, ...]:
        if term.kind != kind:
            raise UnrepresentableTerm(self.name, term)
        return term.children

    def _translate(self, rules: Dict[str, Callable[[Term], Term]], term: Term) -> Term:
        @rewrite
        def step(node):
            rule = rules.get(node.kind.name)
            return rule(node) if rule is not None else None

        return transform_bottom_up(step, term)

    def trans_ips(self, term: Term) -> Term:
        return self._translate(self.trans_rules(), term)

    def untrans_ips(self, term: Term) -> Term:
        result = self._translate(self.untrans_rules(), term)
        for _, node in walk(result):
            if node.kind not in self.modular.signature:
                raise UnrepresentableTerm(self.name, node)
        return result

    def decompose(self, ast: GenericValue) -> Term:
        return self.trans_ips(to_modular(self.modular, ast))

    def recompose(self, term: Term) -> GenericValue:
        return from_modular(self.modular, self.untrans_ips(term))

    def parse_term(self, text: str) -> Term:
        return self.decompose(self.parse(text))

    def render(self, term: Term) -> str:
        return self.pretty(self.recompose(term))

    def __str__(self):
        return self.name


def injection_kind(lang: str, name: str, source: Sort, target: Sort) -> NodeKind:
    return NodeKind(f"{lang}.{name}", (), (source,), target)


def list_paths(prefix: Tuple[int, ...], term: Term) -> Tuple[Tuple[int, ...], ...]:
    """Paths of the elements of the list `term`, which sits at `prefix`."""
    return tuple(prefix + (1,) * i + (0,) for i in range(len(extract_list(term))))

"""
Random well-formed programs for differential testing.

Generators build original ASTs and leave the text to the language's pretty
printer. A program is a few helper functions followed by `main`; functions only
call the ones defined before them, every variable is declared before it is
used, and loops count up to a small bound, so generated programs finish
within the default fuel.
"""
import logging
import random
from abc import ABC, abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ...schema import GenericValue as V
from .config import GenConfig

__all__ = ["Helper", "ProgramGenerator", "VarType", "Variable"]

logger = logging.getLogger(__name__)

MAX_HELPERS = 2
CALL_SITES = 2
"""Calls to helpers per function body."""
MAX_LOOP_NESTING = 2
MAX_TRIP_COUNT = 4
MAX_ARRAY_LENGTH = 4
EXTERNALS = ("input", "sample")
"""Functions the programs call without defining them."""


class VarType(Enum):
    Int = "int"
    Bool = "bool"
    Array = "array"


@dataclass
class Variable:
    name: str
    kind: VarType
    length: int = 0
    frozen: bool = False
    """Loop counters are only assigned by their loop."""


@dataclass(frozen=True)
class Helper:
    name: str
    arity: int


Arm = Tuple[V, List[V]]
Choice = Tuple[Callable[[int], V], int]


class ProgramGenerator(ABC):
    """
    Language-independent generation: scopes, names, budgets and the choice of
    statements and expressions. Subclasses build the nodes.
    """

    arithmetic_ops: Sequence[str] = ("+", "-", "*")
    division_ops: Sequence[str] = ("/", "%")
    comparison_ops: Sequence[str] = ("<", "<=", ">", ">=", "==", "!=")
    conjunction = "&&"
    disjunction = "||"
    negation = "!"
    index_base = 0
    supports_continue = True
    assignment_expressions = True
    """Whether assignments can be used as expressions."""
    parallel_assignment = False
    int_short_circuit = False
    """Whether `&&` and `||` may combine integers."""

    def __init__(self, config: GenConfig = GenConfig()):
        self.config = config
        self.random = random.Random(config.seed)
        self.scopes: List[Dict[str, Variable]] = []
        self.helpers: List[Helper] = []
        self.loops: List[str] = []
        self.counter = 0
        self.calls_left = 0

    def generate(self) -> V:
        functions = []
        for i in range(self.random.randint(0, MAX_HELPERS)):
            helper = Helper(f"f{i}", self.random.randint(0, 2))
            functions.append(self.function_def(helper))
            self.helpers.append(helper)
        functions.append(self.function_def(Helper("main", 0)))
        return self.program(functions)

    # Randomness and scopes

    def chance(self, p: float) -> bool:
        return self.random.random() < p

    def choose(self, choices: List[Choice], depth: int) -> V:
        builders, weights = zip(*choices)
        return self.random.choices(builders, weights)[0](depth)

    @contextmanager
    def scope(self):
        self.scopes.append({})
        try:
            yield
        finally:
            self.scopes.pop()

    @contextmanager
    def loop(self, kind: str):
        self.loops.append(kind)
        try:
            yield
        finally:
            self.loops.pop()

    def bind(self, var: Variable):
        self.scopes[-1][var.name] = var

    def fresh(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter - 1}"

    def visible(self, kind: VarType, assignable: bool = False) -> List[Variable]:
        resolved: Dict[str, Variable] = {}
        for scope in reversed(self.scopes):
            for name, var in scope.items():
                resolved.setdefault(name, var)
        return [
            v for v in resolved.values() if v.kind is kind and not (assignable and v.frozen)
        ]

    def binder(self, shadow: bool) -> str:
        """A name to declare: fresh, or an outer one when shadowing is allowed."""
        if shadow and self.config.shadowing and len(self.scopes) > 2 and self.chance(0.3):
            frozen = {n for scope in self.scopes for n, v in scope.items() if v.frozen}
            outer = {n for scope in self.scopes[:-1] for n in scope}
            candidates = sorted(outer - frozen - set(self.scopes[-1]))
            if candidates:
                return self.random.choice(candidates)
        return self.fresh("v")

    # Functions and blocks

    def function_def(self, helper: Helper) -> V:
        self.calls_left = CALL_SITES
        params = [f"p{i}" for i in range(helper.arity)]
        with self.scope():
            for param in params:
                self.bind(Variable(param, VarType.Int))
            with self.scope():
                items = self.block_items(self.config.max_depth)
                result = self.int_expr(2)
        return self.function(helper.name, params, items, result)

    def block_items(self, depth: int) -> List[V]:
        items = []
        for _ in range(self.random.randint(1, self.config.max_stmts)):
            items.extend(self.statement(depth))
        return items

    def nested(self, depth: int) -> List[V]:
        with self.scope():
            return self.block_items(depth - 1)

    def can_call(self) -> bool:
        return bool(self.helpers) and self.calls_left > 0 and len(self.loops) <= 1

    # Statements

    def statement(self, depth: int) -> List[V]:
        choices = [(self.declaration, 3), (self.assignment, 3), (self.print_stmt, 2)]
        if self.can_call():
            choices.append((self.helper_stmt, 1))
        if depth > 0:
            choices += [(self.conditional, 2), (self.nested_block, 1)]
            if self.config.loops and len(self.loops) < MAX_LOOP_NESTING:
                choices += [(self.while_loop, 1), (self.counted_loop, 1)]
        if self.loops:
            choices.append((self.jump, 1))
        return self.choose(choices, depth)

    def declaration(self, depth: int) -> List[V]:
        count = 2 if self.config.parallel_assign and self.chance(0.25) else 1
        kind = self.random.choices(list(VarType), [6, 2, 1])[0]
        inits = [self.initializer(kind) for _ in range(count)]
        names = [self.binder(shadow=count == 1) for _ in range(count)]
        for name, (_, length) in zip(names, inits):
            self.bind(Variable(name, kind, length))
        return self.declare(kind, [(name, init) for name, (init, _) in zip(names, inits)])

    def initializer(self, kind: VarType):
        """A value for a new variable and, for arrays, its length."""
        if kind is VarType.Int:
            return self.int_expr(2), 0
        if kind is VarType.Bool:
            return self.bool_expr(2), 0
        elements = [self.int_expr(1) for _ in range(self.random.randint(1, MAX_ARRAY_LENGTH))]
        return elements, len(elements)

    def assignment(self, depth: int) -> List[V]:
        ints = self.visible(VarType.Int, assignable=True)
        if self.parallel_assignment and self.config.parallel_assign and len(ints) >= 2:
            if self.chance(0.3):
                a, b = self.random.sample(ints, 2)
                targets = [self.place(a.name), self.place(b.name)]
                if self.chance(0.5):
                    return self.assign(targets, [self.ref(b.name), self.ref(a.name)])
                return self.assign(targets, [self.int_expr(2), self.int_expr(2)])
        places = [(self.place(v.name), VarType.Int) for v in ints]
        places += [(self.place(v.name), VarType.Bool) for v in self.visible(VarType.Bool, True)]
        for array in self.visible(VarType.Array):
            places.append((self.place_index(array.name, self.slot(array)), VarType.Int))
        if not places:
            return self.declaration(depth)
        place, kind = self.random.choice(places)
        value = self.int_expr(2) if kind is VarType.Int else self.bool_expr(2)
        return self.assign([place], [value])

    def print_stmt(self, depth: int) -> List[V]:
        value = self.int_expr(2) if self.chance(0.8) else self.bool_expr(2)
        return [self.item(self.call_stmt(self.call("print", [value])))]

    def helper_stmt(self, depth: int) -> List[V]:
        return [self.item(self.call_stmt(self.helper_call(1)))]

    def conditional(self, depth: int) -> List[V]:
        arms = [(self.bool_expr(2), self.nested(depth))]
        while len(arms) < 3 and self.chance(0.3):
            arms.append((self.bool_expr(2), self.nested(depth)))
        orelse = self.nested(depth) if self.chance(0.5) else None
        return [self.item(self.if_stmt(arms, orelse))]

    def nested_block(self, depth: int) -> List[V]:
        return [self.item(self.block_stmt(self.nested(depth)))]

    def while_loop(self, depth: int) -> List[V]:
        counter = self.fresh("w")
        bound = self.random.randint(0, MAX_TRIP_COUNT)
        items = self.declare(VarType.Int, [(counter, self.literal(0, 0))])
        self.bind(Variable(counter, VarType.Int, frozen=True))
        with self.loop("while"):
            body = self.nested(depth)
        step = self.binary("+", self.ref(counter), self.literal(0, 1))
        body += self.assign([self.place(counter)], [step])
        cond = self.binary("<", self.ref(counter), self.literal(0, bound))
        return items + [self.item(self.while_stmt(cond, body))]

    def counted_loop(self, depth: int) -> List[V]:
        counter = self.fresh("i")
        bound = self.random.randint(0, MAX_TRIP_COUNT)
        with self.loop("count"), self.scope():
            self.bind(Variable(counter, VarType.Int, frozen=True))
            body = self.block_items(depth - 1)
        return self.counted(counter, bound, body)

    def jump(self, depth: int) -> List[V]:
        stmt = self.break_stmt()
        if self.supports_continue and self.loops[-1] == "count" and self.chance(0.5):
            stmt = self.continue_stmt()
        return [self.item(self.if_stmt([(self.bool_expr(1), [self.item(stmt)])], None))]

    # Expressions

    def int_expr(self, depth: int) -> V:
        choices: List[Choice] = [(self.literal, 3)]
        if self.visible(VarType.Int):
            choices.append((self.int_var, 4))
        if self.visible(VarType.Array):
            choices.append((self.element, 1))
        if depth > 0:
            choices += [(self.arithmetic, 4), (self.negative, 1), (self.external_call, 1)]
            if self.can_call():
                choices.append((self.helper_call, 1))
            if self.assignment_expressions and self.visible(VarType.Int, assignable=True):
                choices.append((self.assignment_expr, 1))
            if self.int_short_circuit and self.config.short_circuit:
                choices.append((self.int_logical, 1))
        choices += self.int_extras(depth)
        return self.choose(choices, depth)

    def int_extras(self, depth: int) -> List[Choice]:
        return []

    def bool_expr(self, depth: int) -> V:
        choices: List[Choice] = [(self.bool_literal, 1), (self.comparison, 5)]
        if self.visible(VarType.Bool):
            choices.append((self.bool_var, 3))
        if depth > 0:
            choices.append((self.logical_not, 1))
            if self.config.short_circuit:
                choices.append((self.logical, 2))
        return self.choose(choices, depth)

    def literal(self, depth: int, value: Optional[int] = None) -> V:
        return V("IntLit", (self.random.randint(0, 9) if value is None else value,))

    def bool_literal(self, depth: int) -> V:
        return V("BoolLit", (self.chance(0.5),))

    def int_var(self, depth: int) -> V:
        return self.ref(self.random.choice(self.visible(VarType.Int)).name)

    def bool_var(self, depth: int) -> V:
        return self.ref(self.random.choice(self.visible(VarType.Bool)).name)

    def slot(self, array: Variable) -> int:
        return self.index_base + self.random.randrange(array.length)

    def element(self, depth: int) -> V:
        array = self.random.choice(self.visible(VarType.Array))
        return self.index(array.name, self.slot(array))

    def arithmetic(self, depth: int) -> V:
        op = self.random.choice(list(self.arithmetic_ops) * 2 + list(self.division_ops))
        left = self.int_expr(depth - 1)
        if op in self.division_ops:
            return self.binary(op, left, self.literal(0, self.random.randint(1, 5)))
        return self.binary(op, left, self.int_expr(depth - 1))

    def negative(self, depth: int) -> V:
        return self.unary("-", self.int_expr(depth - 1))

    def external_call(self, depth: int) -> V:
        return self.call(self.random.choice(EXTERNALS), [self.int_expr(depth - 1)])

    def helper_call(self, depth: int) -> V:
        helper = self.random.choice(self.helpers)
        self.calls_left -= 1
        return self.call(helper.name, [self.int_expr(depth - 1) for _ in range(helper.arity)])

    def assignment_expr(self, depth: int) -> V:
        var = self.random.choice(self.visible(VarType.Int, assignable=True))
        return self.assign_expr(self.place(var.name), self.int_expr(depth - 1))

    def int_logical(self, depth: int) -> V:
        op = self.random.choice([self.conjunction, self.disjunction])
        return self.binary(op, self.int_expr(depth - 1), self.int_expr(depth - 1))

    def comparison(self, depth: int) -> V:
        op = self.random.choice(self.comparison_ops)
        sub = max(depth - 1, 1)
        return self.binary(op, self.int_expr(sub), self.int_expr(sub))

    def logical_not(self, depth: int) -> V:
        return self.unary(self.negation, self.bool_expr(depth - 1))

    def logical(self, depth: int) -> V:
        op = self.random.choice([self.conjunction, self.disjunction])
        return self.binary(op, self.bool_expr(depth - 1), self.bool_expr(depth - 1))

    # Nodes shared by all languages

    @staticmethod
    def ident(name: str) -> V:
        return V("Ident", (name,))

    def call(self, name: str, args: Sequence[V]) -> V:
        return V("Call", (self.ident(name), tuple(args)))

    @staticmethod
    def binary(op: str, left: V, right: V) -> V:
        return V("Binary", (op, left, right))

    @staticmethod
    def unary(op: str, operand: V) -> V:
        return V("Unary", (op, operand))

    @staticmethod
    def program(functions: Sequence[V]) -> V:
        return V("Program", (tuple(functions),))

    # Language nodes

    @abstractmethod
    def ref(self, name: str) -> V:
        """A variable read."""

    @abstractmethod
    def place(self, name: str) -> V:
        """A variable as an assignment target."""

    @abstractmethod
    def place_index(self, name: str, index: int) -> V:
        pass

    @abstractmethod
    def index(self, name: str, index: int) -> V:
        pass

    @abstractmethod
    def item(self, stmt: V) -> V:
        """A statement as an element of a block."""

    @abstractmethod
    def declare(self, kind: VarType, bindings: List[Tuple[str, object]]) -> List[V]:
        pass

    @abstractmethod
    def assign(self, targets: List[V], values: List[V]) -> List[V]:
        pass

    def assign_expr(self, target: V, value: V) -> V:
        raise NotImplementedError

    @abstractmethod
    def call_stmt(self, call: V) -> V:
        pass

    @abstractmethod
    def if_stmt(self, arms: List[Arm], orelse: Optional[List[V]]) -> V:
        pass

    @abstractmethod
    def while_stmt(self, cond: V, body: List[V]) -> V:
        pass

    @abstractmethod
    def counted(self, counter: str, bound: int, body: List[V]) -> List[V]:
        """A loop running `body` `bound` times, with `counter` bound inside."""

    @abstractmethod
    def block_stmt(self, items: List[V]) -> V:
        pass

    @abstractmethod
    def break_stmt(self) -> V:
        pass

    def continue_stmt(self) -> V:
        raise NotImplementedError

    @abstractmethod
    def function(self, name: str, params: List[str], items: List[V], result: V) -> V:
        pass

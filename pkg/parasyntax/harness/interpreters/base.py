"""
Reference interpreters over the original ASTs of the mini-languages.

Interpreters never raise on a misbehaving program: every runtime failure ends
the trace with a :class:`~parasyntax.harness.trace.Trap`. Fuel is spent on loop
iterations and function calls only, so adding straight-line statements to a
program never changes when it runs out.
"""
import hashlib
import logging
import sys
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional, Sequence

from ...schema import GenericValue as V
from ..trace import (
    DEFAULT_FUEL,
    MAX_CALL_DEPTH,
    Call,
    Mark,
    Print,
    Return,
    Trace,
    Trap,
    TrapKind,
    Trapped,
)

__all__ = [
    "CoverageArray",
    "CoverageObject",
    "Env",
    "Interpreter",
    "wrap_int",
]

logger = logging.getLogger(__name__)

RECURSION_LIMIT = 20_000

INT_BITS = 32


def wrap_int(value: int) -> int:
    """Two's complement wrap-around to the interpreters' integer width."""
    half = 1 << (INT_BITS - 1)
    return (value + half) % (1 << INT_BITS) - half


class Env:
    """A lexical scope."""

    def __init__(self, parent: Optional["Env"] = None):
        self.vars: Dict[str, Any] = {}
        self.parent = parent

    def _owner(self, name: str) -> "Env":
        env = self
        while env is not None:
            if name in env.vars:
                return env
            env = env.parent
        raise Trapped(TrapKind.Unbound)

    def get(self, name: str) -> Any:
        return self._owner(name).vars[name]

    def set(self, name: str, value: Any):
        self._owner(name).vars[name] = value

    def declare(self, name: str, value: Any):
        self.vars[name] = value

    def child(self) -> "Env":
        return Env(self)


class CoverageArray:
    """The array coverage markers store into; every store is recorded."""

    def __init__(self, on_store: Callable[[int], None]):
        self.on_store = on_store

    def store(self, index: Any):
        if type(index) is not int or index < 0:
            raise Trapped(TrapKind.Bounds)
        self.on_store(index)


class CoverageObject:
    """The `TC` global holding the coverage array as its `cov` field."""

    def __init__(self, cov: CoverageArray):
        self.cov = cov


class _Return(Exception):
    def __init__(self, value):
        self.value = value
        super().__init__()


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


class Interpreter(ABC):
    """
    Base of the reference interpreters: calls, fuel, traces and the mocks for
    functions the program does not define. Statements and expressions dispatch
    on the constructor name to `exec_<Ctor>` and `eval_<Ctor>`.
    """

    name: str
    nil: Any = None
    """The value of missing arguments and of functions that return nothing."""
    builtins = ("print",)

    def __init__(self, program: V, fuel: int = DEFAULT_FUEL):
        self.functions: Dict[str, V] = {self.function_name(f): f for f in program.args[0]}
        self.fuel = fuel
        self.depth = 0
        self.trace = Trace()
        self.globals = Env()
        self.bind_globals(self.globals)

    # Program structure

    @abstractmethod
    def function_name(self, fundef: V) -> str:
        pass

    @abstractmethod
    def invoke(self, fundef: V, args: List[Any]) -> Any:
        pass

    def bind_globals(self, env: Env):
        env.declare("TC", CoverageObject(self.coverage_array()))

    def coverage_array(self) -> CoverageArray:
        return CoverageArray(lambda index: self.trace.events.append(Mark(index)))

    # Running

    def run(self) -> Trace:
        if sys.getrecursionlimit() < RECURSION_LIMIT:
            sys.setrecursionlimit(RECURSION_LIMIT)
        try:
            value = self.call("main", [])
            self.trace.events.append(Return(self.show(value)))
        except Trapped as trap:
            self.trace.events.append(Trap(trap.kind))
        except RecursionError:
            self.trace.events.append(Trap(TrapKind.StackOverflow))
        return self.trace

    def tick(self):
        self.fuel -= 1
        if self.fuel < 0:
            raise Trapped(TrapKind.Fuel)

    def call(self, name: str, args: List[Any]) -> Any:
        fundef = self.functions.get(name)
        if fundef is None:
            if name in self.builtins:
                return self.builtin(name, args)
            return self.external(name, args)
        self.tick()
        if self.depth >= MAX_CALL_DEPTH:
            raise Trapped(TrapKind.StackOverflow)
        self.depth += 1
        try:
            return self.invoke(fundef, args)
        except _Return as ret:
            return ret.value
        finally:
            self.depth -= 1

    def builtin(self, name: str, args: List[Any]) -> Any:
        if len(args) != 1:
            raise Trapped(TrapKind.Type)
        self.trace.events.append(Print(self.show(args[0])))
        return self.nil

    def external(self, name: str, args: List[Any]) -> Any:
        """Record the call and answer with a value derived from it."""
        shown = tuple(self.show(a) for a in args)
        self.trace.events.append(Call(name, shown))
        digest = hashlib.sha256(f"{name}{shown}".encode()).digest()
        return int.from_bytes(digest[:2], "big") % 100

    def loop(self, test: Callable[[], bool], body: Callable[[], None], step=None):
        """Run a loop; `break` and `continue` raised from `body` are handled here."""
        while test():
            self.tick()
            try:
                body()
            except _Break:
                break
            except _Continue:
                pass
            if step is not None:
                step()

    # Dispatch

    def exec(self, stmt: V, env: Env):
        getattr(self, f"exec_{stmt.ctor}")(stmt, env)

    def exec_all(self, stmts: Sequence[V], env: Env):
        for stmt in stmts:
            self.exec(stmt, env)

    def eval(self, expr: V, env: Env) -> Any:
        return getattr(self, f"eval_{expr.ctor}")(expr, env)

    # Values

    @abstractmethod
    def truthy(self, value: Any) -> bool:
        pass

    def show(self, value: Any, seen: Optional[set] = None) -> str:
        if value is None:
            return "nil"
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, int):
            return str(value)
        if isinstance(value, (CoverageObject, CoverageArray)):
            return "<coverage>"
        seen = seen or set()
        if id(value) in seen:
            return "<cycle>"
        seen = seen | {id(value)}
        return self.show_container(value, seen)

    def show_container(self, value: Any, seen: set) -> str:
        return "[" + ", ".join(self.show(v, seen) for v in value) + "]"

    @staticmethod
    def int_operand(value: Any) -> int:
        if type(value) is not int:
            raise Trapped(TrapKind.Type)
        return value

    def arithmetic(self, op: str, a: Any, b: Any) -> Any:
        a, b = self.int_operand(a), self.int_operand(b)
        if op == "+":
            return wrap_int(a + b)
        if op == "-":
            return wrap_int(a - b)
        if op == "*":
            return wrap_int(a * b)
        if op in ("<", "<=", ">", ">="):
            return {"<": a < b, "<=": a <= b, ">": a > b, ">=": a >= b}[op]
        if b == 0:
            raise Trapped(TrapKind.DivZero)
        return wrap_int(self.divide(op, a, b))

    def divide(self, op: str, a: int, b: int) -> int:
        """Truncating division and the matching remainder."""
        quotient = abs(a) // abs(b)
        if (a < 0) != (b < 0):
            quotient = -quotient
        return quotient if op == "/" else a - b * quotient

    def equal(self, a: Any, b: Any) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, (int, bool)) or a is None:
            return a == b
        return a is b

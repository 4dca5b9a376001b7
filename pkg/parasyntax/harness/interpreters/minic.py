from typing import Any, List

from ...schema import GenericValue as V
from ..trace import TrapKind, Trapped
from .base import Env
from .curly import CurlyInterpreter

__all__ = ["MiniCInterpreter"]

DEFAULTS = {"TInt": 0, "TBool": False}


def default_value(ty: V) -> Any:
    """Declared variables start zeroed."""
    return DEFAULTS[ty.ctor] if ty.ctor in DEFAULTS else []


class MiniCInterpreter(CurlyInterpreter):
    """
    MiniC: `&&` and `||` yield booleans, integer division truncates, arrays
    have a fixed length and are built by braced initializers or `array(...)`.
    The coverage array is the global `cov`.
    """

    name = "MiniC"
    nil = 0
    builtins = ("print", "array")

    def function_name(self, fundef):
        return fundef.args[1].args[0]

    def bind_globals(self, env):
        env.declare("cov", self.coverage_array())

    def invoke(self, fundef, args):
        ret, _, params, body = fundef.args
        if len(params) != len(args):
            raise Trapped(TrapKind.Type)
        env = self.globals.child()
        self.bind(env, [p.args[1].args[0] for p in params], args)
        self.exec_block(body, env.child())
        return default_value(ret)

    def builtin(self, name: str, args: List[Any]) -> Any:
        if name == "array":
            return list(args)
        return super().builtin(name, args)

    def truthy(self, value):
        if isinstance(value, list):
            return True
        if value is None:
            raise Trapped(TrapKind.Type)
        return bool(value)

    def equal(self, a, b):
        # Booleans compare as the integers 0 and 1.
        if isinstance(a, (int, bool)) and isinstance(b, (int, bool)):
            return int(a) == int(b)
        return a is b

    def short_circuit(self, conjunction, left, right, env):
        return self.truthy(super().short_circuit(conjunction, left, right, env))

    def exec_block(self, block: V, env: Env):
        for item in block.args[0]:
            if item.ctor == "DeclItem":
                self.declare(item.args[0], env)
            else:
                self.exec(item.args[0], env)

    def declare(self, decl: V, env: Env):
        ty, declarators = decl.args
        for declarator in declarators:
            name, opt = declarator.args
            value = default_value(ty)
            if opt.ctor == "HasInit":
                value = self.initial_value(ty, opt.args[0], env)
            env.declare(name.args[0], value)

    def initial_value(self, ty: V, init: V, env: Env) -> Any:
        if init.ctor == "ExprInit":
            return self.eval(init.args[0], env)
        elems = [self.eval(e, env) for e in init.args[0]]
        if ty.ctor == "TIntArray":
            return elems
        if len(elems) != 1:
            raise Trapped(TrapKind.BadInit)
        return elems[0]

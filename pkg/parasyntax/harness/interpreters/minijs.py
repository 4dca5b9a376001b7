from typing import Any

from ...schema import GenericValue as V
from ..trace import TrapKind, Trapped
from .base import Env
from .curly import CurlyInterpreter

__all__ = ["MiniJSInterpreter"]

MAX_ARRAY_LENGTH = 1 << 16


class MiniJSInterpreter(CurlyInterpreter):
    """
    MiniJS: `undefined` is the nil value, `&&` and `||` yield an operand, arrays
    grow on stores past their end and read `undefined` there. The coverage array
    is `TC.cov`.
    """

    name = "MiniJS"

    def function_name(self, fundef):
        return fundef.args[0].args[0]

    def invoke(self, fundef, args):
        _, params, body = fundef.args
        env = self.globals.child()
        self.bind(env, [p.args[0] for p in params], args)
        self.exec_block(body, env.child())
        return self.nil

    def show(self, value, seen=None):
        if value is None:
            return "undefined"
        return super().show(value, seen)

    def truthy(self, value):
        return not (value is None or value is False or (type(value) is int and value == 0))

    def exec_block(self, block: V, env: Env):
        self.exec_all(block.args[1], env)

    def exec_VarDecl(self, stmt: V, env: Env):
        for declarator in stmt.args[0]:
            name, opt = declarator.args
            name = name.args[0]
            if opt.ctor == "SomeExpr":
                env.declare(name, self.eval(opt.args[0], env))
            elif name not in env.vars:
                # Redeclaring without an initializer keeps the value.
                env.declare(name, None)

    def eval_Undefined(self, expr: V, env: Env):
        return None

    def eval_ArrayLit(self, expr: V, env: Env):
        return [self.eval(e, env) for e in expr.args[0]]

    def eval_Field(self, expr: V, env: Env):
        base = self.eval(expr.args[0], env)
        field = expr.args[1].args[0]
        if field == "length" and isinstance(base, list):
            return len(base)
        return self.coverage_field(base, field)

    def target(self, target: V, env: Env):
        if target.ctor == "Field":
            self.eval(target.args[0], env)
            raise Trapped(TrapKind.Type)
        return super().target(target, env)

    def out_of_bounds(self) -> Any:
        return None

    def store(self, base: Any, index: Any, value: Any):
        if not isinstance(base, list):
            raise Trapped(TrapKind.Type)
        index = self.int_operand(index)
        if not 0 <= index < MAX_ARRAY_LENGTH:
            raise Trapped(TrapKind.Bounds)
        if index >= len(base):
            base.extend([None] * (index + 1 - len(base)))
        base[index] = value

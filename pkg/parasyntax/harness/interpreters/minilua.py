from typing import Any, Callable, Dict, List, Tuple

from ...schema import GenericValue as V
from ..trace import TrapKind, Trapped
from .base import CoverageArray, CoverageObject, Env, Interpreter, _Break, _Return, wrap_int

__all__ = ["LuaTable", "MiniLuaInterpreter"]


class LuaTable:
    """A table; constructors fill keys from 1."""

    def __init__(self, values: List[Any] = ()):
        self.entries: Dict[Tuple[bool, Any], Any] = {}
        for i, value in enumerate(values):
            self.set(i + 1, value)

    @staticmethod
    def _key(key: Any) -> Tuple[bool, Any]:
        # `true` and `1` are distinct keys.
        if key is None:
            raise Trapped(TrapKind.Type)
        return isinstance(key, bool), key

    def get(self, key: Any) -> Any:
        return self.entries.get(self._key(key))

    def set(self, key: Any, value: Any):
        key = self._key(key)
        if value is None:
            self.entries.pop(key, None)
        else:
            self.entries[key] = value

    def items(self):
        return ((key, value) for (_, key), value in self.entries.items())


class MiniLuaInterpreter(Interpreter):
    """
    MiniLua: only `nil` and `false` are falsy, `and` and `or` yield an operand,
    `//` and `%` round towards negative infinity. Assignments evaluate every
    target operand, then every value, then store from left to right. The
    coverage array is `TC.cov`.
    """

    name = "MiniLua"

    def function_name(self, fundef):
        return fundef.args[0].args[0]

    def invoke(self, fundef, args):
        _, params, body = fundef.args
        env = self.globals.child()
        for i, param in enumerate(params):
            env.declare(param.args[0], args[i] if i < len(args) else None)
        self.exec_block(body, env.child())
        return None

    def exec_block(self, block: V, env: Env):
        self.exec_all(block.args[0], env)

    def truthy(self, value):
        return value is not None and value is not False

    def show_container(self, value, seen):
        if not isinstance(value, LuaTable):
            return super().show_container(value, seen)
        entries = (f"{self.show(k, seen)}={self.show(v, seen)}" for k, v in value.items())
        return "{" + ", ".join(entries) + "}"

    # Statements

    def exec_Local(self, stmt: V, env: Env):
        names, exprs = stmt.args
        values = [self.eval(e, env) for e in exprs]
        for i, name in enumerate(names):
            env.declare(name.args[0], values[i] if i < len(values) else None)

    def exec_Assign(self, stmt: V, env: Env):
        targets, exprs = stmt.args
        stores = [self.target(t, env) for t in targets]
        values = [self.eval(e, env) for e in exprs]
        for i, store in enumerate(stores):
            store(values[i] if i < len(values) else None)

    def exec_CallStmt(self, stmt: V, env: Env):
        self.eval(stmt.args[0], env)

    def exec_Do(self, stmt: V, env: Env):
        self.exec_block(stmt.args[0], env.child())

    def exec_If(self, stmt: V, env: Env):
        cond, then, elifs, orelse = stmt.args
        for test, body in ((cond, then),) + tuple(elifs):
            if self.truthy(self.eval(test, env)):
                self.exec_block(body, env.child())
                return
        if orelse.ctor == "Else":
            self.exec_block(orelse.args[0], env.child())

    def exec_While(self, stmt: V, env: Env):
        cond, body = stmt.args
        self.loop(
            lambda: self.truthy(self.eval(cond, env)),
            lambda: self.exec_block(body, env.child()),
        )

    def exec_NumFor(self, stmt: V, env: Env):
        name, start, limit, step, body = stmt.args
        current = self.int_operand(self.eval(start, env))
        limit = self.int_operand(self.eval(limit, env))
        increment = 1
        if step.ctor == "SomeExpr":
            increment = self.int_operand(self.eval(step.args[0], env))
        if increment == 0:
            raise Trapped(TrapKind.Type)
        state = {"i": current}

        def test():
            i = state["i"]
            return i <= limit if increment > 0 else i >= limit

        def run():
            scope = env.child()
            scope.declare(name.args[0], state["i"])
            self.exec_block(body, scope)

        def advance():
            state["i"] += increment

        self.loop(test, run, advance)

    def exec_Return(self, stmt: V, env: Env):
        opt = stmt.args[0]
        raise _Return(self.eval(opt.args[0], env) if opt.ctor == "SomeExpr" else None)

    def exec_Break(self, stmt: V, env: Env):
        raise _Break()

    # Assignment targets

    def target(self, var: V, env: Env) -> Callable[[Any], None]:
        """Evaluate the operands of `var`; returns its store."""
        if var.ctor == "Name":
            name = var.args[0].args[0]
            return lambda value: env.set(name, value)
        base, key = self.place(var, env)
        if isinstance(base, CoverageArray):
            return lambda value: base.store(key)
        if not isinstance(base, LuaTable):
            raise Trapped(TrapKind.Type)
        return lambda value: base.set(key, value)

    def place(self, var: V, env: Env):
        base = self.eval(var.args[0], env)
        if var.ctor == "FieldVar":
            return base, var.args[1].args[0]
        return base, self.eval(var.args[1], env)

    # Expressions

    def eval_Nil(self, expr: V, env: Env):
        return None

    def eval_IntLit(self, expr: V, env: Env):
        return wrap_int(expr.args[0])

    def eval_BoolLit(self, expr: V, env: Env):
        return expr.args[0]

    def eval_VarExpr(self, expr: V, env: Env):
        var = expr.args[0]
        if var.ctor == "Name":
            return env.get(var.args[0].args[0])
        base, key = self.place(var, env)
        if isinstance(base, CoverageObject) and key == "cov":
            return base.cov
        if not isinstance(base, LuaTable):
            raise Trapped(TrapKind.Type)
        return base.get(key)

    def eval_Call(self, expr: V, env: Env):
        name, args = expr.args
        return self.call(name.args[0], [self.eval(a, env) for a in args])

    def eval_Table(self, expr: V, env: Env):
        return LuaTable([self.eval(e, env) for e in expr.args[0]])

    def eval_Unary(self, expr: V, env: Env):
        op, operand = expr.args
        value = self.eval(operand, env)
        if op == "not":
            return not self.truthy(value)
        return wrap_int(-self.int_operand(value))

    def eval_Binary(self, expr: V, env: Env):
        op, left, right = expr.args
        if op in ("and", "or"):
            value = self.eval(left, env)
            if self.truthy(value) != (op == "and"):
                return value
            return self.eval(right, env)
        a, b = self.eval(left, env), self.eval(right, env)
        if op == "==":
            return self.equal(a, b)
        if op == "~=":
            return not self.equal(a, b)
        return self.arithmetic(op, a, b)

    def divide(self, op, a, b):
        return a // b if op == "//" else a % b

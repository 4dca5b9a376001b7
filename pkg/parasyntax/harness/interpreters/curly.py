from typing import Any, List

from ...schema import GenericValue as V
from ..trace import TrapKind, Trapped
from .base import CoverageArray, CoverageObject, Env, Interpreter, _Break, _Continue, _Return, wrap_int

__all__ = ["CurlyInterpreter"]


class CurlyInterpreter(Interpreter):
    """Statements and expressions MiniC and MiniJS have in common."""

    def bind(self, env: Env, params: List[str], args: List[Any]):
        for i, name in enumerate(params):
            env.declare(name, args[i] if i < len(args) else self.nil)

    # Statements

    def exec_ExprStmt(self, stmt: V, env: Env):
        self.eval(stmt.args[0], env)

    def exec_BlockStmt(self, stmt: V, env: Env):
        self.exec_block(stmt.args[0], env.child())

    def exec_If(self, stmt: V, env: Env):
        cond, then = stmt.args
        if self.truthy(self.eval(cond, env)):
            self.exec(then, env.child())

    def exec_IfElse(self, stmt: V, env: Env):
        cond, then, orelse = stmt.args
        branch = then if self.truthy(self.eval(cond, env)) else orelse
        self.exec(branch, env.child())

    def exec_While(self, stmt: V, env: Env):
        cond, body = stmt.args
        self.loop(
            lambda: self.truthy(self.eval(cond, env)),
            lambda: self.exec(body, env.child()),
        )

    def exec_For(self, stmt: V, env: Env):
        init, cond, step, body = stmt.args
        if init.ctor == "SomeExpr":
            self.eval(init.args[0], env)

        def test():
            return cond.ctor == "NoExpr" or self.truthy(self.eval(cond.args[0], env))

        def advance():
            if step.ctor == "SomeExpr":
                self.eval(step.args[0], env)

        self.loop(test, lambda: self.exec(body, env.child()), advance)

    def exec_Return(self, stmt: V, env: Env):
        opt = stmt.args[0]
        raise _Return(self.eval(opt.args[0], env) if opt.ctor == "SomeExpr" else self.nil)

    def exec_Break(self, stmt: V, env: Env):
        raise _Break()

    def exec_Continue(self, stmt: V, env: Env):
        raise _Continue()

    # Expressions

    def eval_IntLit(self, expr: V, env: Env):
        return wrap_int(expr.args[0])

    def eval_BoolLit(self, expr: V, env: Env):
        return expr.args[0]

    def eval_Var(self, expr: V, env: Env):
        return env.get(expr.args[0].args[0])

    def eval_Call(self, expr: V, env: Env):
        name, args = expr.args
        return self.call(name.args[0], [self.eval(a, env) for a in args])

    def eval_Unary(self, expr: V, env: Env):
        op, operand = expr.args
        value = self.eval(operand, env)
        if op == "!":
            return not self.truthy(value)
        return wrap_int(-self.int_operand(value))

    def eval_Binary(self, expr: V, env: Env):
        op, left, right = expr.args
        if op in ("&&", "||"):
            return self.short_circuit(op == "&&", left, right, env)
        a, b = self.eval(left, env), self.eval(right, env)
        if op == "==":
            return self.equal(a, b)
        if op == "!=":
            return not self.equal(a, b)
        return self.arithmetic(op, a, b)

    def short_circuit(self, conjunction: bool, left: V, right: V, env: Env) -> Any:
        value = self.eval(left, env)
        if self.truthy(value) != conjunction:
            return value
        return self.eval(right, env)

    def eval_Index(self, expr: V, env: Env):
        base, index = (self.eval(e, env) for e in expr.args)
        return self.load(base, index)

    def eval_Assign(self, expr: V, env: Env):
        target, value = expr.args
        if target.ctor == "Var":
            value = self.eval(value, env)
            env.set(target.args[0].args[0], value)
            return value
        store = self.target(target, env)
        value = self.eval(value, env)
        store(value)
        return value

    def target(self, target: V, env: Env):
        """Evaluate the operands of an assignment target; returns its store."""
        base, index = (self.eval(e, env) for e in target.args)
        if isinstance(base, CoverageArray):
            return lambda value: base.store(index)
        return lambda value: self.store(base, index, value)

    # Arrays

    def load(self, base: Any, index: Any) -> Any:
        if not isinstance(base, list):
            raise Trapped(TrapKind.Type)
        index = self.int_operand(index)
        if not 0 <= index < len(base):
            return self.out_of_bounds()
        return base[index]

    def out_of_bounds(self) -> Any:
        raise Trapped(TrapKind.Bounds)

    def store(self, base: Any, index: Any, value: Any):
        if not isinstance(base, list):
            raise Trapped(TrapKind.Type)
        index = self.int_operand(index)
        if not 0 <= index < len(base):
            raise Trapped(TrapKind.Bounds)
        base[index] = value

    def coverage_field(self, base: Any, field: str) -> Any:
        if isinstance(base, CoverageObject) and field == "cov":
            return base.cov
        raise Trapped(TrapKind.Type)

from typing import List, Optional

from ...schema import GenericValue as V
from .base import Arm, ProgramGenerator, VarType

__all__ = ["CurlyGenerator"]


class CurlyGenerator(ProgramGenerator):
    """Statements MiniC and MiniJS write the same way."""

    def block(self, items: List[V]) -> V:
        raise NotImplementedError

    def ref(self, name):
        return V("Var", (self.ident(name),))

    def place(self, name):
        return self.ref(name)

    def index(self, name, index):
        return V("Index", (self.ref(name), V("IntLit", (index,))))

    def place_index(self, name, index):
        return self.index(name, index)

    def assign(self, targets, values):
        (target,), (value,) = targets, values
        return [self.item(V("ExprStmt", (self.assign_expr(target, value),)))]

    def assign_expr(self, target, value):
        return V("Assign", (target, value))

    def call_stmt(self, call):
        return V("ExprStmt", (call,))

    def block_stmt(self, items):
        return V("BlockStmt", (self.block(items),))

    def if_stmt(self, arms: List[Arm], orelse: Optional[List[V]]):
        tail = self.block_stmt(orelse) if orelse is not None else None
        for cond, items in reversed(arms):
            then = self.block_stmt(items)
            tail = V("If", (cond, then)) if tail is None else V("IfElse", (cond, then, tail))
        return tail

    def while_stmt(self, cond, body):
        return V("While", (cond, self.block_stmt(body)))

    def counted(self, counter, bound, body):
        var = self.ref(counter)
        init = self.assign_expr(var, V("IntLit", (0,)))
        cond = self.binary("<", var, V("IntLit", (bound,)))
        step = self.assign_expr(var, self.binary("+", var, V("IntLit", (1,))))
        loop = V(
            "For",
            (
                V("SomeExpr", (init,)),
                V("SomeExpr", (cond,)),
                V("SomeExpr", (step,)),
                self.block_stmt(body),
            ),
        )
        return self.declare(VarType.Int, [(counter, V("IntLit", (0,)))]) + [self.item(loop)]

    def break_stmt(self):
        return V("Break")

    def continue_stmt(self):
        return V("Continue")

    def returns(self, result: V) -> V:
        return self.item(V("Return", (V("SomeExpr", (result,)),)))

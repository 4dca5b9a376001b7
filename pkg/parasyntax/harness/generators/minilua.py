from ...schema import GenericValue as V
from .base import ProgramGenerator, VarType

__all__ = ["MiniLuaGenerator"]


class MiniLuaGenerator(ProgramGenerator):
    """
    Tables stand in for arrays and are indexed from 1. Assignments and `local`
    declarations may bind two names at once, including swaps.
    """

    division_ops = ("//", "%")
    comparison_ops = ("<", "<=", ">", ">=", "==", "~=")
    conjunction = "and"
    disjunction = "or"
    negation = "not"
    index_base = 1
    supports_continue = False
    assignment_expressions = False
    parallel_assignment = True
    int_short_circuit = True

    @staticmethod
    def block(items):
        return V("Block", (tuple(items),))

    def ref(self, name):
        return V("VarExpr", (self.place(name),))

    def place(self, name):
        return V("Name", (self.ident(name),))

    def place_index(self, name, index):
        return V("IndexVar", (self.ref(name), V("IntLit", (index,))))

    def index(self, name, index):
        return V("VarExpr", (self.place_index(name, index),))

    def item(self, stmt):
        return stmt

    def declare(self, kind, bindings):
        names = tuple(self.ident(name) for name, _ in bindings)
        values = tuple(
            V("Table", (tuple(init),)) if kind is VarType.Array else init for _, init in bindings
        )
        return [V("Local", (names, values))]

    def assign(self, targets, values):
        return [V("Assign", (tuple(targets), tuple(values)))]

    def call_stmt(self, call):
        return V("CallStmt", (call,))

    def if_stmt(self, arms, orelse):
        (cond, items), rest = arms[0], arms[1:]
        elifs = tuple((c, self.block(i)) for c, i in rest)
        tail = V("Else", (self.block(orelse),)) if orelse is not None else V("NoElse")
        return V("If", (cond, self.block(items), elifs, tail))

    def while_stmt(self, cond, body):
        return V("While", (cond, self.block(body)))

    def counted(self, counter, bound, body):
        start, limit, step = V("IntLit", (1,)), V("IntLit", (bound,)), V("NoExpr")
        if self.chance(0.3):
            start, limit = limit, start
            step = V("SomeExpr", (self.unary("-", V("IntLit", (1,))),))
        return [V("NumFor", (self.ident(counter), start, limit, step, self.block(body)))]

    def block_stmt(self, items):
        return V("Do", (self.block(items),))

    def break_stmt(self):
        return V("Break")

    def function(self, name, params, items, result):
        body = self.block(items + [V("Return", (V("SomeExpr", (result,)),))])
        return V("FunDef", (self.ident(name), tuple(self.ident(p) for p in params), body))

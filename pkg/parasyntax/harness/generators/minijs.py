from ...schema import GenericValue as V
from .base import VarType
from .curly import CurlyGenerator

__all__ = ["MiniJSGenerator"]

DIRECTIVE = "use strict"


class MiniJSGenerator(CurlyGenerator):
    int_short_circuit = True

    def block(self, items, directives=()):
        return V("Block", (tuple(V("Directive", (d,)) for d in directives), tuple(items)))

    def item(self, stmt):
        return stmt

    def declare(self, kind, bindings):
        declarators = []
        for name, init in bindings:
            if kind is VarType.Array:
                init = V("ArrayLit", (tuple(init),))
            declarators.append(V("VarDeclarator", (self.ident(name), V("SomeExpr", (init,)))))
        return [V("VarDecl", (tuple(declarators),))]

    def int_extras(self, depth):
        if self.visible(VarType.Array):
            return [(self.length, 1)]
        return []

    def length(self, depth: int) -> V:
        array = self.random.choice(self.visible(VarType.Array))
        return V("Field", (self.ref(array.name), self.ident("length")))

    def function(self, name, params, items, result):
        directives = (DIRECTIVE,) if self.chance(0.2) else ()
        body = self.block(items + [self.returns(result)], directives)
        return V("FunDef", (self.ident(name), tuple(self.ident(p) for p in params), body))

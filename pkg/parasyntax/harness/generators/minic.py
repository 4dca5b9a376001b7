from ...schema import GenericValue as V
from .base import VarType
from .curly import CurlyGenerator

__all__ = ["MiniCGenerator"]

TYPES = {VarType.Int: "TInt", VarType.Bool: "TBool", VarType.Array: "TIntArray"}


class MiniCGenerator(CurlyGenerator):
    """
    Arrays come from braced initializers or `array(...)`; a scalar is sometimes
    left uninitialized, or initialized with a one-element brace.
    """

    def block(self, items):
        return V("Block", (tuple(items),))

    def item(self, stmt):
        return V("StmtItem", (stmt,))

    def declare(self, kind, bindings):
        declarators = []
        for name, init in bindings:
            declarators.append(V("Declarator", (self.ident(name), self.initializer_node(kind, init))))
        return [V("DeclItem", (V("Decl", (V(TYPES[kind]), tuple(declarators))),))]

    def initializer_node(self, kind: VarType, init) -> V:
        if kind is VarType.Array:
            if self.chance(0.5):
                return V("HasInit", (V("BracedInit", (tuple(init),)),))
            return V("HasInit", (V("ExprInit", (self.call("array", init),)),))
        if self.chance(0.05):
            return V("NoInit")
        if kind is VarType.Int and self.chance(0.1):
            return V("HasInit", (V("BracedInit", ((init,),)),))
        return V("HasInit", (V("ExprInit", (init,)),))

    def function(self, name, params, items, result):
        params = tuple(V("Param", (V("TInt"), self.ident(p))) for p in params)
        body = self.block(items + [self.returns(result)])
        return V("FunDef", (V("TInt"), self.ident(name), params, body))

"""
MiniC concrete syntax.

Declarations are block items, not statements: `if (x) int y = 1;` does not parse.
Braced initializers are only legal in declarations.
"""
from typing import List

from ...schema import GenericValue as V
from ..base import Lexer, indent
from ..curly import CONTROL_KEYWORDS, OPERATORS, CurlyParser, CurlyPrinter

__all__ = ["MiniCParser", "MiniCPrinter", "parse_minic", "pretty_minic"]

LEXER = Lexer([op for op in OPERATORS if op != "."], comment="//")

TYPE_NAMES = {"TInt": "int", "TBool": "bool", "TIntArray": "int[]"}


class MiniCParser(CurlyParser):
    keywords = frozenset(CONTROL_KEYWORDS + ["int", "bool"])

    def program(self) -> V:
        functions = []
        while self.peek().kind != "eof":
            functions.append(self.fundef())
        return V("Program", (tuple(functions),))

    def type(self) -> V:
        if self.accept("int"):
            if self.accept("["):
                self.expect("]")
                return V("TIntArray")
            return V("TInt")
        if self.accept("bool"):
            return V("TBool")
        raise self.error("a type")

    def ident(self) -> V:
        return V("Ident", (self.name(),))

    def fundef(self) -> V:
        ret = self.type()
        name = self.ident()
        self.expect("(")
        params = self.separated(self.param, ")")
        return V("FunDef", (ret, name, params, self.block()))

    def param(self) -> V:
        return V("Param", (self.type(), self.ident()))

    def block(self) -> V:
        self.expect("{")
        items = []
        while not self.accept("}"):
            if self.at("int", "bool"):
                items.append(V("DeclItem", (self.decl(),)))
            else:
                items.append(V("StmtItem", (self.stmt(),)))
        return V("Block", (tuple(items),))

    def decl(self) -> V:
        ty = self.type()
        declarators = [self.declarator()]
        while self.accept(","):
            declarators.append(self.declarator())
        self.expect(";")
        return V("Decl", (ty, tuple(declarators)))

    def declarator(self) -> V:
        name = self.ident()
        if not self.accept("="):
            return V("Declarator", (name, V("NoInit")))
        if self.accept("{"):
            init = V("BracedInit", (self.separated(self.expr, "}"),))
        else:
            init = V("ExprInit", (self.expr(),))
        return V("Declarator", (name, V("HasInit", (init,))))

    def simple_stmt(self) -> V:
        if self.at("int", "bool"):
            raise self.error("a statement")
        return super().simple_stmt()


def parse_minic(text: str) -> V:
    parser = MiniCParser(LEXER.tokenize(text))
    return parser.finish(parser.program())


class MiniCPrinter(CurlyPrinter):
    def program(self, ast: V) -> str:
        (functions,) = ast.args
        return "\n".join("\n".join(self.fundef(f)) + "\n" for f in functions)

    def fundef(self, f: V) -> List[str]:
        ret, name, params, body = f.args
        params = ", ".join(f"{TYPE_NAMES[t.ctor]} {p.args[0]}" for t, p in (q.args for q in params))
        return self.block(f"{TYPE_NAMES[ret.ctor]} {name.args[0]}({params})", body)

    def block(self, header: str, block: V) -> List[str]:
        (items,) = block.args
        body = []
        for item in items:
            (inner,) = item.args
            body.extend([self.decl(inner)] if item.ctor == "DeclItem" else self.stmt(inner))
        return [f"{header} {{" if header else "{", *indent(body), "}"]

    def decl(self, decl: V) -> str:
        ty, declarators = decl.args
        return f"{TYPE_NAMES[ty.ctor]} {', '.join(self.declarator(d) for d in declarators)};"

    def declarator(self, d: V) -> str:
        ident, opt = d.args
        name = ident.args[0]
        if opt.ctor == "NoInit":
            return name
        (init,) = opt.args
        if init.ctor == "BracedInit":
            return f"{name} = {{{self.args(init.args[0])}}}"
        return f"{name} = {self.expr(init.args[0])}"


def pretty_minic(ast: V) -> str:
    return MiniCPrinter().program(ast)

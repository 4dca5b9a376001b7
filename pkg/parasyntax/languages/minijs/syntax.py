"""
MiniJS concrete syntax.

Directives are string-literal statements at the top of a block and are kept apart
from the block's statements. `var` declarations are statements.
"""
from typing import List

from ...schema import GenericValue as V
from ..base import Lexer, indent
from ..curly import CONTROL_KEYWORDS, OPERATORS, CurlyParser, CurlyPrinter

__all__ = ["MiniJSParser", "MiniJSPrinter", "parse_minijs", "pretty_minijs"]

LEXER = Lexer(OPERATORS, comment="//")


class MiniJSParser(CurlyParser):
    keywords = frozenset(CONTROL_KEYWORDS + ["function", "var", "undefined"])
    assignable = ("Var", "Index", "Field")

    def program(self) -> V:
        functions = []
        while self.peek().kind != "eof":
            functions.append(self.fundef())
        return V("Program", (tuple(functions),))

    def ident(self) -> V:
        return V("Ident", (self.name(),))

    def fundef(self) -> V:
        self.expect("function")
        name = self.ident()
        self.expect("(")
        params = self.separated(self.ident, ")")
        return V("FunDef", (name, params, self.block()))

    def block(self) -> V:
        self.expect("{")
        directives = []
        while self.peek().kind == "string":
            directives.append(V("Directive", (self.advance().text[1:-1],)))
            self.expect(";")
        stmts = []
        while not self.accept("}"):
            stmts.append(self.stmt())
        return V("Block", (tuple(directives), tuple(stmts)))

    def simple_stmt(self) -> V:
        if self.accept("var"):
            declarators = [self.declarator()]
            while self.accept(","):
                declarators.append(self.declarator())
            self.expect(";")
            return V("VarDecl", (tuple(declarators),))
        return super().simple_stmt()

    def declarator(self) -> V:
        name = self.ident()
        if self.accept("="):
            return V("VarDeclarator", (name, V("SomeExpr", (self.expr(),))))
        return V("VarDeclarator", (name, V("NoExpr")))

    def postfix(self) -> V:
        e = self.primary()
        while True:
            if self.accept("["):
                index = self.expr()
                self.expect("]")
                e = V("Index", (e, index))
            elif self.accept("."):
                e = V("Field", (e, self.ident()))
            else:
                return e

    def primary(self) -> V:
        if self.accept("undefined"):
            return V("Undefined")
        if self.accept("["):
            return V("ArrayLit", (self.separated(self.expr, "]"),))
        return super().primary()


def parse_minijs(text: str) -> V:
    parser = MiniJSParser(LEXER.tokenize(text))
    return parser.finish(parser.program())


class MiniJSPrinter(CurlyPrinter):
    def program(self, ast: V) -> str:
        (functions,) = ast.args
        return "\n".join("\n".join(self.fundef(f)) + "\n" for f in functions)

    def fundef(self, f: V) -> List[str]:
        name, params, body = f.args
        params = ", ".join(p.args[0] for p in params)
        return self.block(f"function {name.args[0]}({params})", body)

    def block(self, header: str, block: V) -> List[str]:
        directives, stmts = block.args
        body = [f'"{d.args[0]}";' for d in directives]
        for stmt in stmts:
            body.extend(self.stmt(stmt))
        return [f"{header} {{" if header else "{", *indent(body), "}"]

    def simple_stmt(self, s: V) -> List[str]:
        if s.ctor == "VarDecl":
            return ["var " + ", ".join(self.declarator(d) for d in s.args[0]) + ";"]
        return super().simple_stmt(s)

    def declarator(self, d: V) -> str:
        ident, opt = d.args
        if opt.ctor == "SomeExpr":
            return f"{ident.args[0]} = {self.expr(opt.args[0], 1)}"
        return ident.args[0]

    def render(self, e: V):
        if e.ctor == "Undefined":
            return "undefined", 10
        if e.ctor == "ArrayLit":
            return f"[{self.args(e.args[0])}]", 10
        if e.ctor == "Field":
            base, field = e.args
            return f"{self.expr(base, self.postfix_precedence)}.{field.args[0]}", 9
        return super().render(e)


def pretty_minijs(ast: V) -> str:
    return MiniJSPrinter().program(ast)

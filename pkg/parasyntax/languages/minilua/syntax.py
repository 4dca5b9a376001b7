"""
MiniLua concrete syntax.

`local` declarations and assignments bind several names at once and evaluate
every right-hand side before storing. Tables are written `{e, ...}`.
"""
from typing import List

from ...schema import GenericValue as V
from ..base import Lexer, Parser, Printer, indent

__all__ = ["MiniLuaParser", "MiniLuaPrinter", "parse_minilua", "pretty_minilua"]

OPERATORS = [
    "==", "~=", "<=", ">=", "<", ">", "+", "-", "*", "//", "%",
    "=", "(", ")", "{", "}", "[", "]", ",", ".", ";",
]  # fmt: skip

BINARY_LEVELS = [
    ("or",),
    ("and",),
    ("<", ">", "<=", ">=", "~=", "=="),
    ("+", "-"),
    ("*", "//", "%"),
]

LEXER = Lexer(OPERATORS, comment="--")

BLOCK_END = ("end", "else", "elseif")


class MiniLuaParser(Parser):
    keywords = frozenset(
        [
            "function", "local", "if", "then", "elseif", "else", "end", "while", "do",
            "for", "return", "break", "nil", "true", "false", "and", "or", "not",
        ]
    )  # fmt: skip

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
        body = self.block()
        self.expect("end")
        return V("FunDef", (name, params, body))

    def at_block_end(self) -> bool:
        return self.peek().kind == "eof" or self.at(*BLOCK_END)

    def block(self) -> V:
        stmts = []
        while not self.at_block_end():
            if self.accept(";"):
                continue
            stmts.append(self.stmt())
        return V("Block", (tuple(stmts),))

    def exprs(self) -> tuple:
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        return tuple(items)

    def stmt(self) -> V:
        if self.accept("local"):
            names = [self.ident()]
            while self.accept(","):
                names.append(self.ident())
            values = self.exprs() if self.accept("=") else ()
            return V("Local", (tuple(names), values))
        if self.accept("if"):
            cond = self.expr()
            self.expect("then")
            then = self.block()
            elifs = []
            while self.accept("elseif"):
                c = self.expr()
                self.expect("then")
                elifs.append((c, self.block()))
            orelse = V("Else", (self.block(),)) if self.accept("else") else V("NoElse")
            self.expect("end")
            return V("If", (cond, then, tuple(elifs), orelse))
        if self.accept("while"):
            cond = self.expr()
            self.expect("do")
            body = self.block()
            self.expect("end")
            return V("While", (cond, body))
        if self.accept("for"):
            var = self.ident()
            self.expect("=")
            start = self.expr()
            self.expect(",")
            stop = self.expr()
            step = V("SomeExpr", (self.expr(),)) if self.accept(",") else V("NoExpr")
            self.expect("do")
            body = self.block()
            self.expect("end")
            return V("NumFor", (var, start, stop, step, body))
        if self.accept("do"):
            body = self.block()
            self.expect("end")
            return V("Do", (body,))
        if self.accept("return"):
            if self.accept(";") or self.at_block_end():
                return V("Return", (V("NoExpr"),))
            return V("Return", (V("SomeExpr", (self.expr(),)),))
        if self.accept("break"):
            return V("Break")
        e = self.suffixed()
        if self.at("=", ","):
            targets = [self.target(e)]
            while self.accept(","):
                targets.append(self.target(self.suffixed()))
            self.expect("=")
            return V("Assign", (tuple(targets), self.exprs()))
        if e.ctor != "Call":
            raise self.error("a statement")
        return V("CallStmt", (e,))

    def target(self, e: V) -> V:
        if e.ctor != "VarExpr":
            raise self.error("an assignable expression")
        return e.args[0]

    def expr(self) -> V:
        return self.binary(BINARY_LEVELS, self.unary)

    def unary(self) -> V:
        if self.at("not", "-"):
            op = self.advance().text
            return V("Unary", (op, self.unary()))
        return self.simple()

    def simple(self) -> V:
        token = self.peek()
        if token.kind == "int":
            return V("IntLit", (self.integer(),))
        if self.accept("nil"):
            return V("Nil")
        if self.accept("true"):
            return V("BoolLit", (True,))
        if self.accept("false"):
            return V("BoolLit", (False,))
        if self.accept("{"):
            return V("Table", (self.separated(self.expr, "}"),))
        return self.suffixed()

    def suffixed(self) -> V:
        if self.accept("("):
            e = self.expr()
            self.expect(")")
        elif self.at_name():
            name = self.ident()
            if self.accept("("):
                e = V("Call", (name, self.separated(self.expr, ")")))
            else:
                e = V("VarExpr", (V("Name", (name,)),))
        else:
            raise self.error("an expression")
        while True:
            if self.accept("["):
                index = self.expr()
                self.expect("]")
                e = V("VarExpr", (V("IndexVar", (e, index)),))
            elif self.accept("."):
                e = V("VarExpr", (V("FieldVar", (e, self.ident())),))
            else:
                return e


def parse_minilua(text: str) -> V:
    parser = MiniLuaParser(LEXER.tokenize(text))
    return parser.finish(parser.program())


class MiniLuaPrinter(Printer):
    binary_precedence = {op: level + 1 for level, ops in enumerate(BINARY_LEVELS) for op in ops}
    unary_precedence = 6
    postfix_precedence = 7

    def program(self, ast: V) -> str:
        (functions,) = ast.args
        return "\n".join("\n".join(self.fundef(f)) + "\n" for f in functions)

    def fundef(self, f: V) -> List[str]:
        name, params, body = f.args
        params = ", ".join(p.args[0] for p in params)
        return [f"function {name.args[0]}({params})", *self.block(body), "end"]

    def block(self, block: V) -> List[str]:
        return indent([line for stmt in block.args[0] for line in self.stmt(stmt)])

    def names(self, idents) -> str:
        return ", ".join(i.args[0] for i in idents)

    def stmt(self, s: V) -> List[str]:
        ctor = s.ctor
        if ctor == "Local":
            names, values = s.args
            tail = f" = {self.args(values)}" if values else ""
            return [f"local {self.names(names)}{tail}"]
        if ctor == "Assign":
            targets, values = s.args
            return [f"{', '.join(self.var(t) for t in targets)} = {self.args(values)}"]
        if ctor == "CallStmt":
            return [self.expr(s.args[0])]
        if ctor == "Do":
            return ["do", *self.block(s.args[0]), "end"]
        if ctor == "If":
            cond, then, elifs, orelse = s.args
            lines = [f"if {self.expr(cond)} then", *self.block(then)]
            for c, b in elifs:
                lines += [f"elseif {self.expr(c)} then", *self.block(b)]
            if orelse.ctor == "Else":
                lines += ["else", *self.block(orelse.args[0])]
            return lines + ["end"]
        if ctor == "While":
            cond, body = s.args
            return [f"while {self.expr(cond)} do", *self.block(body), "end"]
        if ctor == "NumFor":
            var, start, stop, step, body = s.args
            bounds = [self.expr(start), self.expr(stop)]
            if step.ctor == "SomeExpr":
                bounds.append(self.expr(step.args[0]))
            header = f"for {var.args[0]} = {', '.join(bounds)} do"
            return [header, *self.block(body), "end"]
        if ctor == "Return":
            value = s.args[0]
            return [f"return {self.expr(value.args[0])}" if value.ctor == "SomeExpr" else "return;"]
        return ["break"]

    def var(self, v: V) -> str:
        return self.render_var(v)[0]

    def render_var(self, v: V):
        if v.ctor == "Name":
            return v.args[0].args[0], 8
        base, key = v.args
        if v.ctor == "IndexVar":
            return f"{self.expr(base, self.postfix_precedence)}[{self.expr(key)}]", 7
        return f"{self.expr(base, self.postfix_precedence)}.{key.args[0]}", 7

    def render(self, e: V):
        ctor = e.ctor
        if ctor == "Nil":
            return "nil", 8
        if ctor == "IntLit":
            return str(e.args[0]), 8
        if ctor == "BoolLit":
            return ("true" if e.args[0] else "false"), 8
        if ctor == "VarExpr":
            return self.render_var(e.args[0])
        if ctor == "Call":
            name, args = e.args
            return f"{name.args[0]}({self.args(args)})", 8
        if ctor == "Table":
            return f"{{{self.args(e.args[0])}}}", 8
        if ctor == "Unary":
            op, operand = e.args
            text = self.expr(operand, self.unary_precedence)
            if op == "not":
                return f"not {text}", 6
            if text.startswith("-"):
                text = f"({text})"
            return f"-{text}", 6
        return self.binary(e)


def pretty_minilua(ast: V) -> str:
    return MiniLuaPrinter().program(ast)

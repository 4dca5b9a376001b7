"""
Statement and expression syntax shared by the brace languages (MiniC, MiniJS):
`if`/`else`, `while`, C-style `for`, `return`, `break`, `continue`, expression
statements, and C operator precedence with assignment as an expression.
"""
from typing import List

from ..schema import GenericValue as V
from .base import Parser, Printer, indent

__all__ = ["BINARY_LEVELS", "CurlyParser", "CurlyPrinter", "OPERATORS"]

OPERATORS = [
    "&&", "||", "==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "/", "%", "!",
    "=", "(", ")", "{", "}", "[", "]", ",", ";", ".",
]  # fmt: skip

BINARY_LEVELS = [
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", "<=", ">", ">="),
    ("+", "-"),
    ("*", "/", "%"),
]

CONTROL_KEYWORDS = ["if", "else", "while", "for", "return", "break", "continue", "true", "false"]


class CurlyParser(Parser):
    assignable = ("Var", "Index")

    def block(self) -> V:
        raise NotImplementedError

    def simple_stmt(self) -> V:
        """A statement that does not start with a control keyword."""
        e = self.expr()
        self.expect(";")
        return V("ExprStmt", (e,))

    def opt_expr(self, close: str) -> V:
        if self.at(close):
            return V("NoExpr")
        return V("SomeExpr", (self.expr(),))

    def paren_expr(self) -> V:
        self.expect("(")
        e = self.expr()
        self.expect(")")
        return e

    def stmt(self) -> V:
        if self.at("{"):
            return V("BlockStmt", (self.block(),))
        if self.accept("if"):
            cond = self.paren_expr()
            then = self.stmt()
            if self.accept("else"):
                return V("IfElse", (cond, then, self.stmt()))
            return V("If", (cond, then))
        if self.accept("while"):
            cond = self.paren_expr()
            return V("While", (cond, self.stmt()))
        if self.accept("for"):
            self.expect("(")
            init = self.opt_expr(";")
            self.expect(";")
            cond = self.opt_expr(";")
            self.expect(";")
            step = self.opt_expr(")")
            self.expect(")")
            return V("For", (init, cond, step, self.stmt()))
        if self.accept("return"):
            value = self.opt_expr(";")
            self.expect(";")
            return V("Return", (value,))
        if self.accept("break"):
            self.expect(";")
            return V("Break")
        if self.accept("continue"):
            self.expect(";")
            return V("Continue")
        return self.simple_stmt()

    def expr(self) -> V:
        left = self.binary(BINARY_LEVELS, self.unary)
        if self.at("="):
            if left.ctor not in self.assignable:
                raise self.error("an assignable expression before '='")
            self.advance()
            return V("Assign", (left, self.expr()))
        return left

    def unary(self) -> V:
        if self.at("-", "!"):
            op = self.advance().text
            return V("Unary", (op, self.unary()))
        return self.postfix()

    def postfix(self) -> V:
        e = self.primary()
        while self.accept("["):
            index = self.expr()
            self.expect("]")
            e = V("Index", (e, index))
        return e

    def primary(self) -> V:
        token = self.peek()
        if token.kind == "int":
            return V("IntLit", (self.integer(),))
        if self.accept("true"):
            return V("BoolLit", (True,))
        if self.accept("false"):
            return V("BoolLit", (False,))
        if self.at("("):
            return self.paren_expr()
        if self.at_name():
            name = V("Ident", (self.name(),))
            if self.accept("("):
                return V("Call", (name, self.separated(self.expr, ")")))
            return V("Var", (name,))
        raise self.error("an expression")


class CurlyPrinter(Printer):
    binary_precedence = {op: level + 2 for level, ops in enumerate(BINARY_LEVELS) for op in ops}
    unary_precedence = 8
    postfix_precedence = 9

    def block(self, header: str, block: V) -> List[str]:
        raise NotImplementedError

    def simple_stmt(self, s: V) -> List[str]:
        return [self.expr(s.args[0]) + ";"]

    def opt(self, opt: V) -> str:
        return self.expr(opt.args[0]) if opt.ctor == "SomeExpr" else ""

    def arm(self, header: str, stmt: V) -> List[str]:
        if stmt.ctor == "BlockStmt":
            return self.block(header, stmt.args[0])
        return [header, *indent(self.stmt(stmt))]

    def stmt(self, s: V) -> List[str]:
        ctor = s.ctor
        if ctor == "BlockStmt":
            return self.block("", s.args[0])
        if ctor == "If":
            cond, then = s.args
            return self.arm(f"if ({self.expr(cond)})", then)
        if ctor == "IfElse":
            cond, then, orelse = s.args
            lines = self.arm(f"if ({self.expr(cond)})", then)
            if orelse.ctor in ("If", "IfElse"):
                tail = self.stmt(orelse)
                tail[0] = "else " + tail[0]
            else:
                tail = self.arm("else", orelse)
            if lines[-1] == "}":
                return lines[:-1] + ["} " + tail[0]] + tail[1:]
            return lines + tail
        if ctor == "While":
            cond, body = s.args
            return self.arm(f"while ({self.expr(cond)})", body)
        if ctor == "For":
            init, cond, step, body = s.args
            header = f"for ({self.opt(init)}; {self.opt(cond)}; {self.opt(step)})"
            return self.arm(header, body)
        if ctor == "Return":
            value = self.opt(s.args[0])
            return [f"return {value};" if value else "return;"]
        if ctor == "Break":
            return ["break;"]
        if ctor == "Continue":
            return ["continue;"]
        return self.simple_stmt(s)

    def render(self, e: V):
        ctor = e.ctor
        if ctor == "IntLit":
            return str(e.args[0]), 10
        if ctor == "BoolLit":
            return ("true" if e.args[0] else "false"), 10
        if ctor == "Var":
            return e.args[0].args[0], 10
        if ctor == "Call":
            name, args = e.args
            return f"{name.args[0]}({self.args(args)})", 10
        if ctor == "Index":
            base, index = e.args
            return f"{self.expr(base, self.postfix_precedence)}[{self.expr(index)}]", 9
        if ctor == "Unary":
            op, operand = e.args
            return f"{op}{self.expr(operand, self.unary_precedence)}", 8
        if ctor == "Binary":
            return self.binary(e)
        if ctor == "Assign":
            lhs, rhs = e.args
            return f"{self.expr(lhs, self.postfix_precedence)} = {self.expr(rhs, 1)}", 1
        raise ValueError(f"cannot print expression {e.ctor}")

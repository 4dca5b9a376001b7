from ...fragments import (
    BLOCK_ITEM_L,
    EMPTY_COMMON_ATTRS,
    EMPTY_DECL_ATTRS,
    ExprRole,
    ExprShape,
    LanguageOps,
    StmtRole,
    StmtShape,
    assign,
    block,
    ident,
    multi_local_var_decl,
    single_local_var_decl,
)
from ...terms import Term
from ..base import list_paths

__all__ = ["MiniJSOps"]


class MiniJSOps(LanguageOps):
    def __init__(self, lang):
        self.lang = lang

    @property
    def name(self):
        return self.lang.name

    def _is(self, term: Term, *names: str) -> bool:
        return term.kind.name in {f"MiniJS.{name}" for name in names}

    def var(self, name: str) -> Term:
        return self.lang.node("Var", self.lang.wrap("IdentIsIdent", ident(name)))

    def var_init_to_rhs(self, common_attrs, decl_attrs, init):
        return self.lang.wrap("ExprIsRhs", self.lang.unwrap("ExprIsLocalVarInit", init))

    def var_decl_binder_to_lhs(self, binder):
        name = self.lang.unwrap("IdentIsBinder", binder)
        return self.lang.wrap("ExprIsLhs", self.var(name.payloads[0]))

    def block_body(self, term):
        return (1,)

    def stmt_shape(self, stmt):
        if self._is(stmt, "ExprStmt"):
            return StmtShape(StmtRole.SIMPLE, exprs=((0,),))
        if self._is(stmt, "MultiLocalVarDeclIsStmt"):
            return StmtShape(StmtRole.SIMPLE)
        if self._is(stmt, "BlockStmt"):
            return StmtShape(StmtRole.BLOCK, arms=((0, 1),))
        if self._is(stmt, "If"):
            return StmtShape(StmtRole.IF, conds=((0,),), arms=((1,),))
        if self._is(stmt, "IfElse"):
            return StmtShape(StmtRole.IF, conds=((0,),), arms=((1,),), orelse=(2,))
        if self._is(stmt, "While"):
            return StmtShape(StmtRole.WHILE, conds=((0,),), arms=((1,),))
        if self._is(stmt, "For"):
            init, cond, step, _ = stmt.children

            def present(i, opt):
                return (i, 0) if self._is(opt, "SomeExpr") else None

            return StmtShape(
                StmtRole.FOR,
                conds=tuple(p for p in [present(1, cond)] if p),
                arms=((3,),),
                init=present(0, init),
                step=present(2, step),
            )
        if self._is(stmt, "Return"):
            exprs = ((0, 0),) if self._is(stmt.children[0], "SomeExpr") else ()
            return StmtShape(StmtRole.RETURN, exprs=exprs)
        if self._is(stmt, "Break"):
            return StmtShape(StmtRole.BREAK)
        if self._is(stmt, "Continue"):
            return StmtShape(StmtRole.CONTINUE)
        return None

    def expr_shape(self, expr):
        if self._is(expr, "IntLit", "BoolLit", "Undefined"):
            return ExprShape(ExprRole.ATOM)
        if self._is(expr, "Var"):
            return ExprShape(ExprRole.ATOM, variable=expr.children[0].children[0].payloads[0])
        if self._is(expr, "Binary"):
            op = expr.payloads[0]
            if op in ("&&", "||"):
                return ExprShape(ExprRole.SHORT_CIRCUIT, ((0,), (1,)), conjunction=op == "&&")
            return ExprShape(ExprRole.OPERATOR, ((0,), (1,)))
        if self._is(expr, "Unary", "Field"):
            return ExprShape(ExprRole.OPERATOR, ((0,),))
        if self._is(expr, "Index"):
            return ExprShape(ExprRole.OPERATOR, ((0,), (1,)))
        if self._is(expr, "Call"):
            return ExprShape(ExprRole.OPERATOR, list_paths((1,), expr.children[1]))
        if self._is(expr, "ArrayLit"):
            return ExprShape(ExprRole.OPERATOR, list_paths((0,), expr.children[0]))
        return ExprShape(ExprRole.OPERATOR, ((0, 2, 0), (0, 0, 0)))

    def strip_for(self, stmt):
        init, cond, step, body = stmt.children
        none = self.lang.node("NoExpr")
        return self.lang.node("For", none, cond, none, body)

    def coverage_marker(self, index):
        lang = self.lang
        cov = lang.node("Field", self.var("TC"), lang.wrap("IdentIsIdent", ident("cov")))
        target = lang.node("Index", cov, lang.node("IntLit", payloads=(index,)))
        store = assign(
            lang.wrap("ExprIsLhs", target),
            lang.wrap("ExprIsRhs", lang.node("BoolLit", payloads=(True,))),
        )
        return lang.injections.inj(store, BLOCK_ITEM_L)

    def make_if(self, arms, orelse):
        lang = self.lang
        stmt_sort = lang.stmt_sort
        tail = None
        if orelse is not None:
            tail = lang.injections.inj(block(orelse), stmt_sort)
        for cond, items in reversed(arms):
            then = lang.injections.inj(block(items), stmt_sort)
            if tail is None:
                tail = lang.node("If", cond, then)
            else:
                tail = lang.node("IfElse", cond, then, tail)
        return tail

    def make_not(self, expr):
        return self.lang.node("Unary", expr, payloads=("!",))

    def declare_locals(self, names):
        singles = [
            single_local_var_decl(
                Term(EMPTY_DECL_ATTRS, (), ()), self.lang.wrap("IdentIsBinder", ident(n)), None
            )
            for n in names
        ]
        decl = multi_local_var_decl(Term(EMPTY_COMMON_ATTRS, (), ()), singles)
        return self.lang.injections.inj(decl, BLOCK_ITEM_L)

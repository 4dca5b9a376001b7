from ...errors import UnconvertibleInit
from ...fragments import (
    BLOCK_ITEM_L,
    ExprRole,
    ExprShape,
    LanguageOps,
    StmtRole,
    StmtShape,
    assign,
    ident,
)
from ...terms import Term, extract_list
from ..base import list_paths

__all__ = ["MiniCOps"]


class MiniCOps(LanguageOps):
    def __init__(self, lang):
        self.lang = lang

    @property
    def name(self):
        return self.lang.name

    def _is(self, term: Term, *names: str) -> bool:
        return term.kind.name in {f"MiniC.{name}" for name in names}

    def var(self, name: str) -> Term:
        return self.lang.node("Var", self.lang.wrap("IdentIsIdent", ident(name)))

    def var_init_to_rhs(self, common_attrs, decl_attrs, init):
        lang = self.lang
        ty = lang.unwrap("TypeIsCommonAttrs", common_attrs)
        inner = lang.unwrap("InitIsLocalVarInit", init)
        if self._is(inner, "ExprInit"):
            return lang.wrap("ExprIsRhs", inner.children[0])
        elems = extract_list(inner.children[0])
        if self._is(ty, "TIntArray"):
            callee = lang.wrap("IdentIsIdent", ident("array"))
            expr = lang.node("Call", callee, inner.children[0])
        elif len(elems) == 1:
            expr = elems[0]
        else:
            raise UnconvertibleInit(lang.name, f"scalar braced initializer of {len(elems)}")
        return lang.wrap("ExprIsRhs", expr)

    def var_decl_binder_to_lhs(self, binder):
        name = self.lang.unwrap("IdentIsBinder", binder)
        return self.lang.wrap("ExprIsLhs", self.var(name.payloads[0]))

    def block_body(self, term):
        return (0,)

    def stmt_shape(self, stmt):
        if self._is(stmt, "ExprStmt"):
            return StmtShape(StmtRole.SIMPLE, exprs=((0,),))
        if self._is(stmt, "BlockStmt"):
            return StmtShape(StmtRole.BLOCK, arms=((0, 0),))
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
        if self._is(expr, "IntLit", "BoolLit"):
            return ExprShape(ExprRole.ATOM)
        if self._is(expr, "Var"):
            return ExprShape(ExprRole.ATOM, variable=expr.children[0].children[0].payloads[0])
        if self._is(expr, "Binary"):
            op = expr.payloads[0]
            if op in ("&&", "||"):
                return ExprShape(ExprRole.SHORT_CIRCUIT, ((0,), (1,)), conjunction=op == "&&")
            return ExprShape(ExprRole.OPERATOR, ((0,), (1,)))
        if self._is(expr, "Unary"):
            return ExprShape(ExprRole.OPERATOR, ((0,),))
        if self._is(expr, "Index"):
            return ExprShape(ExprRole.OPERATOR, ((0,), (1,)))
        if self._is(expr, "Call"):
            return ExprShape(ExprRole.OPERATOR, list_paths((1,), expr.children[1]))
        # AssignIsExpr: the stored value, then the location
        return ExprShape(ExprRole.OPERATOR, ((0, 2, 0), (0, 0, 0)))

    def coverage_marker(self, index):
        lang = self.lang
        target = lang.node("Index", self.var("cov"), lang.node("IntLit", payloads=(index,)))
        store = assign(
            lang.wrap("ExprIsLhs", target),
            lang.wrap("ExprIsRhs", lang.node("BoolLit", payloads=(True,))),
        )
        return lang.injections.inj(store, BLOCK_ITEM_L)

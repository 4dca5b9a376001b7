from ...fragments import (
    BLOCK_ITEM_L,
    EMPTY_COMMON_ATTRS,
    EMPTY_DECL_ATTRS,
    IDENT_L,
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
from ...terms import PairOf, Term, build_list, build_pair, extract_list
from ..base import list_paths

__all__ = ["MiniLuaOps"]


class MiniLuaOps(LanguageOps):
    def __init__(self, lang):
        self.lang = lang

    @property
    def name(self):
        return self.lang.name

    def _is(self, term: Term, *names: str) -> bool:
        return term.kind.name in {f"MiniLua.{name}" for name in names}

    def name_var(self, name: str) -> Term:
        return self.lang.node("Name", self.lang.wrap("IdentIsIdent", ident(name)))

    def var(self, name: str) -> Term:
        return self.lang.wrap("VarExpr", self.name_var(name))

    def var_init_to_rhs(self, common_attrs, decl_attrs, init):
        return self.lang.wrap("ExprsIsRhs", self.lang.unwrap("ExprsIsLocalVarInit", init))

    def var_decl_binder_to_lhs(self, binder):
        lang = self.lang
        names = extract_list(lang.unwrap("IdentsIsBinder", binder))
        targets = [self.name_var(n.payloads[0]) for n in names]
        return lang.wrap("VarsIsLhs", build_list(lang.sort("Var"), targets))

    def block_body(self, term):
        return (0,)

    def stmt_shape(self, stmt):
        if self._is(stmt, "AssignIsStmt", "MultiLocalVarDeclIsStmt"):
            return StmtShape(StmtRole.SIMPLE)
        if self._is(stmt, "CallStmt"):
            return StmtShape(StmtRole.SIMPLE, exprs=((0,),))
        if self._is(stmt, "Do"):
            return StmtShape(StmtRole.BLOCK, arms=((0, 0),))
        if self._is(stmt, "If"):
            _, _, elifs, orelse = stmt.children
            conds, arms = [(0,)], [(1,)]
            for k in range(len(extract_list(elifs))):
                pair = (2,) + (1,) * k + (0,)
                conds.append(pair + (0,))
                arms.append(pair + (1,))
            return StmtShape(
                StmtRole.IF,
                conds=tuple(conds),
                arms=tuple(arms),
                orelse=(3, 0) if self._is(orelse, "Else") else None,
            )
        if self._is(stmt, "While"):
            return StmtShape(StmtRole.WHILE, conds=((0,),), arms=((1,),))
        if self._is(stmt, "NumFor"):
            step = ((3, 0),) if self._is(stmt.children[3], "SomeExpr") else ()
            return StmtShape(StmtRole.NUMERIC_FOR, exprs=((1,), (2,)) + step, arms=((4,),))
        if self._is(stmt, "Return"):
            exprs = ((0, 0),) if self._is(stmt.children[0], "SomeExpr") else ()
            return StmtShape(StmtRole.RETURN, exprs=exprs)
        if self._is(stmt, "Break"):
            return StmtShape(StmtRole.BREAK)
        return None

    def expr_shape(self, expr):
        if self._is(expr, "Nil", "IntLit", "BoolLit"):
            return ExprShape(ExprRole.ATOM)
        if self._is(expr, "VarExpr"):
            var = expr.children[0]
            if self._is(var, "Name"):
                return ExprShape(ExprRole.ATOM, variable=var.children[0].children[0].payloads[0])
            if self._is(var, "IndexVar"):
                return ExprShape(ExprRole.OPERATOR, ((0, 0), (0, 1)))
            return ExprShape(ExprRole.OPERATOR, ((0, 0),))
        if self._is(expr, "Binary"):
            op = expr.payloads[0]
            if op in ("and", "or"):
                return ExprShape(ExprRole.SHORT_CIRCUIT, ((0,), (1,)), conjunction=op == "and")
            return ExprShape(ExprRole.OPERATOR, ((0,), (1,)))
        if self._is(expr, "Unary"):
            return ExprShape(ExprRole.OPERATOR, ((0,),))
        if self._is(expr, "Call"):
            return ExprShape(ExprRole.OPERATOR, list_paths((1,), expr.children[1]))
        return ExprShape(ExprRole.OPERATOR, list_paths((0,), expr.children[0]))

    def coverage_marker(self, index):
        lang = self.lang
        cov = lang.node("FieldVar", self.var("TC"), lang.wrap("IdentIsIdent", ident("cov")))
        slot = lang.node("IndexVar", lang.wrap("VarExpr", cov), lang.node("IntLit", payloads=(index,)))
        store = assign(
            lang.injections.inj(slot, lang.kind("VarsIsLhs").produced),
            lang.injections.inj(lang.node("BoolLit", payloads=(True,)), lang.kind("ExprsIsRhs").produced),
        )
        return lang.injections.inj(store, BLOCK_ITEM_L)

    def make_if(self, arms, orelse):
        lang = self.lang
        blocks = [(cond, lang.wrap("BlockIsBlock", block(items))) for cond, items in arms]
        (cond, then), rest = blocks[0], blocks[1:]
        elifs = build_list(
            PairOf(lang.expr_sort, lang.block_sort), [build_pair(c, b) for c, b in rest]
        )
        if orelse is None:
            tail = lang.node("NoElse")
        else:
            tail = lang.node("Else", lang.wrap("BlockIsBlock", block(orelse)))
        return lang.node("If", cond, then, elifs, tail)

    def make_not(self, expr):
        return self.lang.node("Unary", expr, payloads=("not",))

    def declare_locals(self, names):
        binder = self.lang.wrap("IdentsIsBinder", build_list(IDENT_L, [ident(n) for n in names]))
        single = single_local_var_decl(Term(EMPTY_DECL_ATTRS, (), ()), binder, None)
        decl = multi_local_var_decl(Term(EMPTY_COMMON_ATTRS, (), ()), [single])
        return self.lang.injections.inj(decl, BLOCK_ITEM_L)

from pathlib import Path

from ...errors import UnrepresentableTerm
from ...fragments import (
    ASSIGN,
    ASSIGN_L,
    ASSIGN_OP_EQUALS,
    BLOCK,
    BLOCK_ITEM_L,
    BLOCK_L,
    EMPTY_BLOCK_END,
    EMPTY_COMMON_ATTRS,
    EMPTY_DECL_ATTRS,
    IDENT,
    IDENT_L,
    JUST_LOCAL_VAR_INIT,
    LHS_L,
    LOCAL_VAR_INIT_L,
    MULTI_LOCAL_VAR_DECL,
    MULTI_LOCAL_VAR_DECL_L,
    RHS_L,
    SINGLE_LOCAL_VAR_DECL,
    VAR_DECL_BINDER_L,
    assign,
    block,
    ident,
    multi_local_var_decl,
    single_local_var_decl,
)
from ...injections import InjectionDecl
from ...terms import ListOf, Term, build_list, cons_kind, extract_list, nil_kind
from ..base import LanguageDef, injection_kind
from .ops import MiniLuaOps
from .syntax import parse_minilua, pretty_minilua

__all__ = ["MiniLua"]


class MiniLua(LanguageDef):
    """
    MiniLua binds and assigns lists: `local a, b = e1, e2` becomes one generic
    declarator whose binder is a list of identifiers and whose initializer is a
    list of expressions. There is no injection of a single identifier into the
    binder sort, so transformations that need one are refused for MiniLua.
    """

    name = "MiniLua"
    extension = ".mlua"
    removed = ("Ident", "Local", "Assign", "Block")

    @property
    def schema_path(self):
        return Path(__file__).parent / "minilua.schema"

    def parse(self, text):
        return parse_minilua(text)

    def pretty(self, ast):
        return pretty_minilua(ast)

    def make_ops(self):
        return MiniLuaOps(self)

    def injection_kinds(self):
        s = self.sort
        return [
            injection_kind(self.name, "IdentIsIdent", IDENT_L, s("Ident")),
            injection_kind(self.name, "AssignIsStmt", ASSIGN_L, s("Stmt")),
            injection_kind(self.name, "VarsIsLhs", ListOf(s("Var")), LHS_L),
            injection_kind(self.name, "ExprsIsRhs", ListOf(s("Expr")), RHS_L),
            injection_kind(self.name, "BlockIsBlock", BLOCK_L, s("Block")),
            injection_kind(self.name, "StmtIsBlockItem", s("Stmt"), BLOCK_ITEM_L),
            injection_kind(self.name, "MultiLocalVarDeclIsStmt", MULTI_LOCAL_VAR_DECL_L, s("Stmt")),
            injection_kind(self.name, "IdentsIsBinder", ListOf(IDENT_L), VAR_DECL_BINDER_L),
            injection_kind(self.name, "ExprsIsLocalVarInit", ListOf(s("Expr")), LOCAL_VAR_INIT_L),
        ]

    def declare_injections(self, table):
        s, k = self.sort, self.kind

        def edge(source, wrapper):
            return InjectionDecl.chain(source, [(k(wrapper), 0)])

        def singleton(elem):
            return InjectionDecl.chain(elem, [(cons_kind(elem), 0)], [[Term(nil_kind(elem), (), ())]])

        table = table.declare_all(
            [
                edge(IDENT_L, "IdentIsIdent"),
                edge(ASSIGN_L, "AssignIsStmt"),
                edge(ListOf(s("Var")), "VarsIsLhs"),
                edge(ListOf(s("Expr")), "ExprsIsRhs"),
                edge(BLOCK_L, "BlockIsBlock"),
                edge(s("Stmt"), "StmtIsBlockItem"),
                edge(MULTI_LOCAL_VAR_DECL_L, "MultiLocalVarDeclIsStmt"),
                edge(ListOf(IDENT_L), "IdentsIsBinder"),
                edge(ListOf(s("Expr")), "ExprsIsLocalVarInit"),
                edge(s("Ident"), "Name"),
                edge(s("Var"), "VarExpr"),
                edge(s("Block"), "Do"),
                singleton(s("Var")),
                singleton(s("Expr")),
            ]
        )
        return (
            table.compose_chain(IDENT_L, s("Ident"), s("Var"), s("Expr"))
            .compose_chain(s("Var"), ListOf(s("Var")), LHS_L)
            .compose(IDENT_L, s("Var"), LHS_L)
            .compose_chain(s("Expr"), ListOf(s("Expr")), RHS_L)
            .compose(IDENT_L, s("Expr"), RHS_L)
            .compose_chain(ASSIGN_L, s("Stmt"), BLOCK_ITEM_L)
            .compose_chain(BLOCK_L, s("Block"), s("Stmt"), BLOCK_ITEM_L)
            .compose(MULTI_LOCAL_VAR_DECL_L, s("Stmt"), BLOCK_ITEM_L)
        )

    def trans_rules(self):
        return {
            "MiniLua.Ident": self._trans_ident,
            "MiniLua.Assign": self._trans_assign,
            "MiniLua.Block": self._trans_block,
            "MiniLua.Local": self._trans_local,
        }

    def untrans_rules(self):
        return {
            "MiniLua.IdentIsIdent": self._untrans_ident,
            "MiniLua.AssignIsStmt": self._untrans_assign,
            "MiniLua.BlockIsBlock": self._untrans_block,
            "MiniLua.MultiLocalVarDeclIsStmt": self._untrans_local,
        }

    def _trans_ident(self, node: Term) -> Term:
        return self.wrap("IdentIsIdent", ident(node.payloads[0]))

    def _trans_assign(self, node: Term) -> Term:
        targets, values = node.children
        return self.wrap(
            "AssignIsStmt",
            assign(self.wrap("VarsIsLhs", targets), self.wrap("ExprsIsRhs", values)),
        )

    def _trans_block(self, node: Term) -> Term:
        stmts = extract_list(node.children[0])
        return self.wrap("BlockIsBlock", block([self.wrap("StmtIsBlockItem", s) for s in stmts]))

    def _trans_local(self, node: Term) -> Term:
        names, values = node.children
        idents = [self.unwrap("IdentIsIdent", n) for n in extract_list(names)]
        binder = self.wrap("IdentsIsBinder", build_list(IDENT_L, idents))
        init = self.wrap("ExprsIsLocalVarInit", values) if extract_list(values) else None
        single = single_local_var_decl(Term(EMPTY_DECL_ATTRS, (), ()), binder, init)
        decl = multi_local_var_decl(Term(EMPTY_COMMON_ATTRS, (), ()), [single])
        return self.wrap("MultiLocalVarDeclIsStmt", decl)

    def _name(self, term: Term) -> Term:
        self.expect(term, IDENT)
        return self.node("Ident", payloads=term.payloads)

    def _untrans_ident(self, node: Term) -> Term:
        return self._name(node.children[0])

    def _untrans_assign(self, node: Term) -> Term:
        lhs, op, rhs = self.expect(node.children[0], ASSIGN)
        self.expect(op, ASSIGN_OP_EQUALS)
        return self.node("Assign", self.unwrap("VarsIsLhs", lhs), self.unwrap("ExprsIsRhs", rhs))

    def _untrans_block(self, node: Term) -> Term:
        items, end = self.expect(node.children[0], BLOCK)
        self.expect(end, EMPTY_BLOCK_END)
        stmts = [self.unwrap("StmtIsBlockItem", i) for i in extract_list(items)]
        return self.node("Block", build_list(self.sort("Stmt"), stmts))

    def _untrans_local(self, node: Term) -> Term:
        decl = node.children[0]
        attrs, singles = self.expect(decl, MULTI_LOCAL_VAR_DECL)
        self.expect(attrs, EMPTY_COMMON_ATTRS)
        singles = extract_list(singles)
        if len(singles) != 1:
            raise UnrepresentableTerm(self.name, decl)
        decl_attrs, binder, opt = self.expect(singles[0], SINGLE_LOCAL_VAR_DECL)
        self.expect(decl_attrs, EMPTY_DECL_ATTRS)
        names = [self._name(i) for i in extract_list(self.unwrap("IdentsIsBinder", binder))]
        if not names:
            raise UnrepresentableTerm(self.name, decl)
        values = build_list(self.expr_sort, [])
        if opt.kind == JUST_LOCAL_VAR_INIT:
            values = self.unwrap("ExprsIsLocalVarInit", opt.children[0])
            if not extract_list(values):
                raise UnrepresentableTerm(self.name, decl)
        return self.node("Local", build_list(self.sort("Ident"), names), values)

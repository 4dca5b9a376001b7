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
from ...terms import ListOf, NodeKind, Term, build_list, extract_list
from ..base import LanguageDef, injection_kind
from .ops import MiniJSOps
from .syntax import parse_minijs, pretty_minijs

__all__ = ["MiniJS"]


class MiniJS(LanguageDef):
    """
    MiniJS keeps its directives out of the generic block: the language block is
    `DirectivesBlock(directives, Block)`, and generic blocks inject into it with an
    empty directive list.
    """

    name = "MiniJS"
    extension = ".mjs"
    removed = ("Ident", "Assign", "VarDecl", "VarDeclarator", "Block")

    @property
    def schema_path(self):
        return Path(__file__).parent / "minijs.schema"

    def parse(self, text):
        return parse_minijs(text)

    def pretty(self, ast):
        return pretty_minijs(ast)

    def make_ops(self):
        return MiniJSOps(self)

    def injection_kinds(self):
        s = self.sort
        return [
            injection_kind(self.name, "IdentIsIdent", IDENT_L, s("Ident")),
            injection_kind(self.name, "AssignIsExpr", ASSIGN_L, s("Expr")),
            injection_kind(self.name, "ExprIsLhs", s("Expr"), LHS_L),
            injection_kind(self.name, "ExprIsRhs", s("Expr"), RHS_L),
            injection_kind(self.name, "StmtIsBlockItem", s("Stmt"), BLOCK_ITEM_L),
            injection_kind(self.name, "MultiLocalVarDeclIsStmt", MULTI_LOCAL_VAR_DECL_L, s("Stmt")),
            injection_kind(self.name, "IdentIsBinder", IDENT_L, VAR_DECL_BINDER_L),
            injection_kind(self.name, "ExprIsLocalVarInit", s("Expr"), LOCAL_VAR_INIT_L),
            NodeKind(
                f"{self.name}.DirectivesBlock",
                (),
                (ListOf(s("Directive")), BLOCK_L),
                s("Block"),
            ),
        ]

    def no_directives(self) -> Term:
        return build_list(self.sort("Directive"), [])

    def declare_injections(self, table):
        s, k = self.sort, self.kind

        def edge(source, wrapper):
            return InjectionDecl.chain(source, [(k(wrapper), 0)])

        table = table.declare_all(
            [
                edge(IDENT_L, "IdentIsIdent"),
                edge(ASSIGN_L, "AssignIsExpr"),
                edge(s("Expr"), "ExprIsLhs"),
                edge(s("Expr"), "ExprIsRhs"),
                edge(s("Stmt"), "StmtIsBlockItem"),
                edge(MULTI_LOCAL_VAR_DECL_L, "MultiLocalVarDeclIsStmt"),
                edge(IDENT_L, "IdentIsBinder"),
                edge(s("Expr"), "ExprIsLocalVarInit"),
                edge(s("Ident"), "Var"),
                edge(s("Expr"), "ExprStmt"),
                edge(s("Block"), "BlockStmt"),
                InjectionDecl.chain(
                    BLOCK_L, [(k("DirectivesBlock"), 1)], [[self.no_directives()]]
                ),
            ]
        )
        return (
            table.compose_chain(IDENT_L, s("Ident"), s("Expr"), LHS_L)
            .compose(IDENT_L, s("Expr"), RHS_L)
            .compose(s("Expr"), s("Stmt"), BLOCK_ITEM_L)
            .compose_chain(ASSIGN_L, s("Expr"), s("Stmt"))
            .compose(ASSIGN_L, s("Expr"), BLOCK_ITEM_L)
            .compose_chain(BLOCK_L, s("Block"), s("Stmt"), BLOCK_ITEM_L)
            .compose(MULTI_LOCAL_VAR_DECL_L, s("Stmt"), BLOCK_ITEM_L)
        )

    def trans_rules(self):
        return {
            "MiniJS.Ident": self._trans_ident,
            "MiniJS.Assign": self._trans_assign,
            "MiniJS.Block": self._trans_block,
            "MiniJS.VarDecl": self._trans_var_decl,
        }

    def untrans_rules(self):
        return {
            "MiniJS.IdentIsIdent": self._untrans_ident,
            "MiniJS.AssignIsExpr": self._untrans_assign,
            "MiniJS.DirectivesBlock": self._untrans_block,
            "MiniJS.MultiLocalVarDeclIsStmt": self._untrans_var_decl,
        }

    def _trans_ident(self, node: Term) -> Term:
        return self.wrap("IdentIsIdent", ident(node.payloads[0]))

    def _trans_assign(self, node: Term) -> Term:
        lhs, rhs = node.children
        return self.wrap(
            "AssignIsExpr", assign(self.wrap("ExprIsLhs", lhs), self.wrap("ExprIsRhs", rhs))
        )

    def _trans_block(self, node: Term) -> Term:
        directives, stmts = node.children
        items = [self.wrap("StmtIsBlockItem", s) for s in extract_list(stmts)]
        return self.node("DirectivesBlock", directives, block(items))

    def _trans_var_decl(self, node: Term) -> Term:
        singles = []
        for declarator in extract_list(node.children[0]):
            name, opt = declarator.children
            init = None
            if opt.kind == self.kind("SomeExpr"):
                init = self.wrap("ExprIsLocalVarInit", opt.children[0])
            binder = self.wrap("IdentIsBinder", name.children[0])
            singles.append(single_local_var_decl(Term(EMPTY_DECL_ATTRS, (), ()), binder, init))
        decl = multi_local_var_decl(Term(EMPTY_COMMON_ATTRS, (), ()), singles)
        return self.wrap("MultiLocalVarDeclIsStmt", decl)

    def _name(self, term: Term) -> Term:
        self.expect(term, IDENT)
        return self.node("Ident", payloads=term.payloads)

    def _untrans_ident(self, node: Term) -> Term:
        return self._name(node.children[0])

    def _untrans_assign(self, node: Term) -> Term:
        lhs, op, rhs = self.expect(node.children[0], ASSIGN)
        self.expect(op, ASSIGN_OP_EQUALS)
        return self.node(
            "Assign", self.unwrap("ExprIsLhs", lhs), self.unwrap("ExprIsRhs", rhs)
        )

    def _untrans_block(self, node: Term) -> Term:
        directives, inner = node.children
        items, end = self.expect(inner, BLOCK)
        self.expect(end, EMPTY_BLOCK_END)
        stmts = [self.unwrap("StmtIsBlockItem", i) for i in extract_list(items)]
        return self.node("Block", directives, build_list(self.sort("Stmt"), stmts))

    def _untrans_var_decl(self, node: Term) -> Term:
        decl = node.children[0]
        attrs, singles = self.expect(decl, MULTI_LOCAL_VAR_DECL)
        self.expect(attrs, EMPTY_COMMON_ATTRS)
        declarators = []
        for single in extract_list(singles):
            decl_attrs, binder, opt = self.expect(single, SINGLE_LOCAL_VAR_DECL)
            self.expect(decl_attrs, EMPTY_DECL_ATTRS)
            name = self._name(self.unwrap("IdentIsBinder", binder))
            if opt.kind == JUST_LOCAL_VAR_INIT:
                value = self.unwrap("ExprIsLocalVarInit", opt.children[0])
                opt = self.node("SomeExpr", value)
            else:
                opt = self.node("NoExpr")
            declarators.append(self.node("VarDeclarator", name, opt))
        if not declarators:
            raise UnrepresentableTerm(self.name, decl)
        return self.node("VarDecl", build_list(self.sort("VarDeclarator"), declarators))

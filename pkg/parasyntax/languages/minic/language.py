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
    EMPTY_DECL_ATTRS,
    IDENT,
    IDENT_L,
    JUST_LOCAL_VAR_INIT,
    LHS_L,
    LOCAL_VAR_INIT_L,
    MULTI_COMMON_ATTRS_L,
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
from ...terms import Term, build_list, extract_list
from ..base import LanguageDef, injection_kind
from .ops import MiniCOps
from .syntax import parse_minic, pretty_minic

__all__ = ["MiniC"]


class MiniC(LanguageDef):
    name = "MiniC"
    extension = ".mc"
    removed = ("Ident", "Assign", "Decl", "Declarator", "NoInit", "HasInit", "Block")

    @property
    def schema_path(self):
        return Path(__file__).parent / "minic.schema"

    def parse(self, text):
        return parse_minic(text)

    def pretty(self, ast):
        return pretty_minic(ast)

    def make_ops(self):
        return MiniCOps(self)

    def injection_kinds(self):
        s = self.sort
        return [
            injection_kind(self.name, "IdentIsIdent", IDENT_L, s("Ident")),
            injection_kind(self.name, "AssignIsExpr", ASSIGN_L, s("Expr")),
            injection_kind(self.name, "ExprIsLhs", s("Expr"), LHS_L),
            injection_kind(self.name, "ExprIsRhs", s("Expr"), RHS_L),
            injection_kind(self.name, "BlockIsBlock", BLOCK_L, s("Block")),
            injection_kind(self.name, "BlockItemIsBlockItem", s("BlockItem"), BLOCK_ITEM_L),
            injection_kind(self.name, "MultiLocalVarDeclIsDecl", MULTI_LOCAL_VAR_DECL_L, s("Decl")),
            injection_kind(self.name, "TypeIsCommonAttrs", s("Type"), MULTI_COMMON_ATTRS_L),
            injection_kind(self.name, "IdentIsBinder", IDENT_L, VAR_DECL_BINDER_L),
            injection_kind(self.name, "InitIsLocalVarInit", s("Init"), LOCAL_VAR_INIT_L),
        ]

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
                edge(BLOCK_L, "BlockIsBlock"),
                edge(s("BlockItem"), "BlockItemIsBlockItem"),
                edge(MULTI_LOCAL_VAR_DECL_L, "MultiLocalVarDeclIsDecl"),
                edge(s("Type"), "TypeIsCommonAttrs"),
                edge(IDENT_L, "IdentIsBinder"),
                edge(s("Init"), "InitIsLocalVarInit"),
                edge(s("Ident"), "Var"),
                edge(s("Stmt"), "StmtItem"),
                edge(s("Decl"), "DeclItem"),
                edge(s("Expr"), "ExprStmt"),
                edge(s("Block"), "BlockStmt"),
                edge(s("Expr"), "ExprInit"),
            ]
        )
        return (
            table.compose_chain(IDENT_L, s("Ident"), s("Expr"), LHS_L)
            .compose(IDENT_L, s("Expr"), RHS_L)
            .compose(s("Stmt"), s("BlockItem"), BLOCK_ITEM_L)
            .compose_chain(s("Expr"), s("Stmt"), BLOCK_ITEM_L)
            .compose_chain(ASSIGN_L, s("Expr"), s("Stmt"))
            .compose(ASSIGN_L, s("Expr"), BLOCK_ITEM_L)
            .compose_chain(BLOCK_L, s("Block"), s("Stmt"), BLOCK_ITEM_L)
            .compose_chain(MULTI_LOCAL_VAR_DECL_L, s("Decl"), s("BlockItem"), BLOCK_ITEM_L)
            .compose(s("Expr"), s("Init"), LOCAL_VAR_INIT_L)
        )

    def trans_rules(self):
        return {
            "MiniC.Ident": self._trans_ident,
            "MiniC.Assign": self._trans_assign,
            "MiniC.Block": self._trans_block,
            "MiniC.Decl": self._trans_decl,
        }

    def untrans_rules(self):
        return {
            "MiniC.IdentIsIdent": self._untrans_ident,
            "MiniC.AssignIsExpr": self._untrans_assign,
            "MiniC.BlockIsBlock": self._untrans_block,
            "MiniC.MultiLocalVarDeclIsDecl": self._untrans_decl,
        }

    def _trans_ident(self, node: Term) -> Term:
        return self.wrap("IdentIsIdent", ident(node.payloads[0]))

    def _trans_assign(self, node: Term) -> Term:
        lhs, rhs = node.children
        return self.wrap(
            "AssignIsExpr", assign(self.wrap("ExprIsLhs", lhs), self.wrap("ExprIsRhs", rhs))
        )

    def _trans_block(self, node: Term) -> Term:
        items = extract_list(node.children[0])
        return self.wrap(
            "BlockIsBlock", block([self.wrap("BlockItemIsBlockItem", i) for i in items])
        )

    def _trans_decl(self, node: Term) -> Term:
        ty, declarators = node.children
        singles = []
        for declarator in extract_list(declarators):
            name, opt = declarator.children
            init = None
            if opt.kind == self.kind("HasInit"):
                init = self.wrap("InitIsLocalVarInit", opt.children[0])
            binder = self.wrap("IdentIsBinder", name.children[0])
            singles.append(single_local_var_decl(Term(EMPTY_DECL_ATTRS, (), ()), binder, init))
        return self.wrap(
            "MultiLocalVarDeclIsDecl",
            multi_local_var_decl(self.wrap("TypeIsCommonAttrs", ty), singles),
        )

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
        items, end = self.expect(node.children[0], BLOCK)
        self.expect(end, EMPTY_BLOCK_END)
        items = [self.unwrap("BlockItemIsBlockItem", i) for i in extract_list(items)]
        return self.node("Block", build_list(self.sort("BlockItem"), items))

    def _untrans_decl(self, node: Term) -> Term:
        decl = node.children[0]
        attrs, singles = self.expect(decl, MULTI_LOCAL_VAR_DECL)
        declarators = []
        for single in extract_list(singles):
            decl_attrs, binder, opt = self.expect(single, SINGLE_LOCAL_VAR_DECL)
            self.expect(decl_attrs, EMPTY_DECL_ATTRS)
            name = self._name(self.unwrap("IdentIsBinder", binder))
            if opt.kind == JUST_LOCAL_VAR_INIT:
                init = self.unwrap("InitIsLocalVarInit", opt.children[0])
                opt = self.node("HasInit", init)
            else:
                opt = self.node("NoInit")
            declarators.append(self.node("Declarator", name, opt))
        if not declarators:
            raise UnrepresentableTerm(self.name, decl)
        return self.node(
            "Decl",
            self.unwrap("TypeIsCommonAttrs", attrs),
            build_list(self.sort("Declarator"), declarators),
        )

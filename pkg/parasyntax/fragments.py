"""
Generic fragments shared by every language, and the per-language operations the
passes are written against.

The generic sorts below are reserved: the modularizer never generates them, since
generated sorts are always namespaced (`MiniC.ExprL`).
"""
from abc import ABC
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .terms import (
    Atomic,
    ListOf,
    NodeKind,
    Path,
    Prim,
    Signature,
    Term,
    build_list,
    extract_list,
    walk,
)

__all__ = [
    "ASSIGN",
    "ASSIGN_OP_EQUALS",
    "ASSIGN_OP_L",
    "ASSIGN_L",
    "BLOCK",
    "BLOCK_END_L",
    "BLOCK_ITEM_L",
    "BLOCK_L",
    "EMPTY_BLOCK_END",
    "EMPTY_COMMON_ATTRS",
    "EMPTY_DECL_ATTRS",
    "GENERIC_SIGNATURE",
    "IDENT",
    "IDENT_L",
    "JUST_LOCAL_VAR_INIT",
    "LHS_L",
    "LOCAL_VAR_DECL_ATTRS_L",
    "LOCAL_VAR_INIT_L",
    "LanguageOps",
    "MULTI_COMMON_ATTRS_L",
    "MULTI_LOCAL_VAR_DECL",
    "MULTI_LOCAL_VAR_DECL_L",
    "NO_LOCAL_VAR_INIT",
    "OPT_LOCAL_VAR_INIT_L",
    "RESERVED_SORTS",
    "RHS_L",
    "SINGLE_LOCAL_VAR_DECL",
    "SINGLE_LOCAL_VAR_DECL_L",
    "VAR_DECL_BINDER_L",
    "ExprRole",
    "ExprShape",
    "StmtRole",
    "StmtShape",
    "assign",
    "block",
    "block_items",
    "ident",
    "ident_name",
    "ident_names",
    "multi_local_var_decl",
    "single_local_var_decl",
    "var_decl_binder_to_lhs",
    "var_init_to_rhs",
]

LHS_L = Atomic("LhsL")
RHS_L = Atomic("RhsL")
ASSIGN_OP_L = Atomic("AssignOpL")
ASSIGN_L = Atomic("AssignL")
IDENT_L = Atomic("IdentL")
BLOCK_L = Atomic("BlockL")
BLOCK_ITEM_L = Atomic("BlockItemL")
BLOCK_END_L = Atomic("BlockEndL")
MULTI_LOCAL_VAR_DECL_L = Atomic("MultiLocalVarDeclL")
SINGLE_LOCAL_VAR_DECL_L = Atomic("SingleLocalVarDeclL")
LOCAL_VAR_INIT_L = Atomic("LocalVarInitL")
OPT_LOCAL_VAR_INIT_L = Atomic("OptLocalVarInitL")
MULTI_COMMON_ATTRS_L = Atomic("MultiLocalVarDeclCommonAttrsL")
LOCAL_VAR_DECL_ATTRS_L = Atomic("LocalVarDeclAttrsL")
VAR_DECL_BINDER_L = Atomic("VarDeclBinderL")

RESERVED_SORTS = frozenset(
    [
        LHS_L,
        RHS_L,
        ASSIGN_OP_L,
        ASSIGN_L,
        IDENT_L,
        BLOCK_L,
        BLOCK_ITEM_L,
        BLOCK_END_L,
        MULTI_LOCAL_VAR_DECL_L,
        SINGLE_LOCAL_VAR_DECL_L,
        LOCAL_VAR_INIT_L,
        OPT_LOCAL_VAR_INIT_L,
        MULTI_COMMON_ATTRS_L,
        LOCAL_VAR_DECL_ATTRS_L,
        VAR_DECL_BINDER_L,
    ]
)

IDENT = NodeKind("Ident", (Prim.String,), (), IDENT_L)
ASSIGN = NodeKind("Assign", (), (LHS_L, ASSIGN_OP_L, RHS_L), ASSIGN_L)
ASSIGN_OP_EQUALS = NodeKind("AssignOpEquals", (), (), ASSIGN_OP_L)
BLOCK = NodeKind("Block", (), (ListOf(BLOCK_ITEM_L), BLOCK_END_L), BLOCK_L)
EMPTY_BLOCK_END = NodeKind("EmptyBlockEnd", (), (), BLOCK_END_L)
MULTI_LOCAL_VAR_DECL = NodeKind(
    "MultiLocalVarDecl",
    (),
    (MULTI_COMMON_ATTRS_L, ListOf(SINGLE_LOCAL_VAR_DECL_L)),
    MULTI_LOCAL_VAR_DECL_L,
)
SINGLE_LOCAL_VAR_DECL = NodeKind(
    "SingleLocalVarDecl",
    (),
    (LOCAL_VAR_DECL_ATTRS_L, VAR_DECL_BINDER_L, OPT_LOCAL_VAR_INIT_L),
    SINGLE_LOCAL_VAR_DECL_L,
)
JUST_LOCAL_VAR_INIT = NodeKind(
    "JustLocalVarInit", (), (LOCAL_VAR_INIT_L,), OPT_LOCAL_VAR_INIT_L
)
NO_LOCAL_VAR_INIT = NodeKind("NoLocalVarInit", (), (), OPT_LOCAL_VAR_INIT_L)
EMPTY_COMMON_ATTRS = NodeKind(
    "EmptyMultiLocalVarDeclCommonAttrs", (), (), MULTI_COMMON_ATTRS_L
)
EMPTY_DECL_ATTRS = NodeKind("EmptyLocalVarDeclAttrs", (), (), LOCAL_VAR_DECL_ATTRS_L)

GENERIC_SIGNATURE = Signature.of(
    "Generic",
    [
        IDENT,
        ASSIGN,
        ASSIGN_OP_EQUALS,
        BLOCK,
        EMPTY_BLOCK_END,
        MULTI_LOCAL_VAR_DECL,
        SINGLE_LOCAL_VAR_DECL,
        JUST_LOCAL_VAR_INIT,
        NO_LOCAL_VAR_INIT,
        EMPTY_COMMON_ATTRS,
        EMPTY_DECL_ATTRS,
    ],
)


def ident(name: str) -> Term:
    return Term(IDENT, (name,), ())


def ident_name(term: Term) -> Optional[str]:
    return term.payloads[0] if term.kind == IDENT else None


def ident_names(term: Term) -> List[str]:
    """Every identifier occurrence under `term`, in pre-order."""
    return [node.payloads[0] for _, node in walk(term) if node.kind == IDENT]


def assign(lhs: Term, rhs: Term) -> Term:
    return Term(ASSIGN, (), (lhs, Term(ASSIGN_OP_EQUALS, (), ()), rhs))


def block(items: Sequence[Term]) -> Term:
    return Term(
        BLOCK, (), (build_list(BLOCK_ITEM_L, items), Term(EMPTY_BLOCK_END, (), ()))
    )


def block_items(term: Term) -> Optional[List[Term]]:
    if term.kind != BLOCK:
        return None
    return extract_list(term.children[0])


def single_local_var_decl(attrs: Term, binder: Term, init: Optional[Term]) -> Term:
    opt = (
        Term(NO_LOCAL_VAR_INIT, (), ())
        if init is None
        else Term(JUST_LOCAL_VAR_INIT, (), (init,))
    )
    return Term(SINGLE_LOCAL_VAR_DECL, (), (attrs, binder, opt))


def multi_local_var_decl(attrs: Term, singles: Sequence[Term]) -> Term:
    return Term(
        MULTI_LOCAL_VAR_DECL, (), (attrs, build_list(SINGLE_LOCAL_VAR_DECL_L, singles))
    )


class StmtRole(Enum):
    IF = "if"
    WHILE = "while"
    FOR = "for"
    NUMERIC_FOR = "numeric-for"
    RETURN = "return"
    BREAK = "break"
    CONTINUE = "continue"
    BLOCK = "block"
    SIMPLE = "simple"


@dataclass(frozen=True)
class StmtShape:
    """
    The control structure of a language statement, as paths relative to it.

    For `IF`, `conds[i]` guards `arms[i]` and `orelse` runs when none holds. Loops
    have one arm, the body. A `BLOCK` statement has one arm, the path of its
    generic block. `exprs` are evaluated once when the statement starts
    (numeric-for bounds, returned value, expression statements).
    """

    role: StmtRole
    exprs: Tuple[Path, ...] = ()
    conds: Tuple[Path, ...] = ()
    arms: Tuple[Path, ...] = ()
    orelse: Optional[Path] = None
    init: Optional[Path] = None
    step: Optional[Path] = None

    @property
    def is_loop(self) -> bool:
        return self.role in (StmtRole.WHILE, StmtRole.FOR, StmtRole.NUMERIC_FOR)


class ExprRole(Enum):
    ATOM = "atom"
    OPERATOR = "operator"
    SHORT_CIRCUIT = "short-circuit"


@dataclass(frozen=True)
class ExprShape:
    role: ExprRole
    operands: Tuple[Path, ...] = ()
    """Operand paths in evaluation order."""
    conjunction: bool = True
    """For short-circuit operators: `and` (True) or `or` (False)."""
    variable: Optional[str] = None
    """For atoms that read a variable, its name."""


class LanguageOps(ABC):
    """
    Syntactic operations a language provides to the generic passes.

    Only `var_init_to_rhs` and `var_decl_binder_to_lhs` are required of every
    language; the other operations are optional and a pass lists the ones it needs
    in its requirements.
    """

    name = "language"

    def var_init_to_rhs(self, common_attrs: Term, decl_attrs: Term, init: Term) -> Term:
        raise NotImplementedError

    def var_decl_binder_to_lhs(self, binder: Term) -> Term:
        raise NotImplementedError

    def bound_names(self, binder: Term) -> List[str]:
        return ident_names(binder)

    def stmt_shape(self, stmt: Term) -> Optional[StmtShape]:
        raise NotImplementedError

    def expr_shape(self, expr: Term) -> ExprShape:
        raise NotImplementedError

    def block_body(self, term: Term) -> Path:
        """Path from a term of the language's block sort to its generic block."""
        raise NotImplementedError

    def strip_for(self, stmt: Term) -> Term:
        """The C-style for loop `stmt` with its initializer and step removed."""
        raise NotImplementedError

    def coverage_marker(self, index: int) -> Term:
        raise NotImplementedError

    def make_if(
        self, arms: Sequence[Tuple[Term, Sequence[Term]]], orelse: Optional[Sequence[Term]]
    ) -> Term:
        raise NotImplementedError

    def make_not(self, expr: Term) -> Term:
        raise NotImplementedError

    def declare_locals(self, names: Sequence[str]) -> Term:
        raise NotImplementedError

    @classmethod
    def provides(cls, operation: str) -> bool:
        method = getattr(cls, operation, None)
        return method is not None and method is not getattr(LanguageOps, operation, None)


def var_init_to_rhs(ops: LanguageOps, common_attrs: Term, decl_attrs: Term, init: Term) -> Term:
    return ops.var_init_to_rhs(common_attrs, decl_attrs, init)


def var_decl_binder_to_lhs(ops: LanguageOps, binder: Term) -> Term:
    return ops.var_decl_binder_to_lhs(binder)

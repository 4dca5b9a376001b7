"""
Three-address code.

Every statement is rewritten so that its expressions apply one operator to
atomic operands (literals and variables). Nested operations are computed into
fresh temporaries beforehand, in evaluation order:

.. code-block:: text

    x = 1 + 1 + 1;          __t0 = 1 + 1;
                            x = __t0 + 1;

Short-circuit operators become conditionals so that the right operand runs only
when it did before, and loop conditions are recomputed wherever control reaches
the test. Temporaries are declared once at the top of their function, which
needs untyped declarations.
"""
import logging
from contextlib import contextmanager
from typing import List, Optional, Sequence, Set, Tuple

from ..flow import BeforeLoopCondition, element_paths, expr_roots, insert_at
from ..fragments import (
    ASSIGN,
    ASSIGN_L,
    BLOCK,
    BLOCK_ITEM_L,
    BLOCK_L,
    IDENT,
    IDENT_L,
    JUST_LOCAL_VAR_INIT,
    LHS_L,
    MULTI_LOCAL_VAR_DECL,
    MULTI_LOCAL_VAR_DECL_L,
    RHS_L,
    SINGLE_LOCAL_VAR_DECL,
    ExprRole,
    StmtRole,
    StmtShape,
    assign,
    block,
    ident,
    ident_names,
    multi_local_var_decl,
)
from ..terms import Path, Term, extract_list, replace_subterm, subterm, walk
from .requirements import PassRequirements

__all__ = ["TAC_REQUIREMENTS", "TEMP_PREFIX", "is_three_address", "tac"]

logger = logging.getLogger(__name__)

TEMP_PREFIX = "__t"

TAC_REQUIREMENTS = PassRequirements(
    kinds=frozenset(
        [IDENT, ASSIGN, BLOCK, MULTI_LOCAL_VAR_DECL, SINGLE_LOCAL_VAR_DECL, JUST_LOCAL_VAR_INIT]
    ),
    injections=(
        (IDENT_L, "Expr"),
        (IDENT_L, LHS_L),
        ("Expr", RHS_L),
        ("Stmt", BLOCK_ITEM_L),
        (ASSIGN_L, BLOCK_ITEM_L),
        (BLOCK_L, "Stmt"),
        (MULTI_LOCAL_VAR_DECL_L, BLOCK_ITEM_L),
    ),
    operations=("stmt_shape", "expr_shape", "block_body", "make_if", "make_not", "declare_locals"),
)

Items = List[Term]
Slot = Tuple[Path, bool]
"""A position to lower, and whether it must end up atomic (else one operator deep)."""


def _assigns(items: Sequence[Term], name: str) -> bool:
    for item in items:
        for _, node in walk(item):
            if node.kind == ASSIGN and name in ident_names(node.children[0]):
                return True
    return False


class _Lowering:
    """Lowers the statements of one function, which share a pool of temporaries."""

    def __init__(self, lang, used: Set[str]):
        self.lang = lang
        self.ops = lang.ops
        self.inj = lang.injections
        self.used = set(used)
        self.temps: List[str] = []
        self.counter = 0

    def fresh(self) -> str:
        while f"{TEMP_PREFIX}{self.counter}" in self.used:
            self.counter += 1
        name = f"{TEMP_PREFIX}{self.counter}"
        self.counter += 1
        self.used.add(name)
        self.temps.append(name)
        return name

    @contextmanager
    def trial(self):
        """Temporaries allocated inside are given back on exit."""
        saved = self.counter, set(self.used), list(self.temps)
        try:
            yield
        finally:
            self.counter, self.used, self.temps = saved

    # Builders

    def var(self, name: str) -> Term:
        return self.inj.inj(ident(name), self.lang.expr_sort)

    def store(self, name: str, value: Term) -> Term:
        target = self.inj.inj(ident(name), LHS_L)
        return self.inj.inj(assign(target, self.inj.inj(value, RHS_L)), BLOCK_ITEM_L)

    def as_item(self, stmt: Term) -> Term:
        return self.inj.inj(stmt, BLOCK_ITEM_L)

    def variable(self, expr: Term) -> Optional[str]:
        if expr.sort != self.lang.expr_sort:
            return None
        return self.ops.expr_shape(expr).variable

    # Expressions

    def flatten(self, expr: Term) -> Tuple[Items, Term]:
        """Lower `expr` to at most one operator over atoms."""
        if self.inj.try_proj(expr, ASSIGN_L) is not None:
            return self.atomize(expr)
        shape = self.ops.expr_shape(expr)
        if shape.role is ExprRole.ATOM:
            return [], expr
        if shape.role is ExprRole.SHORT_CIRCUIT:
            return self.short_circuit(expr, shape)
        return self.slots(expr, [(path, True) for path in shape.operands])

    def atomize(self, expr: Term) -> Tuple[Items, Term]:
        node = self.inj.try_proj(expr, ASSIGN_L)
        if node is not None:
            prelude, node = self.assignment(node, atomic_rhs=True)
            value = self.inj.proj(node.children[2], self.lang.expr_sort)
            return prelude + [self.inj.inj(node, BLOCK_ITEM_L)], value
        shape = self.ops.expr_shape(expr)
        if shape.role is ExprRole.ATOM:
            return [], expr
        if shape.role is ExprRole.SHORT_CIRCUIT:
            return self.short_circuit(expr, shape)
        prelude, flat = self.flatten(expr)
        temp = self.fresh()
        return prelude + [self.store(temp, flat)], self.var(temp)

    def short_circuit(self, expr: Term, shape) -> Tuple[Items, Term]:
        left, right = (subterm(expr, path) for path in shape.operands)
        prelude, value = self.atomize(left)
        temp = self.fresh()
        prelude.append(self.store(temp, value))
        body, value = self.atomize(right)
        body.append(self.store(temp, value))
        test = self.var(temp)
        if not shape.conjunction:
            test = self.ops.make_not(test)
        prelude.append(self.as_item(self.ops.make_if([(test, body)], None)))
        return prelude, self.var(temp)

    def lower(self, expr: Term, atomic: bool) -> Tuple[Items, Term]:
        return self.atomize(expr) if atomic else self.flatten(expr)

    def has_prelude(self, term: Term, slots: Sequence[Slot]) -> bool:
        with self.trial():
            return any(self.lower(subterm(term, path), atomic)[0] for path, atomic in slots)

    def slots(self, term: Term, slots: Sequence[Slot]) -> Tuple[Items, Term]:
        """
        Lower the subterms at `slots`, in order. A slot keeps its operator only
        when no later slot needs a prelude, otherwise the operator would run after
        that prelude. An identifier operand is copied first when a later operand's
        prelude assigns it.
        """
        parts = []
        for i, (path, atomic) in enumerate(slots):
            atomic = atomic or self.has_prelude(term, slots[i + 1 :])
            parts.append(self.lower(subterm(term, path), atomic))
        prelude: Items = []
        for i, ((path, _), (pre, value)) in enumerate(zip(slots, parts)):
            name = self.variable(value)
            if name is not None and any(_assigns(later, name) for later, _ in parts[i + 1 :]):
                temp = self.fresh()
                pre = pre + [self.store(temp, value)]
                value = self.var(temp)
            prelude.extend(pre)
            term = replace_subterm(term, path, value)
        return prelude, term

    def assignment(self, node: Term, atomic_rhs: bool) -> Tuple[Items, Term]:
        """Lower a generic assignment: target operands to atoms, then the value."""
        lhs, _, rhs = node.children
        target = self.inj.proj_with_path(lhs, self.lang.expr_sort)
        if target is not None:
            expr, inner = target
            shape = self.ops.expr_shape(expr)
            operands = shape.operands if shape.role is ExprRole.OPERATOR else ()
            slots = [((0,) + inner + path, True) for path in operands]
        else:
            slots = [(path, True) for path in expr_roots(self.lang, node, (0,))]
        value = self.inj.proj_with_path(rhs, self.lang.expr_sort)
        if value is not None:
            slots.append(((2,) + value[1], atomic_rhs))
        else:
            slots.extend((path, atomic_rhs) for path in expr_roots(self.lang, node, (2,)))
        return self.slots(node, slots)

    # Statements

    def block(self, term: Term) -> Term:
        items, end = term.children
        lowered = [out for item in extract_list(items) for out in self.item(item)]
        return block(lowered).with_child(1, end)

    def item(self, item: Term) -> Items:
        node = self.inj.try_proj(item, ASSIGN_L)
        if node is not None:
            prelude, node = self.assignment(node, atomic_rhs=False)
            return prelude + [self.inj.inj(node, BLOCK_ITEM_L)]
        if self.inj.try_proj(item, MULTI_LOCAL_VAR_DECL_L) is not None:
            return self.declaration(item)
        stmt = self.inj.try_proj(item, self.lang.stmt_sort)
        if stmt is None:
            return [item]
        return self.stmt(stmt)

    def is_flat(self, expr: Term) -> bool:
        item = self.inj.inj(expr, BLOCK_ITEM_L)
        with self.trial():
            return self.item(item) == [item]

    def declaration(self, item: Term) -> Items:
        attrs, singles = self.inj.proj(item, MULTI_LOCAL_VAR_DECL_L).children
        parts = []
        for single in extract_list(singles):
            prelude: Items = []
            if single.children[2].kind == JUST_LOCAL_VAR_INIT:
                roots = expr_roots(self.lang, single, (2, 0))
                prelude, single = self.slots(single, [(path, False) for path in roots])
            parts.append((prelude, single))
        if not any(prelude for prelude, _ in parts):
            return [item]
        # Declarators bind in order, so each one's prelude goes right before it.
        lowered = []
        for prelude, single in parts:
            lowered.extend(prelude)
            lowered.append(self.inj.inj(multi_local_var_decl(attrs, [single]), BLOCK_ITEM_L))
        return lowered

    def arm(self, stmt: Term, path: Path) -> Term:
        """Lower the block or statement at `path` in `stmt`."""
        sub = subterm(stmt, path)
        if sub.sort == BLOCK_L:
            return replace_subterm(stmt, path, self.block(sub))
        if sub.sort == self.lang.block_sort:
            inner = path + self.ops.block_body(sub)
            return replace_subterm(stmt, inner, self.block(subterm(stmt, inner)))
        items = self.item(self.as_item(sub))
        if len(items) == 1:
            single = self.inj.try_proj(items[0], self.lang.stmt_sort)
            if single is not None:
                return replace_subterm(stmt, path, single)
        return replace_subterm(stmt, path, self.inj.inj(block(items), self.lang.stmt_sort))

    def arm_items(self, sub: Term) -> Items:
        if sub.sort == BLOCK_L:
            return extract_list(sub.children[0])
        if sub.sort == self.lang.block_sort:
            return extract_list(subterm(sub, self.ops.block_body(sub)).children[0])
        return [self.as_item(sub)]

    def stmt(self, stmt: Term) -> Items:
        shape = self.ops.stmt_shape(stmt) or StmtShape(StmtRole.SIMPLE)
        role = shape.role

        if role in (StmtRole.SIMPLE, StmtRole.RETURN):
            prelude, lowered = self.slots(stmt, [(path, False) for path in shape.exprs])
            # An expression statement whose effects all moved into the prelude.
            if role is StmtRole.SIMPLE and prelude and len(shape.exprs) == 1:
                rest = self.ops.expr_shape(subterm(lowered, shape.exprs[0]))
                if rest.role is ExprRole.ATOM:
                    return prelude
            return prelude + [self.as_item(lowered)]

        if role is StmtRole.BLOCK:
            return [self.as_item(self.arm(stmt, shape.arms[0]))]

        if role is StmtRole.IF:
            return self.conditional(stmt, shape)

        if role is StmtRole.WHILE:
            prelude, test = self.flatten(subterm(stmt, shape.conds[0]))
            if not prelude:
                return [self.as_item(self.arm(stmt, shape.arms[0]))]
            return self.recompute(replace_subterm(stmt, shape.conds[0], test), prelude)

        if role is StmtRole.FOR:
            prelude: Items = []
            if shape.conds:
                prelude, test = self.flatten(subterm(stmt, shape.conds[0]))
                stmt = replace_subterm(stmt, shape.conds[0], test)
            header = [subterm(stmt, p) for p in (shape.init, shape.step) if p is not None]
            if not prelude and all(self.is_flat(e) for e in header):
                return [self.as_item(self.arm(stmt, shape.arms[0]))]
            return self.recompute(stmt, prelude)

        if role is StmtRole.NUMERIC_FOR:
            prelude, stmt = self.slots(stmt, [(path, False) for path in shape.exprs])
            return prelude + [self.as_item(self.arm(stmt, shape.arms[0]))]

        return [self.as_item(stmt)]

    def conditional(self, stmt: Term, shape: StmtShape) -> Items:
        prelude, stmt = self.slots(stmt, [(shape.conds[0], False)])
        for k in range(1, len(shape.conds)):
            pre, test = self.flatten(subterm(stmt, shape.conds[k]))
            if pre:
                return prelude + self.split_else_if(stmt, shape, k, pre, test)
        for path in shape.arms:
            stmt = self.arm(stmt, path)
        if shape.orelse is not None:
            stmt = self.arm(stmt, shape.orelse)
        return prelude + [self.as_item(stmt)]

    def split_else_if(
        self, stmt: Term, shape: StmtShape, k: int, prelude: Items, test: Term
    ) -> Items:
        """
        Nest the arms from `k` on into the else branch of the first `k`, so that
        the prelude of test `k` runs only once the earlier tests failed.
        """
        arms = [
            (subterm(stmt, cond), self.arm_items(subterm(stmt, arm)))
            for cond, arm in zip(shape.conds, shape.arms)
        ]
        arms[k] = (test, arms[k][1])
        orelse = None
        if shape.orelse is not None:
            orelse = self.arm_items(subterm(stmt, shape.orelse))
        tail = self.ops.make_if(arms[k:], orelse)
        head = self.ops.make_if(arms[:k], prelude + [self.as_item(tail)])
        return self.stmt(head)

    def recompute(self, loop: Term, prelude: Items) -> Items:
        """Put the test's prelude wherever control reaches the loop test."""
        root = block([self.as_item(loop)])
        root = insert_at(root, BeforeLoopCondition((0, 0)), prelude, self.lang)
        *before, item = extract_list(root.children[0])
        lowered = [out for it in before for out in self.item(it)]
        loop = self.inj.proj(item, self.lang.stmt_sort)
        body = self.ops.stmt_shape(loop).arms[0]
        return lowered + [self.as_item(self.arm(loop, body))]


def tac(term: Term, lang) -> Term:
    """Lower every function of the program `term` to three-address code."""
    TAC_REQUIREMENTS.check("tac", lang)
    for index, path in enumerate(element_paths((0,), term.children[0])):
        fundef = subterm(term, path)
        body = (len(fundef.children) - 1,)
        body += lang.ops.block_body(subterm(fundef, body))
        lowering = _Lowering(lang, set(ident_names(fundef)))
        lowered = lowering.block(subterm(fundef, body))
        if lowering.temps:
            items = [lang.ops.declare_locals(lowering.temps)] + extract_list(lowered.children[0])
            lowered = block(items)
        logger.debug("%s: function %d uses %d temporaries", lang.name, index, len(lowering.temps))
        term = replace_subterm(term, path + body, lowered)
    return term


def is_three_address(term: Term, lang) -> bool:
    """
    Whether every operator in `term` applies to atomic operands and no
    short-circuit operator is left.
    """
    inj = lang.injections
    for _, node in walk(term):
        if node.sort != lang.expr_sort:
            continue
        assignment = inj.try_proj(node, ASSIGN_L)
        if assignment is not None:
            # Only statement-level assignments survive, their parts are checked on their own.
            continue
        shape = lang.ops.expr_shape(node)
        if shape.role is ExprRole.SHORT_CIRCUIT:
            return False
        for path in shape.operands:
            if lang.ops.expr_shape(subterm(node, path)).role is not ExprRole.ATOM:
                return False
    return True

"""
Insertion of statements at logical control-flow points.

.. code-block:: python

    term = insert_at(term, BeforeLoopCondition(loop_path), [prelude], lang)

`BeforeLoopCondition` expands to every site from which control reaches the loop
test: before the loop, at the end of its body, and before each `continue` that
targets it. C-style for loops are first lowered so that the initializer runs
before the loop and the step runs before every re-test.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from ..errors import InvalidPath
from ..fragments import BLOCK_ITEM_L, StmtRole, block
from ..terms import ListOf, Path, Term, cons_kind, extract_list, replace_subterm, subterm
from .structure import items_path, iter_statements, statement_at

__all__ = [
    "BeforeLoopCondition",
    "BeforeStmt",
    "BlockEntry",
    "InsertionPoint",
    "insert_at",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BeforeStmt:
    path: Path


@dataclass(frozen=True)
class BeforeLoopCondition:
    path: Path


@dataclass(frozen=True)
class BlockEntry:
    path: Path


InsertionPoint = Union[BeforeStmt, BeforeLoopCondition, BlockEntry]

Site = Tuple[Path, List[Term]]


def _site(root: Term, path: Path) -> Path:
    """The list spine position of a block item, or the bare statement slot itself."""
    if path and path[-1] == 0 and subterm(root, path).sort == BLOCK_ITEM_L:
        return path[:-1]
    return path


def _apply(root: Term, path: Path, items: Sequence[Term], lang) -> Term:
    target = subterm(root, path)
    if target.sort == ListOf(BLOCK_ITEM_L):
        for item in reversed(items):
            target = Term(cons_kind(BLOCK_ITEM_L), (), (item, target))
    elif target.sort == lang.stmt_sort:
        inj = lang.injections.inj
        wrapped = block([*items, inj(target, BLOCK_ITEM_L)])
        target = inj(wrapped, lang.stmt_sort)
    else:
        raise InvalidPath(path, f"{target.sort} is not a statement position")
    return replace_subterm(root, path, target)


def _insert(root: Term, sites: Sequence[Site], lang) -> Term:
    merged: Dict[Path, List[Term]] = {}
    for path, items in sites:
        merged.setdefault(path, []).extend(items)
    # Later paths first: earlier sites keep their paths.
    for path in sorted(merged, reverse=True):
        if merged[path]:
            root = _apply(root, path, merged[path], lang)
    return root


def _block_body(root: Term, body: Path, lang) -> Term:
    if items_path(lang, root, body) is not None:
        return root
    inj = lang.injections.inj
    stmt = subterm(root, body)
    wrapped = inj(block([inj(stmt, BLOCK_ITEM_L)]), lang.stmt_sort)
    return replace_subterm(root, body, wrapped)


def _before_loop_condition(root: Term, path: Path, items: List[Term], lang) -> Term:
    found = statement_at(lang, root, path)
    if found is None or not found[2].is_loop:
        raise InvalidPath(path, "not a loop")
    stmt, stmt_path, shape = found
    inj = lang.injections.inj
    before, after = list(items), list(items)
    if shape.role is StmtRole.FOR and (shape.init or shape.step):
        if shape.init:
            before.insert(0, inj(subterm(stmt, shape.init), BLOCK_ITEM_L))
        if shape.step:
            after.insert(0, inj(subterm(stmt, shape.step), BLOCK_ITEM_L))
        root = replace_subterm(root, stmt_path, lang.ops.strip_for(stmt))
        shape = lang.ops.stmt_shape(subterm(root, stmt_path))
    body = stmt_path + shape.arms[0]
    root = _block_body(root, body, lang)
    list_path = items_path(lang, root, body)
    end = list_path + (1,) * len(extract_list(subterm(root, list_path)))
    sites = [(_site(root, path), before), (end, after)]
    if shape.role is not StmtRole.NUMERIC_FOR:
        for position, _, _, inner in iter_statements(lang, root, body, into_loops=False):
            if inner.role is StmtRole.CONTINUE:
                sites.append((_site(root, position), after))
    logger.debug("loop at %s: %d insertion sites", path, len(sites))
    return _insert(root, sites, lang)


def insert_at(root: Term, point: InsertionPoint, stmts: Sequence[Term], lang) -> Term:
    """Insert `stmts` (injected into block items) at `point` in `root`."""
    inj = lang.injections.inj
    items = [s if s.sort == BLOCK_ITEM_L else inj(s, BLOCK_ITEM_L) for s in stmts]
    if isinstance(point, BlockEntry):
        list_path = items_path(lang, root, point.path)
        if list_path is None:
            raise InvalidPath(point.path, "not a block")
        return _insert(root, [(list_path, items)], lang)
    if isinstance(point, BeforeStmt):
        return _insert(root, [(_site(root, point.path), items)], lang)
    return _before_loop_condition(root, point.path, items, lang)

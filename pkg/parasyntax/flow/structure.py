"""
Statement and block positions inside IPS terms.

A statement position is either a block item (an element of a generic block's item
list) or a bare statement slot, such as the arm of an `if` without braces.
"""
from typing import Iterator, List, Optional, Tuple

from ..fragments import BLOCK_ITEM_L, BLOCK_L, StmtRole, StmtShape
from ..terms import Path, Term, extract_list, subterm

__all__ = [
    "element_paths",
    "expr_roots",
    "items_path",
    "iter_statements",
    "statement_at",
]

Found = Tuple[Term, Path, StmtShape]


def element_paths(list_path: Path, term: Term) -> List[Path]:
    return [list_path + (1,) * k + (0,) for k in range(len(extract_list(term)))]


def statement_at(lang, root: Term, path: Path) -> Optional[Found]:
    """
    The statement at the block item or statement slot `path`, with its absolute
    path and shape; absent for block items that are not statements.
    """
    term = subterm(root, path)
    if term.sort == BLOCK_ITEM_L:
        found = lang.injections.proj_with_path(term, lang.stmt_sort)
        if found is None:
            return None
        stmt, inner = found
        path = path + inner
    elif term.sort == lang.stmt_sort:
        stmt = term
    else:
        return None
    shape = lang.ops.stmt_shape(stmt) or StmtShape(StmtRole.SIMPLE)
    return stmt, path, shape


def items_path(lang, root: Term, path: Path) -> Optional[Path]:
    """
    Path of the generic item list of the block at `path`: a generic block, a block
    of the language's block sort, or a block statement.
    """
    term = subterm(root, path)
    if term.sort == BLOCK_L:
        return path + (0,)
    if term.sort == lang.block_sort:
        return path + lang.ops.block_body(term) + (0,)
    found = statement_at(lang, root, path)
    if found is not None and found[2].role is StmtRole.BLOCK:
        return found[1] + found[2].arms[0] + (0,)
    return None


def iter_statements(
    lang, root: Term, path: Path, into_loops: bool = True
) -> Iterator[Tuple[Path, Term, Path, StmtShape]]:
    """
    Pre-order `(position, stmt, stmt path, shape)` for the statements under the
    block or statement slot at `path`. Loop bodies are skipped when `into_loops`
    is false, the loops themselves are still yielded.
    """
    term = subterm(root, path)
    if term.sort in (BLOCK_L, lang.block_sort):
        list_path = items_path(lang, root, path)
        for item in element_paths(list_path, subterm(root, list_path)):
            yield from iter_statements(lang, root, item, into_loops)
        return
    found = statement_at(lang, root, path)
    if found is None:
        return
    stmt, stmt_path, shape = found
    yield path, stmt, stmt_path, shape
    if shape.is_loop and not into_loops:
        return
    for arm in shape.arms:
        yield from iter_statements(lang, root, stmt_path + arm, into_loops)
    if shape.orelse is not None:
        yield from iter_statements(lang, root, stmt_path + shape.orelse, into_loops)


def expr_roots(lang, root: Term, path: Path) -> List[Path]:
    """Paths of the outermost expressions under `path`, in pre-order."""
    term = subterm(root, path)
    if term.sort == lang.expr_sort:
        return [path]
    roots = []
    for i, child in enumerate(term.children):
        if child.children or child.sort == lang.expr_sort:
            roots.extend(expr_roots(lang, root, path + (i,)))
    return roots

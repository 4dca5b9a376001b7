"""
Oracles for coverage markers.

:func:`check_coverage` asks that the blocks a run marks form paths of the
control-flow graph of the uninstrumented program. :func:`executed_blocks` derives
the blocks a run enters from the statements it executes, without the block
markers, so the marks of an instrumented run can be compared against it.
"""
from collections import deque
from typing import Dict, Iterable, List, Set, Tuple

from ..flow import (
    CFG,
    BeforeStmt,
    BlockEntry,
    NodeRole,
    basic_blocks,
    build_cfg,
    insert_at,
    statement_at,
)
from ..fragments import StmtRole
from ..languages import Language
from ..terms import Term
from .interpreters import interpret
from .trace import DEFAULT_FUEL

__all__ = ["block_predecessors", "check_coverage", "executed_blocks", "mark_statements"]


def block_predecessors(cfg: CFG) -> Dict[int, Set[int]]:
    """
    For each basic block, the blocks control can come from. Nodes outside
    blocks (loop tests, steps, short-circuit operands) are looked through.
    """
    blocks = basic_blocks(cfg)
    owner = {node: block.id for block in blocks for node in block.nodes}
    result = {}
    for block in blocks:
        preds, seen = set(), set()
        queue = deque(cfg.predecessors(block.leader))
        while queue:
            node = queue.popleft()
            if node in seen:
                continue
            seen.add(node)
            if node in owner:
                preds.add(owner[node])
            elif node.role is not NodeRole.Entry:
                queue.extend(cfg.predecessors(node))
        result[block.id] = preds
    return result


def check_coverage(term: Term, lang, marks: Iterable[int]) -> List[int]:
    """
    Marked blocks of `term` that no marked block can precede, nor a function
    entry. An empty list means the marks are consistent with some set of paths.
    """
    cfg = build_cfg(term, lang)
    marked = set(marks)
    preds = block_predecessors(cfg)
    anchors = {
        block.id for block in basic_blocks(cfg) if block.leader.role is NodeRole.Entry
    }
    unknown = sorted(i for i in marked if i not in preds)
    inconsistent = sorted(
        i for i in marked if i in preds and i not in anchors and not preds[i] & marked
    )
    return unknown + inconsistent


def mark_statements(term: Term, lang) -> Tuple[Term, Dict[int, int]]:
    """
    Put a marker before every statement of a basic block and at every function
    entry. Returns the instrumented term and, per marker index, the block owning
    the marked statement.
    """
    blocks = basic_blocks(build_cfg(term, lang))
    nodes = sorted(
        ((node, block.id) for block in blocks for node in block.nodes),
        key=lambda pair: pair[0].sort_key,
    )
    # Latest position first: earlier positions are not moved by an insertion.
    for index, (node, _) in reversed(list(enumerate(nodes))):
        point = BeforeStmt(node.path)
        if node.role is NodeRole.Entry:
            point = BlockEntry(node.path)
        else:
            found = statement_at(lang, term, node.path)
            if found is not None and found[2].role is StmtRole.BLOCK:
                point = BlockEntry(node.path)
        term = insert_at(term, point, [lang.ops.coverage_marker(index)], lang)
    return term, {index: owner for index, (_, owner) in enumerate(nodes)}


def executed_blocks(
    language: Language, term: Term, lang, fuel: int = DEFAULT_FUEL
) -> Set[int]:
    """The basic blocks of `term` holding a statement that a run of `main` executes."""
    instrumented, owner = mark_statements(term, lang)
    trace = interpret(language, lang.recompose(instrumented), fuel)
    return {owner[index] for index in trace.marks}

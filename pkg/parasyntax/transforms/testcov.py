import logging
from typing import Tuple

from ..flow import BlockEntry, NodeRole, basic_blocks, build_cfg, insert_at, statement_at
from ..fragments import BLOCK_ITEM_L, StmtRole
from ..terms import Term
from .requirements import PassRequirements

__all__ = ["TESTCOV_REQUIREMENTS", "testcov"]

logger = logging.getLogger(__name__)

TESTCOV_REQUIREMENTS = PassRequirements(
    injections=(("Stmt", BLOCK_ITEM_L),),
    operations=("stmt_shape", "expr_shape", "block_body", "coverage_marker"),
)


def _point(block, term: Term, lang):
    if block.leader.role is NodeRole.Stmt:
        found = statement_at(lang, term, block.leader.path)
        # The first statement of a block statement runs first.
        if found is not None and found[2].role is StmtRole.BLOCK:
            return BlockEntry(block.leader.path)
    return block.point


def testcov(term: Term, lang) -> Tuple[Term, int]:
    """
    Prefix every basic block with a marker statement recording that it ran.

    Returns the instrumented term and the number of blocks; block `i` stores into
    element `i` of the coverage array.
    """
    TESTCOV_REQUIREMENTS.check("testcov", lang)
    blocks = basic_blocks(build_cfg(term, lang))
    points = [(block.id, _point(block, term, lang)) for block in blocks]
    # Latest block first: insertions never move the positions of earlier leaders.
    for index, point in reversed(points):
        term = insert_at(term, point, [lang.ops.coverage_marker(index)], lang)
    logger.debug("%s: %d coverage markers", lang.name, len(blocks))
    return term, len(blocks)

"""
Control-flow graphs over IPS terms.

Nodes are statements, identified by their position in the term, plus the
expression-level points where control can branch: loop tests (`cond`), for-loop
steps (`step`) and right operands of short-circuit operators (`short`). Each
function body is anchored by an `entry` node and left through an `exit` node.

.. code-block:: python

    cfg = build_cfg(program, lang)
    for block in basic_blocks(cfg):
        print(block.id, block.point)
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Set, Tuple

import networkx as nx
from cached_property import cached_property

from ..errors import UnstructuredConstruct
from ..fragments import BLOCK_L, ExprRole, StmtRole
from ..terms import Path, Term, subterm
from .insert import BeforeStmt, BlockEntry, InsertionPoint
from .structure import element_paths, expr_roots, items_path, statement_at

__all__ = [
    "BasicBlock",
    "CFG",
    "Node",
    "NodeRole",
    "basic_blocks",
    "build_cfg",
    "dump_blocks",
    "format_path",
    "to_dot",
]

logger = logging.getLogger(__name__)


class NodeRole(Enum):
    Entry = "entry"
    Exit = "exit"
    Stmt = "stmt"
    Cond = "cond"
    Step = "step"
    Short = "short"


ROLE_RANK = {role: rank for rank, role in enumerate(NodeRole)}


def format_path(path: Path) -> str:
    return ".".join(str(i) for i in path) or "."


@dataclass(frozen=True)
class Node:
    role: NodeRole
    path: Path

    @property
    def sort_key(self) -> Tuple[Path, int]:
        return self.path, ROLE_RANK[self.role]

    def __str__(self):
        return f"{self.role.value} {format_path(self.path)}"


class CFG:
    def __init__(self, graph: nx.DiGraph, entry: Node, exit_: Node, anchors: Sequence[Node]):
        self.graph = graph
        self.entry = entry
        self.exit = exit_
        self.anchors = tuple(anchors)
        """Entry nodes of the function bodies."""

    @cached_property
    def reachable(self) -> Set[Node]:
        return {self.entry} | nx.descendants(self.graph, self.entry)

    @cached_property
    def nodes(self) -> List[Node]:
        return sorted(self.graph.nodes, key=lambda n: n.sort_key)

    def predecessors(self, node: Node) -> List[Node]:
        return [p for p in self.graph.predecessors(node) if p in self.reachable]

    def __len__(self):
        return self.graph.number_of_nodes()


@dataclass(frozen=True)
class BasicBlock:
    id: int
    nodes: Tuple[Node, ...]

    @property
    def leader(self) -> Node:
        return self.nodes[0]

    @property
    def point(self) -> InsertionPoint:
        """Where a statement runs first in this block."""
        if self.leader.role is NodeRole.Entry:
            return BlockEntry(self.leader.path)
        return BeforeStmt(self.leader.path)


class _Builder:
    def __init__(self, lang, root: Term):
        self.lang = lang
        self.root = root
        self.graph = nx.DiGraph()
        self.loops: List[Tuple[List[Node], Node]] = []
        self.exit: Optional[Node] = None

    def add(self, role: NodeRole, path: Path, preds: Sequence[Node]) -> Node:
        node = Node(role, path)
        self.graph.add_node(node)
        self.connect(preds, node)
        return node

    def connect(self, preds: Sequence[Node], node: Node):
        for pred in preds:
            self.graph.add_edge(pred, node)

    def body(self, path: Path) -> Tuple[Node, Node]:
        entry = self.add(NodeRole.Entry, path, ())
        saved, self.exit = self.exit, self.add(NodeRole.Exit, path, ())
        self.connect(self.block(path, [entry]), self.exit)
        exit_, self.exit = self.exit, saved
        return entry, exit_

    def block(self, path: Path, preds: List[Node]) -> List[Node]:
        list_path = items_path(self.lang, self.root, path)
        for item in element_paths(list_path, subterm(self.root, list_path)):
            preds = self.stmt(item, preds)
        return preds

    def slot(self, path: Path, preds: List[Node]) -> List[Node]:
        sort = subterm(self.root, path).sort
        if sort in (BLOCK_L, self.lang.block_sort):
            return self.block(path, preds)
        return self.stmt(path, preds)

    def exprs(self, paths: Sequence[Path], preds: List[Node]) -> List[Node]:
        for path in paths:
            preds = self.expr(path, preds)
        return preds

    def expr(self, path: Path, preds: List[Node]) -> List[Node]:
        shape = self.lang.ops.expr_shape(subterm(self.root, path))
        if shape.role is ExprRole.SHORT_CIRCUIT:
            left, right = shape.operands
            outs = self.expr(path + left, preds)
            short = self.add(NodeRole.Short, path + right, outs)
            return outs + self.expr(path + right, [short])
        return self.exprs([path + op for op in shape.operands], preds)

    def loop(self, body: Path, preds: List[Node], target: Node) -> List[Node]:
        """Walk a loop body; returns the `break` nodes."""
        breaks: List[Node] = []
        self.loops.append((breaks, target))
        self.connect(self.slot(body, preds), target)
        self.loops.pop()
        return breaks

    def stmt(self, path: Path, preds: List[Node]) -> List[Node]:
        node = self.add(NodeRole.Stmt, path, preds)
        found = statement_at(self.lang, self.root, path)
        if found is None:
            return self.exprs(expr_roots(self.lang, self.root, path), [node])
        _, at, shape = found
        role = shape.role

        if role is StmtRole.SIMPLE:
            return self.exprs(expr_roots(self.lang, self.root, at), [node])

        if role is StmtRole.BLOCK:
            return self.block(at + shape.arms[0], [node])

        if role is StmtRole.IF:
            outs = self.expr(at + shape.conds[0], [node])
            exits = []
            for k, arm in enumerate(shape.arms):
                if k:
                    cond = self.add(NodeRole.Cond, at + shape.conds[k], outs)
                    outs = self.expr(at + shape.conds[k], [cond])
                exits += self.slot(at + arm, outs)
            if shape.orelse is None:
                return exits + outs
            return exits + self.slot(at + shape.orelse, outs)

        if role is StmtRole.WHILE:
            cond = self.add(NodeRole.Cond, at + shape.conds[0], [node])
            outs = self.expr(at + shape.conds[0], [cond])
            return outs + self.loop(at + shape.arms[0], outs, cond)

        if role is StmtRole.FOR:
            outs = self.expr(at + shape.init, [node]) if shape.init else [node]
            head = at + shape.conds[0] if shape.conds else at
            cond = self.add(NodeRole.Cond, head, outs)
            outs = self.expr(head, [cond]) if shape.conds else [cond]
            target = cond
            if shape.step:
                target = self.add(NodeRole.Step, at + shape.step, ())
                self.connect(self.expr(at + shape.step, [target]), cond)
            breaks = self.loop(at + shape.arms[0], outs, target)
            return (outs if shape.conds else []) + breaks

        if role is StmtRole.NUMERIC_FOR:
            outs = self.exprs([at + e for e in shape.exprs], [node])
            head = self.add(NodeRole.Cond, at, outs)
            return [head] + self.loop(at + shape.arms[0], [head], head)

        if role is StmtRole.RETURN:
            self.connect(self.exprs([at + e for e in shape.exprs], [node]), self.exit)
            return []

        if not self.loops:
            raise UnstructuredConstruct(f"{role.value} outside a loop at {format_path(path)}")
        breaks, target = self.loops[-1]
        if role is StmtRole.BREAK:
            breaks.append(node)
        else:
            self.connect([node], target)
        return []


def build_cfg(term: Term, lang) -> CFG:
    """
    The CFG of `term`, a function body of the language's block sort or a whole
    program. On a program the entry fans out to every function's body entry.
    """
    builder = _Builder(lang, term)
    if term.sort == lang.block_sort:
        entry, exit_ = builder.body(())
        anchors = [entry]
    else:
        entry = builder.add(NodeRole.Entry, (), ())
        exit_ = builder.add(NodeRole.Exit, (), ())
        anchors = []
        for fundef in element_paths((0,), term.children[0]):
            body = fundef + (len(subterm(term, fundef).children) - 1,)
            body_entry, body_exit = builder.body(body)
            builder.connect([entry], body_entry)
            builder.connect([body_exit], exit_)
            anchors.append(body_entry)
    cfg = CFG(builder.graph, entry, exit_, anchors)
    logger.debug(
        "built %s CFG: %d nodes, %d edges", lang.name, len(cfg), cfg.graph.number_of_edges()
    )
    return cfg


def basic_blocks(cfg: CFG) -> List[BasicBlock]:
    """
    Maximal straight-line runs of reachable statements, numbered in pre-order of
    their leaders. Each body entry starts a block of its own.
    """
    graph = cfg.graph
    members = {n for n in cfg.reachable if n.role is NodeRole.Stmt}
    members.update(cfg.anchors)

    def is_leader(node: Node) -> bool:
        if node.role is NodeRole.Entry:
            return True
        preds = cfg.predecessors(node)
        if len(preds) != 1:
            return True
        return preds[0] not in members or graph.out_degree(preds[0]) > 1

    leaders = sorted((n for n in members if is_leader(n)), key=lambda n: n.sort_key)
    blocks = []
    for index, leader in enumerate(leaders):
        nodes = [leader]
        while True:
            follow = [
                s for s in graph.successors(nodes[-1]) if s in members and not is_leader(s)
            ]
            if not follow:
                break
            nodes.append(follow[0])
        blocks.append(BasicBlock(index, tuple(nodes)))
    return blocks


def to_dot(cfg: CFG) -> str:
    ids = {node: i for i, node in enumerate(cfg.nodes)}
    lines = ["digraph cfg {"]
    lines.extend(f'  n{ids[node]} [label="{node}"];' for node in cfg.nodes)
    edges = sorted((ids[a], ids[b]) for a, b in cfg.graph.edges)
    lines.extend(f"  n{a} -> n{b};" for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_blocks(blocks: Sequence[BasicBlock]) -> str:
    return "".join(
        f"block {b.id}: {format_path(b.leader.path)} ({len(b.nodes)} nodes)\n" for b in blocks
    )

import json
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ..errors import (
    ArityMismatch,
    InvalidPath,
    PayloadMismatch,
    SortMismatch,
    UnknownKind,
)
from .kinds import NodeKind, Signature
from .sorts import Sort

__all__ = [
    "Path",
    "Payload",
    "Term",
    "dumps",
    "mk_term",
    "project",
    "replace_subterm",
    "subterm",
    "walk",
]

Payload = Union[int, bool, str]
Path = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Term:
    """
    An immutable sorted tree node.

    The child-sort invariant is checked on construction, so no reachable term is
    ill-sorted. Use :func:`mk_term` to also check signature membership.
    Equality, hashing and printing are iterative.
    """

    kind: NodeKind
    payloads: Tuple[Payload, ...]
    children: Tuple["Term", ...]

    def __post_init__(self):
        kind = self.kind
        if len(self.payloads) != len(kind.payloads):
            raise ArityMismatch(kind, "payloads", len(kind.payloads), len(self.payloads))
        for i, (prim, value) in enumerate(zip(kind.payloads, self.payloads)):
            if not prim.accepts(value):
                raise PayloadMismatch(kind, i, prim.value, value)
        if len(self.children) != len(kind.child_sorts):
            raise ArityMismatch(
                kind, "children", len(kind.child_sorts), len(self.children)
            )
        for i, (expected, child) in enumerate(zip(kind.child_sorts, self.children)):
            if not isinstance(child, Term):
                raise SortMismatch(i, expected, type(child).__name__, kind.name)
            if child.kind.produced != expected:
                raise SortMismatch(i, expected, child.kind.produced, kind.name)
        # Children are built first, so their hashes are known.
        digest = hash((kind, self.payloads, tuple(c._hash for c in self.children)))
        object.__setattr__(self, "_hash", digest)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a._hash != b._hash or a.kind != b.kind or a.payloads != b.payloads:
                return False
            stack.extend(zip(a.children, b.children))
        return True

    @property
    def sort(self) -> Sort:
        return self.kind.produced

    def with_child(self, index: int, child: "Term") -> "Term":
        children = list(self.children)
        children[index] = child
        return Term(self.kind, self.payloads, tuple(children))

    def with_children(self, children: Sequence["Term"]) -> "Term":
        return Term(self.kind, self.payloads, tuple(children))

    def size(self) -> int:
        return sum(1 for _ in walk(self))

    def __str__(self):
        return dumps(self)

    def __repr__(self):
        return f"Term<{dumps(self)}>"


def mk_term(
    kind: NodeKind,
    payloads: Sequence[Payload] = (),
    children: Sequence[Term] = (),
    signature: Optional[Signature] = None,
) -> Term:
    """
    Build a term, checking arity, payload types and child sorts, and that
    `kind` belongs to `signature` when one is given.
    """
    if signature is not None and kind not in signature:
        raise UnknownKind(kind, signature)
    return Term(kind, tuple(payloads), tuple(children))


def project(
    term: Term, kind: NodeKind
) -> Optional[Tuple[Tuple[Payload, ...], Tuple[Term, ...]]]:
    """Return `(payloads, children)` if `term` was built with `kind`."""
    if term.kind == kind:
        return term.payloads, term.children
    return None


def subterm(term: Term, path: Path) -> Term:
    for depth, index in enumerate(path):
        if not 0 <= index < len(term.children):
            raise InvalidPath(path, f"no child {index} at depth {depth}")
        term = term.children[index]
    return term


def replace_subterm(term: Term, path: Path, new: Term) -> Term:
    """Rebuild `term` with the node at `path` replaced; sorts must agree."""
    spine = []
    for index in path:
        if not 0 <= index < len(term.children):
            raise InvalidPath(path, f"no child {index}")
        spine.append(term)
        term = term.children[index]
    if new.sort != term.sort:
        raise SortMismatch(0, term.sort, new.sort, "replace_subterm")
    for parent, index in zip(reversed(spine), reversed(path)):
        new = parent.with_child(index, new)
    return new


def walk(term: Term, path: Path = ()) -> Iterator[Tuple[Path, Term]]:
    """Pre-order `(path, subterm)` pairs."""
    stack = [(path, term)]
    while stack:
        current_path, current = stack.pop()
        yield current_path, current
        for i in reversed(range(len(current.children))):
            stack.append((current_path + (i,), current.children[i]))


def _dump_payload(value: Payload) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return json.dumps(value)


def dumps(term: Term) -> str:
    """Render `term` as `(KindName payload* child*)`."""
    out: List[str] = []
    stack: List[Union[Term, str]] = [term]
    while stack:
        top = stack.pop()
        if isinstance(top, str):
            out.append(top)
            continue
        out.append("(" + " ".join([top.kind.name, *map(_dump_payload, top.payloads)]))
        stack.append(")")
        for child in reversed(top.children):
            stack.extend((child, " "))
    return "".join(out)

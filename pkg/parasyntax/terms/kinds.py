from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional, Set, Tuple

from cached_property import cached_property

from ..errors import DuplicateKind
from .sorts import Atomic, ListOf, OptionOf, PairOf, Prim, Sort

__all__ = ["NodeKind", "Signature", "atomic_sorts"]


@dataclass(frozen=True)
class NodeKind:
    """
    A constructor descriptor: payload slots come first, then children.

    .. code-block:: python

        Assign = NodeKind("Assign", (), (LhsL, AssignOpL, RhsL), AssignL)
    """

    name: str
    payloads: Tuple[Prim, ...]
    child_sorts: Tuple[Sort, ...]
    produced: Sort
    builtin: bool = field(default=False, compare=False)
    """Container kinds are members of every signature."""

    def __str__(self):
        return self.name

    def describe(self) -> str:
        payloads = " ".join(p.value for p in self.payloads)
        children = ", ".join(str(s) for s in self.child_sorts)
        head = f"{self.name} : {payloads} " if payloads else f"{self.name} : "
        return f"{head}[{children}] -> {self.produced}"


def atomic_sorts(sort: Sort) -> Iterator[Atomic]:
    """Atomic sorts nested inside `sort`, left to right."""
    if isinstance(sort, Atomic):
        yield sort
    elif isinstance(sort, (ListOf, OptionOf)):
        yield from atomic_sorts(sort.elem)
    elif isinstance(sort, PairOf):
        yield from atomic_sorts(sort.first)
        yield from atomic_sorts(sort.second)


@dataclass(frozen=True)
class Signature:
    """A named set of node kinds, kept in declaration order."""

    name: str
    kinds: Tuple[NodeKind, ...]

    def __post_init__(self):
        seen: Set[str] = set()
        for kind in self.kinds:
            if kind.name in seen:
                raise DuplicateKind(kind.name)
            seen.add(kind.name)

    @classmethod
    def of(cls, name: str, kinds: Iterable[NodeKind]) -> "Signature":
        return cls(name, tuple(kinds))

    @cached_property
    def by_name(self) -> Dict[str, NodeKind]:
        return {kind.name: kind for kind in self.kinds}

    @cached_property
    def sorts(self) -> Tuple[Sort, ...]:
        """Produced sorts, in order of first appearance."""
        return tuple(dict.fromkeys(kind.produced for kind in self.kinds))

    @cached_property
    def frontier(self) -> Tuple[Atomic, ...]:
        """Atomic sorts used by some child position but produced by no kind."""
        produced = set(self.sorts)
        frontier = {}
        for kind in self.kinds:
            for sort in kind.child_sorts:
                for atom in atomic_sorts(sort):
                    if atom not in produced and not atom.name.startswith("#"):
                        frontier[atom] = None
        return tuple(frontier)

    def get(self, name: str) -> Optional[NodeKind]:
        return self.by_name.get(name)

    def __getitem__(self, name: str) -> NodeKind:
        return self.by_name[name]

    def __contains__(self, kind) -> bool:
        if isinstance(kind, str):
            return kind in self.by_name
        return kind.builtin or self.by_name.get(kind.name) == kind

    def __iter__(self):
        return iter(self.kinds)

    def __len__(self):
        return len(self.kinds)

    def __str__(self):
        return self.name

"""
Sort injections: declared embeddings of one sort into another, realized by a
chain of wrapper kinds.

.. code-block:: python

    table = InjectionTable(signature)
    table = table.declare(InjectionDecl.chain(AssignL, [(AssignIsExpr, 0)]))
    table = table.declare(InjectionDecl.chain(ExprL, [(ExprStmt, 0), (StmtItem, 0)]))
    table = table.compose(AssignL, ExprL, BlockItemL)
    item = table.inj(assign, BlockItemL)
    table.proj(item, AssignL) == assign  # True
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cached_property import cached_property

from .errors import (
    AmbiguousInjection,
    DuplicateInjection,
    IllTypedPath,
    MissingEdge,
    NoInjection,
)
from .terms import NodeKind, Path, Signature, Sort, Term

__all__ = ["InjectionDecl", "InjectionTable"]

logger = logging.getLogger(__name__)

Step = Tuple[NodeKind, int]


@dataclass(frozen=True)
class InjectionDecl:
    source: Sort
    target: Sort
    path: Tuple[Step, ...]
    """Wrapper kinds and the child index the wrapped term takes, innermost first."""
    fills: Tuple[Tuple[Term, ...], ...]
    """For each wrapper, the terms placed at its other child positions."""
    derived: bool = False

    @classmethod
    def chain(
        cls,
        source: Sort,
        steps: Sequence[Step],
        fills: Optional[Sequence[Sequence[Term]]] = None,
    ) -> "InjectionDecl":
        """Declare the injection obtained by wrapping `source` through `steps`."""
        target = steps[-1][0].produced if steps else source
        fills = fills or [() for _ in steps]
        return cls(source, target, tuple(steps), tuple(tuple(f) for f in fills))

    @classmethod
    def identity(cls, sort: Sort) -> "InjectionDecl":
        return cls(sort, sort, (), ())

    @property
    def unwrap_path(self) -> Path:
        """Child indices from the outermost wrapper down to the injected term."""
        return tuple(index for _, index in reversed(self.path))

    def check(self, signature: Optional[Signature] = None):
        if len(self.fills) != len(self.path):
            raise IllTypedPath(self.source, self.target, "one fill list per wrapper")
        current = self.source
        for (kind, index), fill in zip(self.path, self.fills):
            if signature is not None and kind not in signature:
                raise IllTypedPath(
                    self.source, self.target, f"{kind} not in {signature}"
                )
            if kind.payloads:
                raise IllTypedPath(self.source, self.target, f"{kind} has payloads")
            if not 0 <= index < len(kind.child_sorts):
                raise IllTypedPath(self.source, self.target, f"{kind} has no child {index}")
            if kind.child_sorts[index] != current:
                raise IllTypedPath(
                    self.source,
                    self.target,
                    f"{kind} expects {kind.child_sorts[index]} at {index}, got {current}",
                )
            others = [s for i, s in enumerate(kind.child_sorts) if i != index]
            if [t.sort for t in fill] != others:
                raise IllTypedPath(
                    self.source, self.target, f"fill of {kind} does not match {others}"
                )
            current = kind.produced
        if current != self.target:
            raise IllTypedPath(self.source, self.target, f"chain produces {current}")

    def wrap(self, term: Term) -> Term:
        for (kind, index), fill in zip(self.path, self.fills):
            children = list(fill)
            children.insert(index, term)
            term = Term(kind, (), tuple(children))
        return term

    def unwrap(self, term: Term) -> Optional[Term]:
        for (kind, index), fill in reversed(list(zip(self.path, self.fills))):
            if term.kind != kind:
                return None
            others = term.children[:index] + term.children[index + 1 :]
            if others != fill:
                return None
            term = term.children[index]
        return term

    def describe(self) -> str:
        steps = ", ".join(f"{kind.name}@{index}" for kind, index in self.path)
        line = f"{self.source} -> {self.target} : {steps or 'identity'}"
        return line + (" [derived]" if self.derived else "")


@dataclass(frozen=True)
class InjectionTable:
    """Immutable table of injections; `declare` and `compose` return new tables."""

    signature: Optional[Signature] = None
    entries: Tuple[InjectionDecl, ...] = field(default=())

    @cached_property
    def by_pair(self) -> Dict[Tuple[Sort, Sort], InjectionDecl]:
        return {(d.source, d.target): d for d in self.entries}

    def _replace(self, decl: InjectionDecl) -> "InjectionTable":
        pair = (decl.source, decl.target)
        entries = [d for d in self.entries if (d.source, d.target) != pair]
        return InjectionTable(self.signature, tuple(entries) + (decl,))

    def declare(self, decl: InjectionDecl) -> "InjectionTable":
        decl.check(self.signature)
        existing = self.by_pair.get((decl.source, decl.target))
        if existing is not None and not existing.derived:
            raise DuplicateInjection(decl.source, decl.target)
        logger.debug("declared injection %s", decl.describe())
        return self._replace(decl)

    def declare_all(self, decls: Iterable[InjectionDecl]) -> "InjectionTable":
        table = self
        for decl in decls:
            table = table.declare(decl)
        return table

    def compose(self, a: Sort, b: Sort, c: Sort) -> "InjectionTable":
        first = self.by_pair.get((a, b))
        if first is None:
            raise MissingEdge(a, b)
        second = self.by_pair.get((b, c))
        if second is None:
            raise MissingEdge(b, c)
        decl = InjectionDecl(
            a, c, first.path + second.path, first.fills + second.fills, derived=True
        )
        existing = self.by_pair.get((a, c))
        if existing is not None:
            if not existing.derived or existing.path == decl.path:
                return self
            raise AmbiguousInjection(a, c)
        decl.check(self.signature)
        logger.debug("derived injection %s", decl.describe())
        return self._replace(decl)

    def compose_chain(self, *sorts: Sort) -> "InjectionTable":
        """Compose consecutive edges: `compose_chain(a, b, c, d)` derives a -> d."""
        table = self
        for i in range(2, len(sorts)):
            table = table.compose(sorts[0], sorts[i - 1], sorts[i])
        return table

    def get(self, source: Sort, target: Sort) -> InjectionDecl:
        decl = self.by_pair.get((source, target))
        if decl is None:
            raise NoInjection(source, target)
        return decl

    def has(self, source: Sort, target: Sort) -> bool:
        return (source, target) in self.by_pair

    def inj(self, term: Term, target: Sort) -> Term:
        return self.get(term.sort, target).wrap(term)

    def proj(self, term: Term, source: Sort) -> Optional[Term]:
        return self.get(source, term.sort).unwrap(term)

    def try_proj(self, term: Term, source: Sort) -> Optional[Term]:
        """Like :meth:`proj`, but absent when the pair was never declared."""
        decl = self.by_pair.get((source, term.sort))
        return decl.unwrap(term) if decl is not None else None

    def proj_with_path(self, term: Term, source: Sort) -> Optional[Tuple[Term, Path]]:
        decl = self.by_pair.get((source, term.sort))
        if decl is None:
            return None
        inner = decl.unwrap(term)
        if inner is None:
            return None
        return inner, decl.unwrap_path

    def dump(self) -> str:
        lines: List[str] = sorted(
            d.describe() for d in self.entries
        )
        return "\n".join(lines) + ("\n" if lines else "")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

"""
Strategy combinators over sorted terms.

A :class:`Rewrite` returns a new term when it fires and `None` when it does not.
Calling a rewrite checks that it preserved the sort of its input.

.. code-block:: python

    @rewrite
    def rename(term):
        if term.kind == IDENT and term.payloads == ("x",):
            return ident("y")
        return None

    transform_bottom_up(rename, program)
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional

from .errors import SortViolation
from .terms import Term, walk

__all__ = [
    "AllChildren",
    "FAIL",
    "FunctionRewrite",
    "IDENTITY",
    "OnceTopDown",
    "Rewrite",
    "Seq",
    "Try",
    "all_children",
    "once_top_down",
    "query_collect",
    "rewrite",
    "seq",
    "transform_bottom_up",
    "try_",
]


class Rewrite(ABC):
    @abstractmethod
    def rewrite(self, term: Term) -> Optional[Term]:
        pass

    def __call__(self, term: Term) -> Optional[Term]:
        result = self.rewrite(term)
        if result is not None and result.sort != term.sort:
            raise SortViolation(term.sort, result.sort)
        return result


@dataclass(frozen=True)
class FunctionRewrite(Rewrite):
    fn: Callable[[Term], Optional[Term]]

    def rewrite(self, term):
        return self.fn(term)


def rewrite(fn: Callable[[Term], Optional[Term]]) -> Rewrite:
    return FunctionRewrite(fn)


IDENTITY = FunctionRewrite(lambda term: term)
FAIL = FunctionRewrite(lambda term: None)


@dataclass(frozen=True)
class Try(Rewrite):
    """Never fails: falls back to the input."""

    inner: Rewrite

    def rewrite(self, term):
        result = self.inner(term)
        return term if result is None else result


@dataclass(frozen=True)
class Seq(Rewrite):
    first: Rewrite
    second: Rewrite

    def rewrite(self, term):
        intermediate = self.first(term)
        if intermediate is None:
            return None
        return self.second(intermediate)


@dataclass(frozen=True)
class OnceTopDown(Rewrite):
    """Fires at the first node, in pre-order, where `inner` fires."""

    inner: Rewrite

    def rewrite(self, term):
        result = self.inner(term)
        if result is not None:
            return result
        for i, child in enumerate(term.children):
            result = self(child)
            if result is not None:
                return term.with_child(i, result)
        return None


@dataclass(frozen=True)
class AllChildren(Rewrite):
    """Applies `inner` to every immediate child; fails if it fails on any."""

    inner: Rewrite

    def rewrite(self, term):
        children = []
        for child in term.children:
            result = self.inner(child)
            if result is None:
                return None
            children.append(result)
        return term.with_children(children)


def try_(r: Rewrite) -> Rewrite:
    return Try(r)


def seq(first: Rewrite, second: Rewrite) -> Rewrite:
    return Seq(first, second)


def once_top_down(r: Rewrite) -> Rewrite:
    return OnceTopDown(r)


def all_children(r: Rewrite) -> Rewrite:
    return AllChildren(r)


def transform_bottom_up(r: Rewrite, term: Term) -> Term:
    """Apply `r` at every node, children first; nodes where it does not fire are kept."""
    done: List[Term] = []
    stack = [(term, False)]
    while stack:
        node, visited = stack.pop()
        if node.children and not visited:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
            continue
        if node.children:
            count = len(node.children)
            children = tuple(done[-count:])
            del done[-count:]
            if any(new is not old for new, old in zip(children, node.children)):
                node = node.with_children(children)
        result = r(node)
        done.append(node if result is None else result)
    return done[0]


def query_collect(q: Callable[[Term], Iterable[Any]], term: Term) -> List[Any]:
    """Concatenate `q` over every node of `term`, in pre-order."""
    return [value for _, node in walk(term) for value in q(node)]

"""
Container kinds: list spines (NilF/ConsF), pairs (PairF), options (JustF/NothingF)
and primitive leaves (IntF/BoolF/StringF), instantiable at every sort.

.. code-block:: python

    from parasyntax.terms import build_list, extract_list
    xs = build_list(IdentL, [x, y])   # (ConsF x (ConsF y (NilF)))
    extract_list(xs)                  # [x, y]
"""
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from ..errors import NotAContainerTerm, NotAListTerm, SortMismatch
from .kinds import NodeKind
from .sorts import ListOf, OptionOf, PairOf, Prim, Sort, prim_sort
from .term import Payload, Term

__all__ = [
    "build_list",
    "build_option",
    "build_pair",
    "cons_kind",
    "extract_list",
    "extract_option",
    "extract_pair",
    "just_kind",
    "leaf",
    "leaf_kind",
    "leaf_value",
    "map_list",
    "nil_kind",
    "nothing_kind",
    "pair_kind",
]


@lru_cache(maxsize=None)
def nil_kind(elem: Sort) -> NodeKind:
    return NodeKind("NilF", (), (), ListOf(elem), builtin=True)


@lru_cache(maxsize=None)
def cons_kind(elem: Sort) -> NodeKind:
    return NodeKind("ConsF", (), (elem, ListOf(elem)), ListOf(elem), builtin=True)


@lru_cache(maxsize=None)
def pair_kind(first: Sort, second: Sort) -> NodeKind:
    return NodeKind("PairF", (), (first, second), PairOf(first, second), builtin=True)


@lru_cache(maxsize=None)
def just_kind(elem: Sort) -> NodeKind:
    return NodeKind("JustF", (), (elem,), OptionOf(elem), builtin=True)


@lru_cache(maxsize=None)
def nothing_kind(elem: Sort) -> NodeKind:
    return NodeKind("NothingF", (), (), OptionOf(elem), builtin=True)


@lru_cache(maxsize=None)
def leaf_kind(prim: Prim) -> NodeKind:
    return NodeKind(f"{prim.value}F", (prim,), (), prim_sort(prim), builtin=True)


def build_list(elem: Sort, items: Sequence[Term]) -> Term:
    """Right-nested ConsF chain ending in NilF; inverse of :func:`extract_list`."""
    for i, item in enumerate(items):
        if item.sort != elem:
            raise SortMismatch(i, elem, item.sort, "build_list")
    term = Term(nil_kind(elem), (), ())
    cons = cons_kind(elem)
    for item in reversed(items):
        term = Term(cons, (), (item, term))
    return term


def extract_list(term: Term) -> List[Term]:
    if not isinstance(term.sort, ListOf):
        raise NotAListTerm(term.sort)
    items = []
    while term.kind.name == "ConsF":
        items.append(term.children[0])
        term = term.children[1]
    return items


def map_list(f: Callable[[Term], Term], term: Term) -> Term:
    elem = term.sort.elem if isinstance(term.sort, ListOf) else None
    if elem is None:
        raise NotAListTerm(term.sort)
    return build_list(elem, [f(item) for item in extract_list(term)])


def build_pair(first: Term, second: Term) -> Term:
    return Term(pair_kind(first.sort, second.sort), (), (first, second))


def extract_pair(term: Term) -> Tuple[Term, Term]:
    if not isinstance(term.sort, PairOf):
        raise NotAContainerTerm(term.sort, "a pair")
    first, second = term.children
    return first, second


def build_option(elem: Sort, item: Optional[Term]) -> Term:
    if item is None:
        return Term(nothing_kind(elem), (), ())
    if item.sort != elem:
        raise SortMismatch(0, elem, item.sort, "build_option")
    return Term(just_kind(elem), (), (item,))


def extract_option(term: Term) -> Optional[Term]:
    if not isinstance(term.sort, OptionOf):
        raise NotAContainerTerm(term.sort, "an option")
    if term.kind.name == "JustF":
        return term.children[0]
    return None


def leaf(prim: Prim, value: Payload) -> Term:
    return Term(leaf_kind(prim), (value,), ())


def leaf_value(term: Term) -> Payload:
    return term.payloads[0]

import pytest
from hypothesis import given
from strategies import leaf_of, terms

from parasyntax.errors import SortViolation
from parasyntax.fragments import IDENT, ident, ident_names
from parasyntax.languages import get_language
from parasyntax.terms import Atomic, NodeKind, Term, walk
from parasyntax.traversal import (
    FAIL,
    IDENTITY,
    all_children,
    once_top_down,
    query_collect,
    rewrite,
    seq,
    transform_bottom_up,
    try_,
)

E = Atomic("EL")
ADD = NodeKind("Add", (), (E, E), E)
ONE = NodeKind("One", (), (), E)
TWO = NodeKind("Two", (), (), E)


def one():
    return Term(ONE, (), ())


def two():
    return Term(TWO, (), ())


def add(a, b):
    return Term(ADD, (), (a, b))


@rewrite
def one_to_two(term):
    return two() if term.kind == ONE else None


@rewrite
def rename_x(term):
    if term.kind == IDENT and term.payloads == ("x",):
        return ident("renamed")
    return None


def test_basic_strategies():
    t = add(one(), one())
    assert IDENTITY(t) == t
    assert FAIL(t) is None
    assert try_(FAIL)(t) == t
    assert one_to_two(t) is None
    assert try_(one_to_two)(one()) == two()
    assert seq(one_to_two, IDENTITY)(one()) == two()
    assert seq(FAIL, IDENTITY)(one()) is None
    assert seq(one_to_two, one_to_two)(one()) is None


def test_once_top_down():
    t = add(add(one(), one()), one())
    assert once_top_down(one_to_two)(t) == add(add(two(), one()), one())
    assert once_top_down(one_to_two)(add(two(), two())) is None


def test_all_children():
    assert all_children(one_to_two)(add(one(), one())) == add(two(), two())
    assert all_children(one_to_two)(add(one(), two())) is None
    assert all_children(FAIL)(one()) == one()


def test_transform_bottom_up():
    t = add(add(one(), two()), one())
    assert transform_bottom_up(one_to_two, t) == add(add(two(), two()), two())
    assert transform_bottom_up(FAIL, t) is t


def test_sort_violation():
    @rewrite
    def bad(term):
        return ident("x") if term.kind == ONE else None

    with pytest.raises(SortViolation):
        bad(one())
    with pytest.raises(SortViolation):
        transform_bottom_up(bad, add(two(), one()))
    with pytest.raises(SortViolation):
        once_top_down(bad)(add(two(), one()))


@given(terms())
def test_identity_fuzz(t):
    assert transform_bottom_up(IDENTITY, t) == t
    assert once_top_down(FAIL)(t) is None
    assert len(query_collect(lambda n: [n], t)) == len(list(walk(t))) == t.size()


def test_query_collect_preorder(hoist_program):
    term = get_language("minic").parse_term(hoist_program)
    names = query_collect(lambda n: n.payloads[:1] if n.kind == IDENT else [], term)
    assert names == ident_names(term)
    assert names == [
        "f", "a", "b", "s", "t1", "t2", "s", "r1", "t1", "a", "t2", "b",
        "r1", "r2", "t2", "a", "t1", "b", "r2", "main", "f",
    ]  # fmt: skip


def test_generic_rename(language):
    lang = language.definition
    text = {
        "minic": "int main() { int x = 1; x = x + 1; return x; }",
        "minijs": "function main() { var x = 1; x = x + 1; return x; }",
        "minilua": "function main() local x = 1 x = x + 1 return x end",
    }[language.value]
    term = transform_bottom_up(rename_x, lang.parse_term(text))
    assert "x" not in ident_names(term)
    rendered = lang.render(term)
    assert rendered.count("renamed") == 4
    assert lang.parse_term(rendered) == term


def test_leaves_are_kept():
    leaf = leaf_of(E)
    assert transform_bottom_up(one_to_two, add(leaf, one())) == add(leaf, two())

import pytest
from hypothesis import given
from strategies import SORTS, leaf_of, leaves

from parasyntax.errors import NotAContainerTerm, NotAListTerm, SortMismatch
from parasyntax.fragments import (
    EMPTY_DECL_ATTRS,
    SINGLE_LOCAL_VAR_DECL_L,
    VAR_DECL_BINDER_L,
    single_local_var_decl,
)
from parasyntax.terms import (
    Atomic,
    ListOf,
    NodeKind,
    Prim,
    Term,
    build_list,
    build_option,
    build_pair,
    extract_list,
    extract_option,
    extract_pair,
    leaf,
    leaf_value,
    map_list,
    prim_sort,
)

ELEM = SORTS[0]


def spine_length(term):
    n = 0
    while term.kind.name == "ConsF":
        n, term = n + 1, term.children[1]
    assert term.kind.name == "NilF"
    return n


def test_build_list():
    a, b = leaf_of(ELEM), leaf_of(ELEM)
    nil = build_list(ELEM, [])
    assert nil.kind.name == "NilF"
    assert nil.sort == ListOf(ELEM)
    assert extract_list(nil) == []

    one = build_list(ELEM, [a])
    assert one.kind.name == "ConsF"
    assert one.children[1] == nil
    assert extract_list(build_list(ELEM, [a, b])) == [a, b]


def test_build_list_errors():
    with pytest.raises(SortMismatch):
        build_list(ELEM, [leaf_of(SORTS[1])])
    with pytest.raises(NotAListTerm):
        extract_list(leaf_of(ELEM))


@given(items=leaves())
def test_list_round_trip(items):
    term = build_list(ELEM, items)
    assert spine_length(term) == len(items)
    assert extract_list(term) == items
    assert build_list(ELEM, extract_list(term)) == term


@given(items=leaves())
def test_map_list(items):
    term = build_list(ELEM, items)
    assert map_list(lambda t: t, term) == term
    renamed = map_list(lambda t: Term(NodeKind("Other", (), (), ELEM), (), ()), term)
    assert len(extract_list(renamed)) == len(items)


def test_map_list_remove_init():
    binder = Term(NodeKind("Binder", (Prim.String,), (), VAR_DECL_BINDER_L), ("x",), ())
    init = Term(NodeKind("Init", (), (), Atomic("LocalVarInitL")), (), ())
    attrs = Term(EMPTY_DECL_ATTRS, (), ())
    decls = build_list(
        SINGLE_LOCAL_VAR_DECL_L,
        [single_local_var_decl(attrs, binder, init), single_local_var_decl(attrs, binder, init)],
    )

    def remove_init(single):
        attrs_, binder_, _ = single.children
        return single_local_var_decl(attrs_, binder_, None)

    cleared = extract_list(map_list(remove_init, decls))
    assert [d.children[2].kind.name for d in cleared] == ["NoLocalVarInit"] * 2


def test_map_list_sort_violation():
    term = build_list(ELEM, [leaf_of(ELEM)])
    with pytest.raises(SortMismatch):
        map_list(lambda t: leaf_of(SORTS[1]), term)


def test_pairs_and_options():
    a, b = leaf_of(SORTS[0]), leaf_of(SORTS[1])
    pair = build_pair(a, b)
    assert pair.kind.name == "PairF"
    assert extract_pair(pair) == (a, b)

    assert extract_option(build_option(SORTS[0], a)) == a
    nothing = build_option(SORTS[0], None)
    assert nothing.kind.name == "NothingF"
    assert extract_option(nothing) is None


def test_leaves():
    term = leaf(Prim.Int, 7)
    assert term.sort == prim_sort(Prim.Int)
    assert term.sort == Atomic("#Int")
    assert leaf_value(term) == 7


def test_pair_and_option_errors():
    a = leaf_of(SORTS[0])
    with pytest.raises(NotAContainerTerm) as exc:
        extract_pair(a)
    assert exc.value.container == "a pair"
    with pytest.raises(NotAContainerTerm):
        extract_pair(build_list(SORTS[0], [a, a]))
    with pytest.raises(NotAContainerTerm):
        extract_option(a)
    with pytest.raises(NotAContainerTerm) as exc:
        extract_option(build_pair(a, a))
    assert str(exc.value).startswith("expected an option sort, got ")
    assert issubclass(NotAListTerm, NotAContainerTerm)

import pytest
from hypothesis import given
from strategies import kind_applications, leaf_of, terms

from parasyntax.errors import ArityMismatch, InvalidPath, PayloadMismatch, SortMismatch, UnknownKind
from parasyntax.fragments import (
    ASSIGN,
    ASSIGN_OP_EQUALS,
    BLOCK_ITEM_L,
    GENERIC_SIGNATURE,
    IDENT,
    LHS_L,
    RHS_L,
    block,
    ident,
)
from parasyntax.terms import (
    INT_MAX,
    Atomic,
    NodeKind,
    Prim,
    Signature,
    Term,
    dumps,
    mk_term,
    project,
    replace_subterm,
    subterm,
    walk,
)
from parasyntax.traversal import rewrite, transform_bottom_up

LHS = NodeKind("LhsVar", (Prim.String,), (), LHS_L)
RHS = NodeKind("RhsLit", (Prim.Int,), (), RHS_L)


def assignment():
    return mk_term(
        ASSIGN,
        children=[
            mk_term(LHS, ["x"]),
            mk_term(ASSIGN_OP_EQUALS),
            mk_term(RHS, [1]),
        ],
    )


def test_mk_term():
    op = mk_term(ASSIGN_OP_EQUALS, [], [])
    assert op.sort == Atomic("AssignOpL")
    assert assignment().sort == Atomic("AssignL")


def test_mk_term_sort_mismatch():
    with pytest.raises(SortMismatch) as e:
        mk_term(ASSIGN, [], [ident("x"), mk_term(ASSIGN_OP_EQUALS), mk_term(RHS, [1])])
    assert e.value.position == 0
    assert e.value.expected == LHS_L
    assert e.value.actual == Atomic("IdentL")


def test_mk_term_arity():
    with pytest.raises(ArityMismatch):
        mk_term(ASSIGN, [], [mk_term(ASSIGN_OP_EQUALS)])
    with pytest.raises(ArityMismatch):
        mk_term(IDENT, [], [])
    with pytest.raises(PayloadMismatch):
        mk_term(IDENT, [1])
    with pytest.raises(PayloadMismatch):
        mk_term(RHS, [True])
    with pytest.raises(PayloadMismatch):
        mk_term(RHS, [INT_MAX + 1])


def test_mk_term_signature():
    assert mk_term(IDENT, ["x"], signature=GENERIC_SIGNATURE) == ident("x")
    with pytest.raises(UnknownKind):
        mk_term(RHS, [1], signature=GENERIC_SIGNATURE)


def test_project():
    term = assignment()
    payloads, children = project(term, ASSIGN)
    assert payloads == ()
    assert len(children) == 3
    assert project(ident("x"), ASSIGN) is None


@given(application=kind_applications())
def test_project_fuzz(application):
    kind, payloads, children = application
    assert project(mk_term(kind, payloads, children), kind) == (payloads, children)


@given(term=terms())
def test_equality(term):
    copy = Term(term.kind, term.payloads, term.children)
    assert term == copy
    assert copy == term
    assert hash(term) == hash(copy)


def test_kind_equality_is_structural():
    a = NodeKind("K", (), (), Atomic("S"))
    b = NodeKind("K", (), (), Atomic("T"))
    assert a != b
    assert mk_term(a) != mk_term(b)


def test_paths():
    term = assignment()
    assert subterm(term, (0,)) == mk_term(LHS, ["x"])
    assert [path for path, _ in walk(term)] == [(), (0,), (1,), (2,)]

    replaced = replace_subterm(term, (2,), mk_term(RHS, [2]))
    assert subterm(replaced, (2,)).payloads == (2,)
    assert subterm(term, (2,)).payloads == (1,)

    with pytest.raises(InvalidPath):
        subterm(term, (3,))
    with pytest.raises(SortMismatch):
        replace_subterm(term, (2,), mk_term(LHS, ["y"]))


def test_dumps():
    term = assignment()
    assert dumps(term) == '(Assign (LhsVar "x") (AssignOpEquals) (RhsLit 1))'
    flag = NodeKind("Flag", (Prim.Bool,), (), Atomic("S"))
    assert dumps(mk_term(flag, [True])) == "(Flag true)"
    assert str(leaf_of(Atomic("S"))) == "(LeafS)"


def test_signature():
    a = NodeKind("A", (), (Atomic("X"),), Atomic("S"))
    b = NodeKind("B", (), (), Atomic("S"))
    signature = Signature.of("Sig", [a, b])
    assert signature.sorts == (Atomic("S"),)
    assert signature.frontier == (Atomic("X"),)
    assert "A" in signature
    assert a in signature
    assert NodeKind("A", (), (), Atomic("S")) not in signature
    assert signature["B"] == b
    assert len(signature) == 2


def test_long_list_spines():
    items = [leaf_of(BLOCK_ITEM_L) for _ in range(5000)]
    first, second = block(items), block(list(items))
    assert first == second
    assert hash(first) == hash(second)
    assert len({first, second}) == 1
    assert first != block(items[:-1])
    assert dumps(first).count("(ConsF") == 5000

    last = (0,) + (1,) * 4999 + (0,)
    other = Term(NodeKind("Other", (), (), BLOCK_ITEM_L), (), ())
    changed = replace_subterm(first, last, other)
    assert subterm(changed, last) == other
    assert changed != first
    assert transform_bottom_up(rewrite(lambda t: None), first) is first

import pytest
from hypothesis import HealthCheck, given, settings
from strategies import schema_values

from parasyntax.errors import ForeignKind, InvalidSchema, NonConformingValue
from parasyntax.fragments import ident
from parasyntax.schema import (
    GenericValue,
    dump_language,
    from_modular,
    modularize_schema,
    parse_schema,
    to_modular,
)
from parasyntax.terms import Atomic, ListOf, Prim, Term, extract_list, walk

ARITH_DUMP = """\
schema Fig root Arith
sort Arith = Fig.ArithL
sort Atom = Fig.AtomL
sort Lit = Fig.LitL
kind Fig.Add : [Fig.AtomL, Fig.AtomL] -> Fig.ArithL
kind Fig.Var : String [] -> Fig.AtomL
kind Fig.Const : [Fig.LitL] -> Fig.AtomL
kind Fig.Lit : Int [] -> Fig.LitL
"""


@pytest.fixture
def arith(arith_schema):
    return modularize_schema(parse_schema(arith_schema, "Fig"))


def test_modularize(arith):
    signature = arith.signature
    assert len(signature) == 4
    add = signature["Fig.Add"]
    assert add.child_sorts == (Atomic("Fig.AtomL"), Atomic("Fig.AtomL"))
    assert add.produced == Atomic("Fig.ArithL")
    var = signature["Fig.Var"]
    assert var.payloads == (Prim.String,)
    assert var.child_sorts == ()
    assert signature["Fig.Const"].child_sorts == (Atomic("Fig.LitL"),)
    assert signature["Fig.Lit"].payloads == (Prim.Int,)
    assert arith.fragment_of["Atom"] == {signature["Fig.Var"], signature["Fig.Const"]}


def test_dump(arith):
    assert dump_language(arith) == ARITH_DUMP


def test_nullary():
    lang = modularize_schema(parse_schema("type T = U", "S"))
    (kind,) = lang.signature
    assert kind.name == "S.U"
    assert kind.child_sorts == ()
    assert kind.produced == Atomic("S.TL")


def test_invalid_schema():
    with pytest.raises(InvalidSchema):
        modularize_schema(parse_schema("type T = A Undefined", "S"))


def test_to_modular(arith):
    value = GenericValue(
        "Add", (GenericValue("Var", ("x",)), GenericValue("Const", (GenericValue("Lit", (1,)),)))
    )
    term = to_modular(arith, value)
    assert term.kind.name == "Fig.Add"
    assert [c.kind.name for c in term.children] == ["Fig.Var", "Fig.Const"]
    assert term.children[0].payloads == ("x",)
    assert from_modular(arith, term) == value

    lit = to_modular(arith, GenericValue("Lit", (7,)), "Lit")
    assert lit.payloads == (7,)
    assert lit.sort == Atomic("Fig.LitL")


def test_to_modular_lists():
    lang = modularize_schema(parse_schema("type T = A [Int] | B [T]", "S"))
    empty = to_modular(lang, GenericValue("A", ((),)))
    assert empty.children[0].kind.name == "NilF"
    assert empty.children[0].sort == ListOf(Atomic("#Int"))
    nested = to_modular(lang, GenericValue("B", ((GenericValue("A", ((1, 2),)),),)))
    (inner,) = extract_list(nested.children[0])
    assert [x.payloads for x in extract_list(inner.children[0])] == [(1,), (2,)]


@pytest.mark.parametrize(
    "value",
    [
        GenericValue("Lit", (7,)),
        GenericValue("Add", (GenericValue("Var", ("x",)),)),
        GenericValue("Var", (1,)),
        GenericValue("Nope"),
        "Add",
    ],
)
def test_non_conforming(arith, value):
    with pytest.raises(NonConformingValue):
        to_modular(arith, value)


def test_foreign_kind(arith):
    with pytest.raises(ForeignKind):
        from_modular(arith, ident("x"))


@settings(max_examples=200, deadline=None, suppress_health_check=list(HealthCheck))
@given(pair=schema_values())
def test_round_trip(pair):
    schema, value = pair
    lang = modularize_schema(schema)
    assert len(lang.signature) == sum(1 for _ in schema.constructors())
    term = to_modular(lang, value)
    assert from_modular(lang, term) == value
    assert to_modular(lang, from_modular(lang, term)) == term
    for _, node in walk(term):
        assert isinstance(node, Term)
        assert node.kind.builtin or node.kind in lang.signature
    assert len(set(lang.sort_of.values())) == len(lang.sort_of)

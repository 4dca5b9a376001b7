import pytest

from parasyntax.errors import SchemaSyntaxError
from parasyntax.schema import ListT, Named, PairT, PrimT, TypeApp, load_schema, parse_schema
from parasyntax.terms import Prim


def test_parse_schema(arith_schema):
    schema = parse_schema(arith_schema, "Fig")
    assert schema.name == "Fig"
    assert schema.root == "Arith"
    assert [t.name for t in schema.types] == ["Arith", "Atom", "Lit"]
    assert schema.constructor("Add").args == (Named("Atom"), Named("Atom"))
    assert schema.constructor("Var").args == (PrimT(Prim.String),)
    assert schema.owner["Const"] == "Atom"


def test_parse_containers():
    schema = parse_schema(
        """
        type T = A [Int] (T,Bool)
          | B (List T) (Pair Int String)
          | C
        root T
        """,
        "S",
    )
    a, b, c = schema.type_defs["T"]
    assert a.args == (ListT(PrimT(Prim.Int)), PairT(Named("T"), PrimT(Prim.Bool)))
    assert b.args == (
        TypeApp("List", (Named("T"),)),
        TypeApp("Pair", (PrimT(Prim.Int), PrimT(Prim.String))),
    )
    assert c.args == ()


def test_parse_root():
    schema = parse_schema("type A = A B\ntype B = B\nroot B\n", "S")
    assert schema.root == "B"


@pytest.mark.parametrize(
    "text",
    [
        "type T = A $",
        "type = A",
        "type T = A [Int",
    ],
)
def test_parse_errors(text):
    with pytest.raises(SchemaSyntaxError) as e:
        parse_schema(text, "S")
    assert e.value.line == 1


def test_load_schema(tmp_path, arith_schema):
    path = tmp_path / "arith.schema"
    path.write_text(arith_schema)
    assert load_schema(path).name == "arith"
    assert load_schema(path, "Fig").name == "Fig"

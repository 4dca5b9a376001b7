import pytest
from hypothesis import given, settings
from strategies import seeds

from parasyntax.errors import ParseError, UnrepresentableTerm
from parasyntax.fragments import (
    ASSIGN,
    ASSIGN_L,
    BLOCK,
    EMPTY_COMMON_ATTRS,
    MULTI_LOCAL_VAR_DECL,
    NO_LOCAL_VAR_INIT,
    block_items,
    ident_names,
)
from parasyntax.harness import GenConfig, gen_ast
from parasyntax.languages import Language, get_language
from parasyntax.schema import GenericValue as V
from parasyntax.terms import Term, extract_list, replace_subterm, walk

PROGRAM = """\
int main() {
  int x = 1;
  int[] xs = {1, 2, 3};
  if (x) {
    x = 2;
  } else
    x = 3;
  while (x < 10)
    x = x * 2;
  for (x = 0; x < 3; x = x + 1) {
    xs[x] = -x;
  }
  return xs[1] + (x && !false);
}
"""


@pytest.fixture
def minic():
    return get_language("minic")


def body(term):
    return next(node for _, node in walk(term) if node.kind == BLOCK)


def test_pretty_round_trip(minic):
    assert minic.pretty(minic.parse(PROGRAM)) == PROGRAM
    assert minic.render(minic.parse_term(PROGRAM)) == PROGRAM


def test_parse_values(minic):
    ast = minic.parse("bool g(int a) { return a == 1; }")
    (fundef,) = ast.args[0]
    ret, name, params, _ = fundef.args
    assert ret == V("TBool")
    assert name == V("Ident", ("g",))
    assert params == (V("Param", (V("TInt"), V("Ident", ("a",)))),)


@pytest.mark.parametrize(
    "text",
    [
        "int main() { if (s) int r = 1; }",
        "int main() { return 1 }",
        "int main() { 1 = x; }",
        "int main() { return 9223372036854775808; }",
        "int main() { x = {1}; }",
        "main() { }",
        "int main() { return @; }",
    ],
)
def test_parse_errors(minic, text):
    with pytest.raises(ParseError):
        minic.parse(text)


def test_parse_error_position(minic):
    with pytest.raises(ParseError) as exc:
        minic.parse("int main() {\n  return 1\n}")
    assert (exc.value.line, exc.value.col) == (3, 1)
    assert exc.value.expected == "';'"


def test_assignment_statement(minic):
    (item,) = block_items(body(minic.parse_term("int main() { x = 1; }")))
    assert item.kind == minic.kind("BlockItemIsBlockItem")
    stmt_item = item.children[0]
    assert stmt_item.kind == minic.kind("StmtItem")
    expr_stmt = stmt_item.children[0]
    assert expr_stmt.kind == minic.kind("ExprStmt")
    assert expr_stmt.children[0].kind == minic.kind("AssignIsExpr")
    assign = minic.injections.proj(item, ASSIGN_L)
    assert assign.kind == ASSIGN
    assert ident_names(assign) == ["x"]


def test_declarations(minic):
    term = minic.parse_term("int main() { int a = 1, b; return a; }")
    (decl,) = [node for _, node in walk(term) if node.kind == MULTI_LOCAL_VAR_DECL]
    attrs, singles = decl.children
    assert attrs.kind == minic.kind("TypeIsCommonAttrs")
    assert attrs.children[0] == minic.node("TInt")
    a, b = extract_list(singles)
    assert ident_names(a) == ["a"]
    assert b.children[2].kind == NO_LOCAL_VAR_INIT


def test_empty_body(minic):
    term = minic.parse_term("int main() { }")
    assert block_items(body(term)) == []
    assert minic.render(term) == "int main() {\n}\n"


def test_signature(minic):
    signature = minic.signature
    assert "Assign" in signature
    assert "MiniC.Assign" not in signature
    assert "MiniC.Decl" not in signature
    assert "MiniC.Ident" not in signature
    assert "MiniC.IdentIsBinder" in signature
    assert minic.kind("Assign") == minic.modular.signature["MiniC.Assign"]
    assert Language.from_path("prog.mc") is Language.MiniC


def test_unrepresentable(minic):
    term = minic.parse_term("int main() { int a = 1; return a; }")
    (decl,) = [node for _, node in walk(term) if node.kind == MULTI_LOCAL_VAR_DECL]
    untyped = Term(decl.kind, (), (Term(EMPTY_COMMON_ATTRS, (), ()), decl.children[1]))
    path = next(p for p, node in walk(term) if node == decl)
    with pytest.raises(UnrepresentableTerm):
        minic.recompose(replace_subterm(term, path, untyped))


@given(seeds())
@settings(max_examples=25, deadline=None)
def test_decompose_recompose_fuzz(seed):
    minic = get_language("minic")
    ast = gen_ast(Language.MiniC, GenConfig(seed=seed))
    term = minic.decompose(ast)
    assert minic.recompose(term) == ast
    text = minic.pretty(ast)
    assert minic.render(minic.parse_term(text)) == text

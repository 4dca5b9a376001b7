import pytest
from hypothesis import given, settings
from strategies import seeds

from parasyntax.errors import ParseError, UnrepresentableTerm
from parasyntax.fragments import (
    ASSIGN,
    IDENT_L,
    MULTI_LOCAL_VAR_DECL,
    NO_LOCAL_VAR_INIT,
    VAR_DECL_BINDER_L,
    ident_names,
)
from parasyntax.harness import GenConfig, gen_ast
from parasyntax.languages import Language, get_language
from parasyntax.terms import build_list, extract_list, replace_subterm, walk

PROGRAM = """\
function main(n)
  local x, y = 1, 2
  local t = {1, 2, 3}
  x, y = y, x
  t[1] = -x
  if x < y then
    print(x)
  elseif not (x == y) then
    print(y)
  else
    return;
  end
  for i = 1, n, 2 do
    break
  end
  while x > 0 do
    x = x - 1
  end
  do
    local z
  end
  return t[1] + x // 2
end
"""


@pytest.fixture
def minilua():
    return get_language("minilua")


def locals_of(term):
    return [(p, n) for p, n in walk(term) if n.kind == MULTI_LOCAL_VAR_DECL]


def test_pretty_round_trip(minilua):
    assert minilua.pretty(minilua.parse(PROGRAM)) == PROGRAM
    assert minilua.render(minilua.parse_term(PROGRAM)) == PROGRAM


def test_statements_need_no_separator(minilua):
    text = "function main() local x = 1 x = x + 1 return x end"
    assert minilua.pretty(minilua.parse(text)) == (
        "function main()\n  local x = 1\n  x = x + 1\n  return x\nend\n"
    )


@pytest.mark.parametrize(
    "text",
    [
        "function main() x + 1 end",
        "function main() 1 = x end",
        "function main() local = 1 end",
        "function main() return 1",
        "function main() f(1) = 2 end",
    ],
)
def test_parse_errors(minilua, text):
    with pytest.raises(ParseError):
        minilua.parse(text)


def test_parallel_declaration(minilua):
    term = minilua.parse_term("function main() local a, b = 1, 2 local c end")
    (_, first), (_, second) = locals_of(term)
    (single,) = extract_list(first.children[1])
    _, binder, opt = single.children
    assert binder.kind == minilua.kind("IdentsIsBinder")
    assert ident_names(binder) == ["a", "b"]
    assert len(extract_list(minilua.unwrap("ExprsIsLocalVarInit", opt.children[0]))) == 2
    (single,) = extract_list(second.children[1])
    assert single.children[2].kind == NO_LOCAL_VAR_INIT


def test_parallel_assignment(minilua):
    term = minilua.parse_term("function main() x, y = y, x end")
    (assign,) = [n for _, n in walk(term) if n.kind == ASSIGN]
    lhs, _, rhs = assign.children
    assert len(extract_list(minilua.unwrap("VarsIsLhs", lhs))) == 2
    assert len(extract_list(minilua.unwrap("ExprsIsRhs", rhs))) == 2


def test_no_single_binder(minilua):
    assert not minilua.injections.has(IDENT_L, VAR_DECL_BINDER_L)
    assert minilua.injections.has(IDENT_L, minilua.kind("VarsIsLhs").produced)


def test_empty_binder_is_unrepresentable(minilua):
    term = minilua.parse_term("function main() local a = 1 end")
    ((path, decl),) = locals_of(term)
    (single,) = extract_list(decl.children[1])
    empty = minilua.wrap("IdentsIsBinder", build_list(IDENT_L, []))
    single = single.with_child(1, empty)
    broken = decl.with_child(1, build_list(single.sort, [single]))
    with pytest.raises(UnrepresentableTerm):
        minilua.recompose(replace_subterm(term, path, broken))


def test_signature(minilua):
    assert "MiniLua.Local" not in minilua.signature
    assert "MiniLua.IdentsIsBinder" in minilua.signature
    assert Language.from_path("x.mlua") is Language.MiniLua


@given(seeds())
@settings(max_examples=25, deadline=None)
def test_decompose_recompose_fuzz(seed):
    minilua = get_language("minilua")
    ast = gen_ast(Language.MiniLua, GenConfig(seed=seed))
    assert minilua.recompose(minilua.decompose(ast)) == ast
    text = minilua.pretty(ast)
    assert minilua.render(minilua.parse_term(text)) == text

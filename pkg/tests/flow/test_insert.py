import pytest

from parasyntax.errors import InvalidPath
from parasyntax.flow import (
    BeforeLoopCondition,
    BeforeStmt,
    BlockEntry,
    insert_at,
    items_path,
    iter_statements,
    statement_at,
)
from parasyntax.fragments import BLOCK_ITEM_L, StmtRole
from parasyntax.languages import get_language
from parasyntax.terms import walk


def find(lang, term, role):
    """Block item or statement slot of the first statement with `role`."""
    for path, node in walk(term):
        if node.sort in (BLOCK_ITEM_L, lang.stmt_sort):
            found = statement_at(lang, term, path)
            if found is not None and found[2].role is role:
                return path
    raise LookupError(role)


def test_before_statement():
    lang = get_language("minic")
    term = lang.parse_term("int main() { int x = 1; return x; }")
    path = find(lang, term, StmtRole.RETURN)
    out = insert_at(term, BeforeStmt(path), [lang.ops.coverage_marker(0)], lang)
    assert lang.render(out) == "int main() {\n  int x = 1;\n  cov[0] = true;\n  return x;\n}\n"


def test_block_entry():
    lang = get_language("minilua")
    term = lang.parse_term("function main() return 1 end")
    markers = [lang.ops.coverage_marker(0), lang.ops.coverage_marker(1)]
    out = insert_at(term, BlockEntry((0, 0, 2)), markers, lang)
    assert lang.render(out) == (
        "function main()\n  TC.cov[0] = true\n  TC.cov[1] = true\n  return 1\nend\n"
    )


def test_bare_statement_slot():
    lang = get_language("minijs")
    term = lang.parse_term("function main(c) { if (c) c = 1; }")
    path = find(lang, term, StmtRole.SIMPLE)
    out = insert_at(term, BeforeStmt(path), [lang.ops.coverage_marker(3)], lang)
    assert lang.render(out) == (
        "function main(c) {\n"
        "  if (c) {\n"
        "    TC.cov[3] = true;\n"
        "    c = 1;\n"
        "  }\n"
        "}\n"
    )


def test_before_loop_condition(continue_program):
    lang = get_language("minijs")
    term = lang.parse_term(continue_program)
    path = find(lang, term, StmtRole.WHILE)
    out = insert_at(term, BeforeLoopCondition(path), [lang.ops.coverage_marker(7)], lang)
    assert lang.render(out).count("TC.cov[7] = true;") == 3
    assert lang.render(out) == (
        "function main() {\n"
        "  var c = 0;\n"
        "  TC.cov[7] = true;\n"
        "  while (c < 3) {\n"
        "    c = c + 1;\n"
        "    if (c == 1) {\n"
        "      TC.cov[7] = true;\n"
        "      continue;\n"
        "    }\n"
        "    print(c);\n"
        "    TC.cov[7] = true;\n"
        "  }\n"
        "  return c;\n"
        "}\n"
    )


def test_before_loop_condition_without_continue():
    lang = get_language("minilua")
    term = lang.parse_term("function main() local c = 0 while c < 3 do c = c + 1 end end")
    path = find(lang, term, StmtRole.WHILE)
    out = insert_at(term, BeforeLoopCondition(path), [lang.ops.coverage_marker(1)], lang)
    assert lang.render(out).count("TC.cov[1] = true") == 2


def test_for_loop_is_lowered():
    lang = get_language("minijs")
    term = lang.parse_term(
        "function main() { var i; for (i = 0; i < 2; i = i + 1) print(i); return i; }"
    )
    path = find(lang, term, StmtRole.FOR)
    out = insert_at(term, BeforeLoopCondition(path), [lang.ops.coverage_marker(0)], lang)
    assert lang.render(out) == (
        "function main() {\n"
        "  var i;\n"
        "  i = 0;\n"
        "  TC.cov[0] = true;\n"
        "  for (; i < 2; ) {\n"
        "    print(i);\n"
        "    i = i + 1;\n"
        "    TC.cov[0] = true;\n"
        "  }\n"
        "  return i;\n"
        "}\n"
    )


def test_nested_loops_keep_their_continues():
    lang = get_language("minijs")
    term = lang.parse_term(
        "function main() { while (1) { while (0) continue; break; } return 0; }"
    )
    path = find(lang, term, StmtRole.WHILE)
    out = insert_at(term, BeforeLoopCondition(path), [lang.ops.coverage_marker(2)], lang)
    # before the loop and at the end of its body; the inner continue is not ours
    assert lang.render(out).count("TC.cov[2] = true;") == 2


def test_invalid_points():
    lang = get_language("minic")
    term = lang.parse_term("int main() { int x = 1; return x; }")
    ret = find(lang, term, StmtRole.RETURN)
    with pytest.raises(InvalidPath):
        insert_at(term, BeforeLoopCondition(ret), [lang.ops.coverage_marker(0)], lang)
    with pytest.raises(InvalidPath):
        insert_at(term, BlockEntry(ret), [lang.ops.coverage_marker(0)], lang)
    with pytest.raises(InvalidPath):
        insert_at(term, BeforeStmt((0,)), [lang.ops.coverage_marker(0)], lang)


def test_iter_statements(count_program):
    lang = get_language("minilua")
    term = lang.parse_term(count_program)
    body = (0, 0, 2)
    assert items_path(lang, term, body) == (0, 0, 2, 0, 0)
    roles = [shape.role for _, _, _, shape in iter_statements(lang, term, body)]
    assert roles == [
        StmtRole.SIMPLE,
        StmtRole.NUMERIC_FOR,
        StmtRole.IF,
        StmtRole.SIMPLE,
        StmtRole.BREAK,
        StmtRole.SIMPLE,
        StmtRole.RETURN,
    ]
    shallow = [shape.role for _, _, _, shape in iter_statements(lang, term, body, False)]
    assert shallow == [StmtRole.SIMPLE, StmtRole.NUMERIC_FOR, StmtRole.RETURN]

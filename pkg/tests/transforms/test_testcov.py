from parasyntax import transforms
from parasyntax.harness import Verdict, check_coverage, check_program, interpret
from parasyntax.languages import Language, get_language
from parasyntax.transforms import Pass

MAIN = """
function main()
  return countF()
end
"""


def test_count_golden(count_program, counted_program):
    lua = get_language("minilua")
    term, blocks = transforms.testcov(lua.parse_term(count_program), lua)
    assert blocks == 5
    assert lua.render(term) == lua.pretty(lua.parse(counted_program))


def test_marks_follow_the_cfg(count_program):
    lua = get_language("minilua")
    original = lua.parse_term(count_program + MAIN)
    instrumented, blocks = transforms.testcov(original, lua)
    assert blocks == 6
    trace = interpret(Language.MiniLua, lua.recompose(instrumented))
    # f(1) is an external call, its integer result is truthy
    assert trace.marks == [5, 0, 1, 2, 4]
    assert check_coverage(original, lua, trace.marks) == []


def test_inconsistent_marks(count_program):
    lua = get_language("minilua")
    term = lua.parse_term(count_program)
    assert check_coverage(term, lua, [0, 1, 2, 4]) == []
    assert check_coverage(term, lua, [2]) == [2]
    assert check_coverage(term, lua, [0, 3, 4]) == [3]
    assert check_coverage(term, lua, [99, 0, 1, 3, 4]) == [99]


def test_block_statement_marker():
    js = get_language("minijs")
    term = js.parse_term("function main() { var x = 1; if (x) { x = 2; } return x; }")
    out, blocks = transforms.testcov(term, js)
    assert blocks == 3
    assert js.render(out) == (
        "function main() {\n"
        "  TC.cov[0] = true;\n"
        "  var x = 1;\n"
        "  if (x) {\n"
        "    TC.cov[1] = true;\n"
        "    x = 2;\n"
        "  }\n"
        "  TC.cov[2] = true;\n"
        "  return x;\n"
        "}\n"
    )


def test_minic_markers(hoist_program):
    minic = get_language("minic")
    out, blocks = transforms.testcov(minic.parse_term(hoist_program), minic)
    text = minic.render(out)
    assert blocks == 4
    assert all(f"cov[{i}] = true;" in text for i in range(blocks))
    trace = interpret(Language.MiniC, minic.parse(text))
    assert trace.marks == [3, 0, 1]
    assert trace.erase_markers() == interpret(Language.MiniC, minic.parse(hoist_program))


def test_behaviour_is_preserved(continue_program):
    outcome = check_program(Language.MiniJS, Pass.Testcov, 0, continue_program, erase_markers=True)
    assert outcome.verdict is Verdict.Equal
    outcome = check_program(Language.MiniJS, Pass.Testcov, 0, continue_program)
    assert outcome.verdict is Verdict.TraceDiverged
    assert outcome.step == 0


def test_pass_result(count_program):
    lua = get_language("minilua")
    result = Pass.Testcov.run(lua.parse_term(count_program), lua)
    assert result.blocks == 5

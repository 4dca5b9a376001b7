from pathlib import Path

from parasyntax.commands import main

PROGRAM = "function main() { var x = 1 + 2 * 3; return x; }\n"


def test_transform(runner):
    Path("p.mjs").write_text(PROGRAM)
    result = runner.invoke(main, ["transform", "--lang", "minijs", "--pass", "tac", "p.mjs"])
    assert "__t0 = 2 * 3;" in result.output
    assert "var x = 1 + __t0;" in result.output


def test_transform_out(runner):
    Path("p.mjs").write_text(PROGRAM)
    runner.invoke(
        main, ["transform", "--lang", "minijs", "--pass", "hoist", "--out", "q.mjs", "p.mjs"]
    )
    assert Path("q.mjs").read_text() == (
        "function main() {\n  var x;\n  x = 1 + 2 * 3;\n  return x;\n}\n"
    )


def test_transform_testcov(runner):
    Path("p.mlua").write_text("function main() return 1 end\n")
    result = runner.invoke(
        main, ["transform", "--lang", "minilua", "--pass", "testcov", "p.mlua"]
    )
    assert "Blocks: 1" in result.output
    assert "TC.cov[0] = true" in result.output


def test_transform_errors(runner):
    Path("p.mc").write_text("int main() { return 1 + 2 * 3; }\n")
    result = runner.invoke(
        main, ["transform", "--lang", "minic", "--pass", "tac", "p.mc"], exit_code=2
    )
    assert "RequirementMissing" in result.output
    Path("bad.mc").write_text("int main( {\n")
    result = runner.invoke(
        main, ["transform", "--lang", "minic", "--pass", "ident", "bad.mc"], exit_code=2
    )
    assert "ParseError" in result.output


def test_transform_unknown_pass(runner):
    Path("p.mc").write_text("int main() { return 0; }\n")
    runner.invoke(main, ["transform", "--lang", "minic", "--pass", "nope", "p.mc"], exit_code=2)


def test_transform_unreadable_files(runner):
    result = runner.invoke(
        main, ["transform", "--lang", "minijs", "--pass", "ident", "missing.mjs"], exit_code=2
    )
    assert "SourceError: missing.mjs" in result.output
    Path("latin1.mjs").write_bytes(b"function main() { return 1; } // caf\xff\n")
    result = runner.invoke(
        main, ["transform", "--lang", "minijs", "--pass", "ident", "latin1.mjs"], exit_code=2
    )
    assert "not UTF-8 text" in result.output
    assert "Traceback" not in result.output


def test_transform_non_ascii(runner):
    Path("p.mjs").write_bytes("// caf\u00e9\nfunction main() { return 1; }\n".encode("utf-8"))
    result = runner.invoke(main, ["transform", "--lang", "minijs", "--pass", "ident", "p.mjs"])
    assert "return 1;" in result.output

from pathlib import Path

from parasyntax.commands import main


def test_roundtrip(runner, hoist_program):
    Path("p.mc").write_text(hoist_program)
    result = runner.invoke(main, ["roundtrip", "--lang", "minic", "p.mc"])
    assert "Round trip: ok" in result.output


def test_roundtrip_lua(runner, count_program):
    Path("p.mlua").write_text(count_program)
    runner.invoke(main, ["roundtrip", "--lang", "minilua", "p.mlua"])


def test_roundtrip_parse_error(runner):
    Path("p.mjs").write_text("function main() { return; ")
    result = runner.invoke(main, ["roundtrip", "--lang", "minijs", "p.mjs"], exit_code=2)
    assert "ParseError" in result.output

from pathlib import Path

from parasyntax.commands import main


def test_modularize(runner, arith_schema):
    Path("arith.schema").write_text(arith_schema)
    result = runner.invoke(main, ["modularize", "arith.schema"])
    assert "schema arith root Arith" in result.output
    assert "sort Atom = arith.AtomL" in result.output
    assert "kind arith.Add" in result.output


def test_modularize_name(runner, arith_schema):
    Path("arith.schema").write_text(arith_schema)
    result = runner.invoke(main, ["modularize", "--name", "Fig", "arith.schema"])
    assert "schema Fig root Arith" in result.output


def test_modularize_invalid(runner):
    Path("bad.schema").write_text("type T = A Undefined\n")
    result = runner.invoke(main, ["modularize", "bad.schema"], exit_code=2)
    assert "InvalidSchema" in result.output

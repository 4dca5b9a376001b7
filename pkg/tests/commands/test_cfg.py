from pathlib import Path

from parasyntax.commands import main


def test_cfg_dot(runner, continue_program):
    Path("p.mjs").write_text(continue_program)
    result = runner.invoke(main, ["cfg", "--lang", "minijs", "p.mjs"])
    assert "digraph cfg {" in result.output
    assert " -> " in result.output


def test_cfg_blocks(runner, count_program):
    Path("p.mlua").write_text(count_program)
    result = runner.invoke(main, ["cfg", "--lang", "minilua", "--blocks", "p.mlua"])
    assert "block 0: " in result.output
    assert "block 4: " in result.output
    assert "block 5: " not in result.output


def test_cfg_usage(runner):
    Path("p.mjs").write_text("function main() { return 1; }")
    runner.invoke(main, ["cfg", "--lang", "minijs", "--dot", "--blocks", "p.mjs"], exit_code=2)


def test_cfg_unstructured(runner):
    Path("p.mjs").write_text("function main() { break; }")
    result = runner.invoke(main, ["cfg", "--lang", "minijs", "p.mjs"], exit_code=2)
    assert "UnstructuredConstruct" in result.output

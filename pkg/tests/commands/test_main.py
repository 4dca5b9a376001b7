from pathlib import Path

from parasyntax.commands import cli, main


def test_help(runner):
    result = runner.invoke(main, ["--help"])
    for command in ["cfg", "difftest", "inspect", "modularize", "roundtrip", "transform"]:
        assert command in result.output


def test_exit_status(runner):
    Path("ok.mjs").write_text("function main() { return 1; }\n")
    Path("bad.mjs").write_text("function main( {\n")
    Path("corpus").mkdir()
    Path("corpus/0.mjs").write_text("function main() { print(1); }\n")
    assert cli(["roundtrip", "--lang", "minijs", "ok.mjs"]) == 0
    assert cli(["roundtrip", "--lang", "nope", "ok.mjs"]) == 1
    assert cli(["inspect"]) == 1
    assert cli(["roundtrip", "--lang", "minijs", "bad.mjs"]) == 2
    assert cli(["roundtrip", "--lang", "minijs", "missing.mjs"]) == 2
    assert cli(["modularize", "missing.schema"]) == 2
    assert cli(["difftest", "--lang", "minijs", "--pass", "testcov", "--corpus", "corpus"]) == 3
    assert cli(["--debug", "inspect", "--signature", "minilua"]) == 0

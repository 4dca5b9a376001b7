import pytest

from parasyntax.errors import SourceError
from parasyntax.io import CorpusWriter, read_corpus, read_source, write_source
from parasyntax.languages import Language


def test_write_read(tmpfile):
    write_source("function main() return 1 end\n", tmpfile)
    assert read_source(tmpfile) == "function main() return 1 end\n"


def test_write_stdout(capsys):
    write_source("int main() { return 0; }\n")
    assert capsys.readouterr().out == "int main() { return 0; }\n"


def test_corpus(tmp_path):
    programs = ["function main() { return 1; }\n", "function main() { return 2; }\n"]
    writer = CorpusWriter(tmp_path / "corpus", "minijs")
    assert writer.write_all(programs) == 2
    assert writer.path(1).name == "00001.mjs"
    assert read_corpus(tmp_path / "corpus", Language.MiniJS) == programs


def test_corpus_filters_extension(tmp_path):
    CorpusWriter(tmp_path, Language.MiniLua).write_all(["function main() end\n"])
    (tmp_path / "notes.txt").write_text("not a program")
    assert read_corpus(tmp_path, Language.MiniLua) == ["function main() end\n"]
    assert read_corpus(tmp_path, Language.MiniC) == []


def test_empty_corpus(tmp_path):
    assert CorpusWriter(tmp_path / "empty", Language.MiniC).write_all([]) == 0
    assert (tmp_path / "empty").is_dir()
    assert read_corpus(tmp_path / "empty", Language.MiniC) == []


def test_read_errors(tmp_path):
    with pytest.raises(SourceError) as exc:
        read_source(tmp_path / "missing.mc")
    assert exc.value.file == tmp_path / "missing.mc"
    bad = tmp_path / "bad.mc"
    bad.write_bytes(b"int main() { return 0; }\xff\n")
    with pytest.raises(SourceError) as exc:
        read_source(bad)
    assert exc.value.reason == "not UTF-8 text, byte 24 cannot be decoded"
    with pytest.raises(SourceError):
        read_corpus(tmp_path, Language.MiniC)


def test_utf8_round_trip(tmpfile):
    write_source('function main() print("日本") end\n', tmpfile)
    assert tmpfile.read_bytes().decode("utf-8") == 'function main() print("日本") end\n'
    assert read_source(tmpfile) == 'function main() print("日本") end\n'

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Union

from .errors import SourceError
from .languages import Language

__all__ = ["CorpusWriter", "read_corpus", "read_source", "write_source"]

logger = logging.getLogger(__name__)


def read_source(file: Union[str, Path]) -> str:
    """The UTF-8 text of `file`; a file that cannot be read raises :class:`SourceError`."""
    try:
        return Path(file).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SourceError.from_error(file, e) from e


def write_source(text: str, file: Optional[Union[str, Path]] = None):
    """Write `text` to `file`, or to the standard output when `file` is absent."""
    if file is None:
        print(text, end="")
        return
    try:
        Path(file).write_text(text, encoding="utf-8")
    except OSError as e:
        raise SourceError.from_error(file, e) from e


def read_corpus(directory: Union[str, Path], language: Language) -> List[str]:
    """
    The programs of `language` in `directory`, ordered by file name.

    .. code-block:: python

        corpus = read_corpus("corpus/", Language.MiniC)  # all the *.mc files
    """
    extension = Language(language).definition.extension
    files = sorted(Path(directory).glob(f"*{extension}"))
    logger.debug("read %d programs from %s", len(files), directory)
    return [read_source(file) for file in files]


@dataclass
class CorpusWriter:
    """
    Save programs as numbered source files, readable with :func:`read_corpus`.

    .. code-block:: python

        from parasyntax.io import CorpusWriter
        CorpusWriter("corpus/", Language.MiniLua).write_all(programs)
    """

    directory: Path
    """Output directory, created if needed."""

    language: Language

    def __post_init__(self):
        self.directory = Path(self.directory)
        self.language = Language(self.language)

    def path(self, index: int) -> Path:
        return self.directory / f"{index:05d}{self.language.definition.extension}"

    def write_all(self, programs: Iterable[str]) -> int:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise SourceError.from_error(self.directory, e) from e
        count = 0
        for index, text in enumerate(programs):
            write_source(text, self.path(index))
            count += 1
        return count

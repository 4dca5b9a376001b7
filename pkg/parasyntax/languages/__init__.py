from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Union

from .base import *
from .minic import MiniC
from .minijs import MiniJS
from .minilua import MiniLua

__all__ = ["Language", "LanguageDef", "get_language", "MiniC", "MiniJS", "MiniLua"]


class Language(Enum):
    MiniC = "minic"
    MiniJS = "minijs"
    MiniLua = "minilua"

    @property
    def definition(self) -> LanguageDef:
        return get_language(self)

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> "Language":
        suffix = Path(path).suffix
        for language in cls:
            if language.definition.extension == suffix:
                return language
        raise ValueError(f"no language uses the extension {suffix!r}")


_DEFINITIONS = {
    Language.MiniC: MiniC,
    Language.MiniJS: MiniJS,
    Language.MiniLua: MiniLua,
}


def get_language(language: Union[Language, str]) -> LanguageDef:
    """The shared definition of `language`, given as a member or its value."""
    return _definition(Language(language))


@lru_cache(maxsize=None)
def _definition(language: Language) -> LanguageDef:
    return _DEFINITIONS[language]()

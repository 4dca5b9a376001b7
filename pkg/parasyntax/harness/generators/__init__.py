from typing import Dict, Iterator, Type

from ...languages import Language
from ...schema import GenericValue
from .base import *
from .config import *
from .curly import *
from .minic import *
from .minijs import *
from .minilua import *

__all__ = [
    "GenConfig",
    "MiniCGenerator",
    "MiniJSGenerator",
    "MiniLuaGenerator",
    "ProgramGenerator",
    "gen_ast",
    "gen_corpus",
    "gen_program",
]

GENERATORS: Dict[Language, Type[ProgramGenerator]] = {
    Language.MiniC: MiniCGenerator,
    Language.MiniJS: MiniJSGenerator,
    Language.MiniLua: MiniLuaGenerator,
}


def gen_ast(language: Language, config: GenConfig = GenConfig()) -> GenericValue:
    return GENERATORS[Language(language)](config).generate()


def gen_program(language: Language, config: GenConfig = GenConfig()) -> str:
    """
    A random program in `language`, as source text.

    .. code-block:: python

        text = gen_program(Language.MiniLua, GenConfig(seed=7, loops=False))
    """
    return Language(language).definition.pretty(gen_ast(language, config))


def gen_corpus(language: Language, config: GenConfig, count: int) -> Iterator[str]:
    """`count` programs, the i-th generated from `config.nth(i)`."""
    for i in range(count):
        yield gen_program(language, config.nth(i))

from typing import Dict, Type

from ...languages import Language
from ...schema import GenericValue
from ..trace import DEFAULT_FUEL, Trace
from .base import *
from .minic import *
from .minijs import *
from .minilua import *

__all__ = [
    "CoverageArray",
    "CoverageObject",
    "Env",
    "Interpreter",
    "LuaTable",
    "MiniCInterpreter",
    "MiniJSInterpreter",
    "MiniLuaInterpreter",
    "interpret",
    "wrap_int",
]

INTERPRETERS: Dict[Language, Type[Interpreter]] = {
    Language.MiniC: MiniCInterpreter,
    Language.MiniJS: MiniJSInterpreter,
    Language.MiniLua: MiniLuaInterpreter,
}


def interpret(language: Language, program: GenericValue, fuel: int = DEFAULT_FUEL) -> Trace:
    """Run `main` of `program` and return its trace."""
    return INTERPRETERS[Language(language)](program, fuel).run()

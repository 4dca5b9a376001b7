"""
Source-to-source passes over IPS terms, and the registry the CLI and harness use.

.. code-block:: python

    result = Pass.Hoist.run(term, lang)
    print(lang.render(result.term))
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..terms import Term
from .hoist import *
from .requirements import *
from .tac import *
from .testcov import *

__all__ = [
    "ELEMENTARY_HOIST_REQUIREMENTS",
    "HOIST_REQUIREMENTS",
    "Pass",
    "PassRequirements",
    "PassResult",
    "TAC_REQUIREMENTS",
    "TESTCOV_REQUIREMENTS",
    "elementary_hoist",
    "hoist",
    "identity",
    "is_three_address",
    "split_declaration",
    "tac",
    "testcov",
]


@dataclass(frozen=True)
class PassResult:
    term: Term
    blocks: Optional[int] = None
    """Number of coverage markers, for `testcov`."""


def identity(term: Term, lang) -> Term:
    return term


def _testcov(term: Term, lang) -> PassResult:
    term, blocks = testcov(term, lang)
    return PassResult(term, blocks)


class Pass(Enum):
    Ident = "ident"
    EHoist = "ehoist"
    Hoist = "hoist"
    Testcov = "testcov"
    TAC = "tac"

    @property
    def requirements(self) -> PassRequirements:
        return _REGISTRY[self][1]

    def supports(self, lang) -> bool:
        return not self.requirements.missing(lang)

    def run(self, term: Term, lang) -> PassResult:
        result = _REGISTRY[self][0](term, lang)
        return result if isinstance(result, PassResult) else PassResult(result)


_REGISTRY = {
    Pass.Ident: (identity, PassRequirements()),
    Pass.EHoist: (elementary_hoist, ELEMENTARY_HOIST_REQUIREMENTS),
    Pass.Hoist: (hoist, HOIST_REQUIREMENTS),
    Pass.Testcov: (_testcov, TESTCOV_REQUIREMENTS),
    Pass.TAC: (tac, TAC_REQUIREMENTS),
}

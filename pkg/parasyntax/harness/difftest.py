"""
Differential testing of passes: a program and its transformed version must
produce the same trace.

.. code-block:: python

    corpus = gen_corpus(Language.MiniJS, GenConfig(seed=7), 100)
    report = diff_test(Language.MiniJS, Pass.TAC, corpus)
    print(report)
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence

from mbox.itertools import countby

from .. import errors
from ..languages import Language
from ..transforms import Pass
from .interpreters import interpret
from .trace import DEFAULT_FUEL, Trace

__all__ = ["DiffReport", "Outcome", "Verdict", "check_program", "diff_test", "transform_source"]

logger = logging.getLogger(__name__)


class Verdict(Enum):
    Equal = "Equal"
    TraceDiverged = "TraceDiverged"
    TransformError = "TransformError"
    ParseError = "ParseError"


@dataclass(frozen=True)
class Outcome:
    index: int
    verdict: Verdict
    detail: str = ""
    step: Optional[int] = None
    """First differing event, for `TraceDiverged`."""

    def __str__(self):
        return f"{self.index}\t{self.verdict.value}\t{self.detail}"


@dataclass(frozen=True)
class DiffReport:
    outcomes: Sequence[Outcome]

    @classmethod
    def from_outcomes(cls, outcomes: Iterable[Outcome]) -> "DiffReport":
        return cls(tuple(sorted(outcomes, key=lambda o: o.index)))

    @property
    def passed(self) -> int:
        return self.counts.get(Verdict.Equal, 0)

    @property
    def counts(self):
        return countby(self.outcomes, lambda o: o.verdict)

    @property
    def pass_rate(self) -> float:
        return self.passed / len(self.outcomes) if self.outcomes else 1.0

    @property
    def failures(self) -> List[Outcome]:
        return [o for o in self.outcomes if o.verdict is not Verdict.Equal]

    def __str__(self):
        lines = [str(o) for o in self.outcomes]
        lines.append(f"PASS {self.passed}/{len(self.outcomes)}")
        return "\n".join(lines) + "\n"


def transform_source(language: Language, pass_: Pass, text: str) -> str:
    """Parse, decompose, run `pass_`, recompose and print."""
    lang = Language(language).definition
    term = lang.parse_term(text)
    return lang.render(pass_.run(term, lang).term)


def _describe(expected: Trace, actual: Trace, step: int) -> str:
    def event(trace):
        return str(trace.events[step]) if step < len(trace) else "end of trace"

    return f"step {step}: expected {event(expected)}, got {event(actual)}"


def check_program(
    language: Language,
    pass_: Pass,
    index: int,
    text: str,
    erase_markers: bool = False,
    fuel: int = DEFAULT_FUEL,
) -> Outcome:
    """The verdict for one program; failures of any stage become verdicts."""
    lang = Language(language).definition
    try:
        original = lang.parse(text)
    except errors.ParseError as e:
        return Outcome(index, Verdict.ParseError, f"original: {e}")

    try:
        transformed = lang.render(pass_.run(lang.decompose(original), lang).term)
    except errors.ParasyntaxError as e:
        logger.warning("program %d: %s failed: %s", index, pass_.value, e)
        return Outcome(index, Verdict.TransformError, str(e))
    except Exception as e:  # pylint: disable=broad-except
        logger.warning("program %d: %s crashed: %r", index, pass_.value, e)
        return Outcome(index, Verdict.TransformError, f"{type(e).__name__}: {e}")

    try:
        reparsed = lang.parse(transformed)
    except errors.ParseError as e:
        logger.warning("program %d: %s output does not parse: %s", index, pass_.value, e)
        return Outcome(index, Verdict.ParseError, f"transformed: {e}")

    expected = interpret(language, original, fuel)
    actual = interpret(language, reparsed, fuel)
    if erase_markers:
        expected, actual = expected.erase_markers(), actual.erase_markers()

    step = expected.first_difference(actual)
    if step is not None:
        return Outcome(index, Verdict.TraceDiverged, _describe(expected, actual, step), step)
    return Outcome(index, Verdict.Equal, f"{len(expected)} events")


def diff_test(
    language: Language,
    pass_: Pass,
    corpus: Iterable[str],
    erase_markers: bool = False,
    fuel: int = DEFAULT_FUEL,
) -> DiffReport:
    """Check every program of `corpus`, in order."""
    outcomes = [
        check_program(language, pass_, i, text, erase_markers, fuel)
        for i, text in enumerate(corpus)
    ]
    report = DiffReport.from_outcomes(outcomes)
    logger.debug(
        "%s on %s: %d/%d equal",
        pass_.value,
        Language(language).value,
        report.passed,
        len(report.outcomes),
    )
    return report

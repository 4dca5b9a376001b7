import pytest

from parasyntax import transforms
from parasyntax.harness import Verdict, check_program
from parasyntax.languages import Language, get_language
from parasyntax.transforms import Pass, PassRequirements, PassResult

SUPPORTED = {
    Pass.Ident: {"minic", "minijs", "minilua"},
    Pass.EHoist: {"minic", "minijs"},
    Pass.Hoist: {"minic", "minijs", "minilua"},
    Pass.Testcov: {"minic", "minijs", "minilua"},
    Pass.TAC: {"minijs", "minilua"},
}


@pytest.mark.parametrize("pass_", list(Pass), ids=lambda p: p.value)
def test_supports(pass_, language):
    lang = get_language(language.value)
    assert pass_.supports(lang) == (language.value in SUPPORTED[pass_])


def test_values():
    assert [p.value for p in Pass] == ["ident", "ehoist", "hoist", "testcov", "tac"]
    assert Pass("tac") is Pass.TAC


def test_missing_requirements():
    minic = get_language("minic")
    assert "operation make_if" in Pass.TAC.requirements.missing(minic)
    assert "operation declare_locals" in Pass.TAC.requirements.missing(minic)
    assert Pass.Ident.requirements.missing(minic) == []
    lua = get_language("minilua")
    assert Pass.EHoist.requirements.missing(lua)


def test_run_wraps_results():
    js = get_language("minijs")
    term = js.parse_term("function main() { return 1; }")
    result = Pass.Ident.run(term, js)
    assert isinstance(result, PassResult)
    assert result.term == term
    assert result.blocks is None
    assert Pass.Testcov.run(term, js).blocks == 1


def test_broken_pass_is_caught(monkeypatch):
    js = get_language("minijs")

    def swap_literal(term, lang):
        return js.parse_term("function main() { return 2; }")

    monkeypatch.setitem(transforms._REGISTRY, Pass.Ident, (swap_literal, PassRequirements()))
    outcome = check_program(Language.MiniJS, Pass.Ident, 4, "function main() { return 1; }")
    assert outcome.verdict is Verdict.TraceDiverged
    assert outcome.step == 0
    assert outcome.index == 4


def test_failing_pass_is_a_transform_error(monkeypatch):
    def crash(term, lang):
        raise KeyError("boom")

    monkeypatch.setitem(transforms._REGISTRY, Pass.Ident, (crash, PassRequirements()))
    outcome = check_program(Language.MiniJS, Pass.Ident, 0, "function main() { return 1; }")
    assert outcome.verdict is Verdict.TransformError
    assert "KeyError" in outcome.detail


def test_unsupported_pass_is_a_transform_error():
    outcome = check_program(Language.MiniC, Pass.TAC, 0, "int main() { return 1 + 2 * 3; }")
    assert outcome.verdict is Verdict.TransformError
    assert "tac" in outcome.detail

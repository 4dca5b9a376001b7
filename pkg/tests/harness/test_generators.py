from hypothesis import given, settings

from parasyntax.harness import GenConfig, gen_ast, gen_corpus, gen_program, interpret
from parasyntax.harness.trace import Return, Trap
from parasyntax.languages import Language
from strategies import seeds

LOOPS = {
    Language.MiniC: ("while (", "for ("),
    Language.MiniJS: ("while (", "for ("),
    Language.MiniLua: ("while ", "for "),
}
SHORT_CIRCUIT = {
    Language.MiniC: ("&&", "||"),
    Language.MiniJS: ("&&", "||"),
    Language.MiniLua: (" and ", " or "),
}


def test_deterministic(language):
    config = GenConfig(seed=11)
    assert gen_program(language, config) == gen_program(language, config)
    assert gen_program(language, config) != gen_program(language, config.nth(1))


def test_corpus():
    config = GenConfig(seed=3)
    corpus = list(gen_corpus(Language.MiniJS, config, 3))
    assert len(corpus) == 3
    assert corpus[2] == gen_program(Language.MiniJS, GenConfig(seed=5))


def test_nth():
    assert GenConfig(seed=3, loops=False).nth(2) == GenConfig(seed=5, loops=False)


# pylint: disable=E1120
@given(seeds())
@settings(max_examples=25, deadline=None)
def test_parse_roundtrip(seed):
    for language in Language:
        lang = language.definition
        text = gen_program(language, GenConfig(seed=seed))
        assert lang.pretty(lang.parse(text)) == text


# pylint: disable=E1120
@given(seeds())
@settings(max_examples=25, deadline=None)
def test_programs_terminate(seed):
    for language in Language:
        program = gen_ast(language, GenConfig(seed=seed))
        trace = interpret(language, program)
        assert isinstance(trace.events[-1], (Return, Trap))


def test_without_loops(language):
    for text in gen_corpus(language, GenConfig(loops=False), 20):
        assert not any(keyword in text for keyword in LOOPS[language])
        assert "break" not in text


def test_without_short_circuit(language):
    for text in gen_corpus(language, GenConfig(short_circuit=False), 20):
        assert not any(op in text for op in SHORT_CIRCUIT[language])


def test_main_comes_last(language):
    program = gen_ast(language, GenConfig(seed=1))
    names = [_function_name(language)(f) for f in program.args[0]]
    assert names[-1] == "main"
    assert "main" not in names[:-1]


def _function_name(language):
    if language is Language.MiniC:
        return lambda f: f.args[1].args[0]
    return lambda f: f.args[0].args[0]

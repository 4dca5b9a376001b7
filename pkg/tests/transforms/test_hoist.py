import pytest

from parasyntax.errors import RequirementMissing
from parasyntax.fragments import ASSIGN_L, BLOCK, JUST_LOCAL_VAR_INIT, block_items, ident_names
from parasyntax.harness import GenConfig, Verdict, check_program, gen_corpus, interpret
from parasyntax.harness.trace import Print, Return
from parasyntax.languages import Language, get_language
from parasyntax.terms import walk
from parasyntax.transforms import Pass, elementary_hoist, hoist, split_declaration


def render(language, fn, text):
    lang = get_language(language)
    return lang.render(fn(lang.parse_term(text), lang))


def test_elementary_hoist(hoist_program, hoisted_program):
    minic = get_language("minic")
    expected = minic.pretty(minic.parse(hoisted_program))
    assert render("minic", elementary_hoist, hoist_program) == expected
    assert render("minic", hoist, hoist_program) == expected


def test_hoisted_program_runs(hoist_program):
    minic = get_language("minic")
    out = render("minic", elementary_hoist, hoist_program)
    assert interpret(Language.MiniC, minic.parse(hoist_program)).events == [Return("3")]
    assert interpret(Language.MiniC, minic.parse(out)).events == [Return("3")]


def test_minijs():
    text = "function main() { var x = 1; print(x); var y = x + 1, z; return y; }"
    assert render("minijs", elementary_hoist, text) == (
        "function main() {\n"
        "  var x;\n"
        "  var y, z;\n"
        "  x = 1;\n"
        "  print(x);\n"
        "  y = x + 1;\n"
        "  return y;\n"
        "}\n"
    )


def test_minilua_binds_lists():
    text = "function main() local x, y = 1, 2 print(x) local z = x + y return z end"
    lua = get_language("minilua")
    with pytest.raises(RequirementMissing):
        elementary_hoist(lua.parse_term(text), lua)
    assert render("minilua", hoist, text) == (
        "function main()\n"
        "  local x, y\n"
        "  local z\n"
        "  x, y = 1, 2\n"
        "  print(x)\n"
        "  z = x + y\n"
        "  return z\n"
        "end\n"
    )


def test_shadowing_declaration_stays():
    text = "function main() { var x = 1; if (x) { print(x); var x = 2; } return x; }"
    assert render("minijs", hoist, text) == (
        "function main() {\n"
        "  var x;\n"
        "  x = 1;\n"
        "  if (x) {\n"
        "    print(x);\n"
        "    var x = 2;\n"
        "  }\n"
        "  return x;\n"
        "}\n"
    )
    assert check_program(Language.MiniJS, Pass.Hoist, 0, text).verdict is Verdict.Equal
    outcome = check_program(Language.MiniJS, Pass.EHoist, 0, text)
    assert outcome.verdict is Verdict.TraceDiverged
    assert outcome.step == 0


def test_self_referencing_initializer_stays():
    text = "int main() { int x = 1; { int x = x + 1; print(x); } return x; }"
    out = render("minic", hoist, text)
    assert "int x = x + 1;" in out
    minic = get_language("minic")
    assert interpret(Language.MiniC, minic.parse(out)).events == [Print("2"), Return("1")]
    assert check_program(Language.MiniC, Pass.EHoist, 0, text).verdict is Verdict.TraceDiverged


def test_split_declaration():
    minic = get_language("minic")
    term = minic.parse_term("int main() { int a = 1, b, c = a; return c; }")
    body = next(node for _, node in walk(term) if node.kind == BLOCK)
    decl, ret = block_items(body)
    stripped, stores = split_declaration(decl, minic)
    assert len(stores) == 2
    assert split_declaration(ret, minic) is None
    hoisted = minic.render(elementary_hoist(term, minic))
    assert "int a, b, c;\n  a = 1;\n  c = a;\n" in hoisted
    assert all(node.kind != JUST_LOCAL_VAR_INIT for _, node in walk(stripped))


def test_nothing_to_hoist(language):
    lang = language.definition
    text = {
        Language.MiniC: "int main() { return 1; }",
        Language.MiniJS: "function main() { return 1; }",
        Language.MiniLua: "function main() return 1 end",
    }[language]
    term = lang.parse_term(text)
    assert hoist(term, lang) == term


def declarations_first(term, lang):
    for _, node in walk(term):
        if node.kind != BLOCK:
            continue
        kinds = [split_declaration(item, lang) is not None for item in block_items(node)]
        if kinds != sorted(kinds, reverse=True):
            return False
    return True


@pytest.mark.parametrize("language", [Language.MiniC, Language.MiniJS], ids=lambda l: l.value)
def test_declarations_come_first(language):
    lang = language.definition
    for text in gen_corpus(language, GenConfig(seed=40, shadowing=False), 10):
        term = lang.parse_term(text)
        hoisted = elementary_hoist(term, lang)
        assert declarations_first(hoisted, lang)
        # Without shadowing the name check never fires.
        assert hoist(term, lang) == hoisted


def declarations_stay_for_a_reason(term, lang):
    """
    A declaration below the hoisted ones, or one keeping its initializer, binds a
    name used earlier in its block or read by one of its initializers.
    """
    for _, node in walk(term):
        if node.kind != BLOCK:
            continue
        seen, leading = set(), True
        for item in block_items(node):
            split = split_declaration(item, lang)
            if split is None:
                leading = False
            elif not leading or split[1]:
                bound = set(ident_names(split[0]))
                reads = set()
                for store in split[1]:
                    reads.update(ident_names(lang.injections.proj(store, ASSIGN_L).children[2]))
                if not bound & (seen | reads):
                    return False
            seen.update(ident_names(item))
    return True


def test_hoist_keeps_only_capturing_declarations(language):
    lang = language.definition
    for text in gen_corpus(language, GenConfig(seed=90, shadowing=True), 20):
        hoisted = hoist(lang.parse_term(text), lang)
        assert declarations_stay_for_a_reason(hoisted, lang), text


def test_hoist_is_idempotent(language):
    lang = language.definition
    for text in gen_corpus(language, GenConfig(seed=90), 20):
        once = hoist(lang.parse_term(text), lang)
        assert hoist(once, lang) == once, text


@pytest.mark.parametrize("language", [Language.MiniC, Language.MiniJS], ids=lambda l: l.value)
def test_elementary_hoist_is_idempotent(language):
    lang = language.definition
    for text in gen_corpus(language, GenConfig(seed=90), 20):
        once = elementary_hoist(lang.parse_term(text), lang)
        assert declarations_first(once, lang)
        assert elementary_hoist(once, lang) == once, text

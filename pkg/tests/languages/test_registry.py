import pytest

from parasyntax.fragments import GENERIC_SIGNATURE, RESERVED_SORTS
from parasyntax.languages import Language, get_language


def test_definitions_are_shared(language):
    assert get_language(language) is get_language(language.value)
    assert language.definition is get_language(language)


def test_unknown_extension():
    with pytest.raises(ValueError):
        Language.from_path("program.py")
    with pytest.raises(ValueError):
        get_language("minipython")


def test_signature_contents(language):
    lang = language.definition
    for kind in GENERIC_SIGNATURE:
        assert kind in lang.signature
    for name in lang.removed:
        assert f"{lang.name}.{name}" not in lang.signature
        assert f"{lang.name}.{name}" in lang.modular.signature
    for kind in lang.injection_kinds():
        assert kind in lang.signature


def test_generated_sorts_are_namespaced(language):
    lang = language.definition
    generated = set(lang.modular.sort_of.values())
    assert not generated & RESERVED_SORTS
    assert all(str(sort).startswith(f"{lang.name}.") for sort in generated)


def test_injections_stay_in_signature(language):
    lang = language.definition
    for decl in lang.injections:
        for kind, _ in decl.path:
            assert kind in lang.signature

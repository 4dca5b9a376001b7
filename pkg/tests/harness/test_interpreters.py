import pytest

from parasyntax.harness import interpret
from parasyntax.harness.trace import Call, Mark, Print, Return, Trap, TrapKind
from parasyntax.languages import Language


def run(language, text, **kwargs):
    language = Language(language)
    return interpret(language, language.definition.parse(text), **kwargs).events


@pytest.mark.parametrize(
    "text, expected",
    [
        ("int main() { return 0 - 7 / 2; }", "-3"),
        ("int main() { return (0 - 7) / 2; }", "-3"),
        ("int main() { return (0 - 7) % 2; }", "-1"),
        ("int main() { return 2147483647 + 1; }", "-2147483648"),
        ("int main() { return 2 && 3; }", "true"),
        ("int main() { return (1 < 2) == 1; }", "true"),
    ],
)
def test_minic_values(text, expected):
    assert run("minic", text) == [Return(expected)]


def test_minic_defaults():
    assert run("minic", "int f() { } int main() { int x; print(x); return f(); }") == [
        Print("0"),
        Return("0"),
    ]


def test_minic_arrays():
    assert run("minic", "int main() { int[] a = {1, 2}; print(a); return a[1]; }") == [
        Print("[1, 2]"),
        Return("2"),
    ]
    assert run("minic", "int main() { int[] a = array(1); a[5] = 1; return 0; }") == [
        Trap(TrapKind.Bounds)
    ]
    assert run("minic", "int main() { int x = {1, 2}; return x; }") == [Trap(TrapKind.BadInit)]


def test_minic_coverage_array():
    assert run("minic", "int main() { cov[1] = true; cov[0] = true; return 0; }") == [
        Mark(1),
        Mark(0),
        Return("0"),
    ]


def test_traps():
    assert run("minic", "int main() { int x = 7 / 0; return x; }") == [Trap(TrapKind.DivZero)]
    assert run("minijs", "function main() { return y; }") == [Trap(TrapKind.Unbound)]
    assert run("minijs", "function main() { while (1) { } }", fuel=10) == [Trap(TrapKind.Fuel)]
    recursive = "function f(n) { return f(n); } function main() { return f(1); }"
    assert run("minijs", recursive) == [Trap(TrapKind.StackOverflow)]


def test_trap_keeps_earlier_events():
    assert run("minijs", "function main() { print(1); return 1 / 0; }") == [
        Print("1"),
        Trap(TrapKind.DivZero),
    ]


def test_minijs_undefined():
    assert run("minijs", "function main() { var a = [1]; print(a[3]); return a.length; }") == [
        Print("undefined"),
        Return("1"),
    ]
    assert run("minijs", "function main() { var a = [1]; a[3] = 5; print(a); }") == [
        Print("[1, undefined, undefined, 5]"),
        Return("undefined"),
    ]


def test_minijs_operands():
    assert run("minijs", "function main() { print(0 || 5); return 3 && 0; }") == [
        Print("5"),
        Return("0"),
    ]


def test_minijs_block_scopes():
    text = "function main() { var x = 1; { var x = 2; print(x); } return x; }"
    assert run("minijs", text) == [Print("2"), Return("1")]


def test_minijs_redeclaration_keeps_value():
    assert run("minijs", "function main() { var x = 1; var x; return x; }") == [Return("1")]


def test_minilua_tables():
    text = "function main() local t = {10, 20} t[3] = 30 t[1] = nil print(t) return t[2] end"
    assert run("minilua", text) == [Print("{2=20, 3=30}"), Return("20")]


def test_minilua_parallel_assignment():
    text = "function main() local a, b = 1, 2 a, b = b, a print(a) return b end"
    assert run("minilua", text) == [Print("2"), Return("1")]


def test_minilua_truthiness():
    text = "function main() if 0 then print(1) end print(nil and 1) print(false or 3) end"
    assert run("minilua", text) == [Print("1"), Print("nil"), Print("3"), Return("nil")]


def test_minilua_floor_division():
    text = "function main() local a = 0 - 7 print(a // 2) return a % 2 end"
    assert run("minilua", text) == [Print("-4"), Return("1")]


def test_minilua_missing_arguments():
    text = "function f(a, b) return b end function main() return f(1) end"
    assert run("minilua", text) == [Return("nil")]


def test_minilua_coverage_object():
    assert run("minilua", "function main() TC.cov[3] = true return 0 end") == [
        Mark(3),
        Return("0"),
    ]


def test_externals(language):
    text = {
        Language.MiniC: "int main() { return input(3); }",
        Language.MiniJS: "function main() { return input(3); }",
        Language.MiniLua: "function main() return input(3) end",
    }[language]
    events = run(language, text)
    assert events[0] == Call("input", ("3",))
    assert 0 <= int(events[1].value) < 100
    assert run(language, text) == events

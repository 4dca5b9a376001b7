from parasyntax.commands import main


def test_inspect_injections(runner):
    result = runner.invoke(main, ["inspect", "--injections", "minic"])
    assert "Injections: " in result.output
    assert "MiniC.ExprL -> BlockItemL : MiniC.ExprStmt@0, MiniC.StmtItem@0" in result.output


def test_inspect_signature(runner):
    result = runner.invoke(main, ["inspect", "--signature", "minijs"])
    assert "Kinds: " in result.output
    assert "DirectivesBlock" in result.output


def test_inspect_usage(runner):
    runner.invoke(main, ["inspect"], exit_code=2)

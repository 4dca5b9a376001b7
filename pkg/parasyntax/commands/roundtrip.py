import click
from mbox.click import PathParam

from ..errors import ParasyntaxError
from ..io import read_source
from .common import TransformFailure, language_option, print_args, print_kv


@click.command()
@language_option()
@click.argument("file", required=True, type=PathParam())
def roundtrip(**args):
    """
    Check that a source file survives printing and decomposition.

    \b
    Succeeds when parsing the printed program gives back the same AST, and when
    decomposing then recomposing the AST gives back the same AST.
    """
    print_args(args, roundtrip)
    lang = args["language"].definition
    try:
        ast = lang.parse(read_source(args["file"]))
        printed = lang.pretty(ast)
        if lang.parse(printed) != ast:
            raise TransformFailure("printing changes the program")
        if lang.recompose(lang.decompose(ast)) != ast:
            raise TransformFailure("decomposition changes the program")
    except ParasyntaxError as e:
        raise TransformFailure.from_error(e) from e
    print_kv("Round trip", "ok")

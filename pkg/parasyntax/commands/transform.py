import click
from mbox.click import PathParam

from ..errors import ParasyntaxError
from ..io import read_source, write_source
from .common import TransformFailure, language_option, pass_option, print_args, print_kv


@click.command()
@language_option()
@pass_option()
@click.option(
    "--out",
    type=PathParam(),
    help="Output file (default: standard output)",
)
@click.argument("file", required=True, type=PathParam())
def transform(**args):
    """
    Run a transformation on a source file.

    \b
    The program is decomposed into its incremental parametric syntax, transformed,
    recomposed and printed. `testcov` also reports the number of basic blocks.
    """
    print_args(args, transform)
    lang = args["language"].definition
    try:
        term = lang.parse_term(read_source(args["file"]))
        result = args["pass_"].run(term, lang)
        text = lang.render(result.term)
        if result.blocks is not None:
            print_kv("Blocks", result.blocks)
        write_source(text, args["out"])
    except ParasyntaxError as e:
        raise TransformFailure.from_error(e) from e

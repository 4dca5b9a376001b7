import click
from mbox.click import PathParam

from ..errors import ParasyntaxError
from ..schema import dump_language, load_schema, modularize_schema
from .common import TransformFailure, print_args


@click.command()
@click.option(
    "--name",
    help="Namespace of the generated sorts and kinds (default: the file name)",
)
@click.argument("schema", required=True, type=PathParam())
def modularize(**args):
    """
    Print the sorts and kinds generated from an algebraic data type schema.
    """
    print_args(args, modularize)
    try:
        language = modularize_schema(load_schema(args["schema"], args["name"]))
    except ParasyntaxError as e:
        raise TransformFailure.from_error(e) from e
    click.echo(dump_language(language), nl=False)

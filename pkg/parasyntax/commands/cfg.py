import click
from mbox.click import PathParam

from ..errors import ParasyntaxError
from ..flow import basic_blocks, build_cfg, dump_blocks, to_dot
from ..io import read_source
from .common import TransformFailure, language_option, print_args, print_kv


@click.command()
@language_option()
@click.option(
    "--dot",
    is_flag=True,
    help="Print the graph in Graphviz format (default)",
)
@click.option(
    "--blocks",
    is_flag=True,
    help="Print the basic blocks instead of the graph",
)
@click.argument("file", required=True, type=PathParam())
def cfg(**args):
    """
    Control-flow graph of a program.
    """
    print_args(args, cfg)
    if args["dot"] and args["blocks"]:
        raise click.UsageError("--dot and --blocks are mutually exclusive")
    lang = args["language"].definition
    try:
        graph = build_cfg(lang.parse_term(read_source(args["file"])), lang)
    except ParasyntaxError as e:
        raise TransformFailure.from_error(e) from e
    print_kv("Nodes", len(graph))
    if args["blocks"]:
        click.echo(dump_blocks(basic_blocks(graph)), nl=False)
    else:
        click.echo(to_dot(graph), nl=False)

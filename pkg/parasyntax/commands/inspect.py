import click
from mbox.click import EnumChoice

from ..languages import Language
from .common import print_args, print_kv


@click.command()
@click.option(
    "--injections",
    type=EnumChoice(Language, str),
    help="Print the sort injections registered by a language",
)
@click.option(
    "--signature",
    type=EnumChoice(Language, str),
    help="Print the kinds of a language's incremental parametric syntax",
)
def inspect(**args):
    """
    Show the tables of a registered language.
    """
    print_args(args, inspect)
    if not args["injections"] and not args["signature"]:
        raise click.UsageError("one of --injections or --signature is required")
    if args["injections"]:
        table = args["injections"].definition.injections
        print_kv("Injections", len(table))
        click.echo(table.dump(), nl=False)
    if args["signature"]:
        signature = args["signature"].definition.signature
        print_kv("Kinds", len(signature))
        click.echo("".join(f"{kind.describe()}\n" for kind in signature), nl=False)

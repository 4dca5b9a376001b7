import logging
import sys

import click

from .cfg import cfg
from .common import console
from .difftest import difftest
from .inspect import inspect
from .modularize import modularize
from .roundtrip import roundtrip
from .transform import transform


@click.group(context_settings=dict(max_content_width=120))
@click.option(
    "--debug",
    default=False,
    is_flag=True,
    show_default=True,
    help="Set the logging level to DEBUG",
)
def main(debug):
    """
    \b
    parasyntax transforms programs of several small languages through one
    shared, incrementally generic syntax representation.

    \b
    Exit status: 0 on success, 1 on usage errors, 2 on files that cannot be read
    or written (missing, unreadable, not UTF-8) and on parse or transformation
    errors, 3 when `difftest` finds programs that behave differently.
    """
    if debug:
        logging.basicConfig(
            level=logging.DEBUG,
            datefmt="%Y/%m/%d %H:%M:%S",
            format="%(asctime)s %(levelname)s %(process)d %(name)s %(message)s",
        )


main.add_command(cfg)
main.add_command(difftest)
main.add_command(inspect)
main.add_command(modularize)
main.add_command(roundtrip)
main.add_command(transform)


def cli(args=None) -> int:
    """Entry point of the `parasyntax` script; returns the exit status."""
    try:
        main.main(args, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        console.print("Aborted!")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(cli())

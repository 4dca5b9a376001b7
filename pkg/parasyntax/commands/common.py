from enum import Enum
from pathlib import Path

import click
from click import Option
from mbox.click import EnumChoice
from rich.console import Console

from ..errors import ParasyntaxError
from ..languages import Language
from ..transforms import Pass

console = Console(stderr=True)
"""Diagnostics go to standard error; standard output carries programs and reports."""


class TransformFailure(click.ClickException):
    """An input, parse or transformation error, reported with exit code 2."""

    exit_code = 2

    @classmethod
    def from_error(cls, error: ParasyntaxError) -> "TransformFailure":
        return cls(f"{type(error).__name__}: {error}")


class DiffFailures(click.ClickException):
    exit_code = 3


def language_option(**kwargs):
    return click.option(
        "--lang",
        "language",
        required=True,
        type=EnumChoice(Language, str),
        help="Source language",
        **kwargs,
    )


def pass_option(**kwargs):
    return click.option(
        "--pass",
        "pass_",
        required=True,
        type=EnumChoice(Pass, str),
        help="Transformation to run",
        **kwargs,
    )


def format_args(args, command):
    tokens = []
    for param in command.params:
        value = args.get(param.name)
        # Print nothing if:
        # 1) Param is optional and unspecified
        if value is None:
            continue
        # 2) Param is a flag and is false (i.e. is not set)
        if isinstance(value, bool) and not value:
            continue
        if isinstance(param, Option):
            tokens.append(param.opts[0])
        if isinstance(value, bool) and value:
            continue
        if isinstance(value, Enum):
            value = value.value
        if isinstance(value, Path):
            value = str(value)
        tokens.append(str(value))
    return " ".join(tokens)


def print_args(args, command):
    print_kv("Args", format_args(args, command))


def print_kv(key, value):
    console.print(f"[bold]{key}:[/bold] {value}", highlight=False)

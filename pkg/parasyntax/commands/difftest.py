import atexit
import logging
import signal
from concurrent.futures import ProcessPoolExecutor, as_completed

import click
import psutil
from mbox.click import PathParam
from tqdm import tqdm

from ..errors import ParasyntaxError
from ..harness import DEFAULT_FUEL, DiffReport, GenConfig, check_program, diff_test, gen_corpus
from ..io import CorpusWriter, read_corpus
from .common import (
    DiffFailures,
    TransformFailure,
    language_option,
    pass_option,
    print_args,
    print_kv,
)

logger = logging.getLogger(__name__)


def cleanup():
    # multiprocessing leaves zombies behind when interrupted,
    # so let's do it the hard way.
    parent = psutil.Process()
    children = parent.children(recursive=True)
    for child in children:
        logger.debug("terminating process %d", child.pid)
        child.send_signal(signal.SIGTERM)
    psutil.wait_procs(children)


def run_parallel(args, corpus) -> DiffReport:
    atexit.register(cleanup)
    outcomes = []
    with ProcessPoolExecutor(args["jobs"]) as executor:
        futures = [
            executor.submit(
                check_program,
                args["language"],
                args["pass_"],
                index,
                text,
                args["erase_markers"],
                args["fuel"],
            )
            for index, text in enumerate(corpus)
        ]
        for future in tqdm(as_completed(futures), total=len(futures), desc="difftest"):
            outcomes.append(future.result())
    atexit.unregister(cleanup)
    return DiffReport.from_outcomes(outcomes)


@click.command()
@language_option()
@pass_option()
@click.option(
    "--count",
    metavar="N",
    type=click.IntRange(min=0),
    help="Number of programs to generate",
)
@click.option(
    "--seed",
    default=0,
    show_default=True,
    type=int,
    help="Seed of the first generated program",
)
@click.option(
    "--corpus",
    type=PathParam(),
    help="Directory of source files to test instead of generated programs",
)
@click.option(
    "--erase-markers",
    is_flag=True,
    help="Ignore stores into the coverage array when comparing traces",
)
@click.option(
    "--jobs",
    default=1,
    show_default=True,
    metavar="N",
    type=click.IntRange(min=1),
    help="Number of parallel jobs to run",
)
@click.option("--no-loops", is_flag=True, help="Generate programs without loops")
@click.option("--no-short-circuit", is_flag=True, help="Generate programs without && and ||")
@click.option("--no-shadowing", is_flag=True, help="Never redeclare a visible name")
@click.option(
    "--no-parallel-assign",
    is_flag=True,
    help="Declare and assign one name at a time",
)
@click.option(
    "--max-depth",
    default=GenConfig.max_depth,
    show_default=True,
    type=click.IntRange(min=0),
    help="Nesting limit of generated statements",
)
@click.option(
    "--max-stmts",
    default=GenConfig.max_stmts,
    show_default=True,
    type=click.IntRange(min=1),
    help="Maximum number of statements per generated block",
)
@click.option(
    "--fuel",
    default=DEFAULT_FUEL,
    show_default=True,
    type=click.IntRange(min=1),
    help="Loop iterations and calls allowed per run",
)
@click.option(
    "--save",
    type=PathParam(),
    help="Write the generated programs to this directory",
)
def difftest(**args):
    """
    Check that a transformation preserves the behaviour of programs.

    \b
    Each program is run before and after the transformation by the language's
    reference interpreter and the two traces are compared. One line is printed
    per program, `<index> <verdict> <detail>`, then `PASS <k>/<n>`.
    """
    print_args(args, difftest)
    if (args["count"] is None) == (args["corpus"] is None):
        raise click.UsageError("exactly one of --count and --corpus is required")

    if args["corpus"]:
        if not args["corpus"].is_dir():
            raise click.UsageError(f"{args['corpus']} is not a directory")
        try:
            corpus = read_corpus(args["corpus"], args["language"])
        except ParasyntaxError as e:
            raise TransformFailure.from_error(e) from e
    else:
        config = GenConfig(
            seed=args["seed"],
            max_depth=args["max_depth"],
            max_stmts=args["max_stmts"],
            loops=not args["no_loops"],
            short_circuit=not args["no_short_circuit"],
            shadowing=not args["no_shadowing"],
            parallel_assign=not args["no_parallel_assign"],
        )
        corpus = list(gen_corpus(args["language"], config, args["count"]))
        if args["save"]:
            try:
                CorpusWriter(args["save"], args["language"]).write_all(corpus)
            except ParasyntaxError as e:
                raise TransformFailure.from_error(e) from e
    print_kv("Programs", len(corpus))

    if args["jobs"] > 1:
        report = run_parallel(args, corpus)
    else:
        report = diff_test(
            args["language"], args["pass_"], corpus, args["erase_markers"], args["fuel"]
        )

    click.echo(str(report), nl=False)
    print_kv("Pass rate", f"{report.pass_rate:.1%}")
    if report.failures:
        raise DiffFailures(f"{len(report.failures)} programs behave differently")

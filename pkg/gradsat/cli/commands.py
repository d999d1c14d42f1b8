"""
Command-line front end: the 'gradsat' miner and the 'gradsat-allsat'
DIMACS model enumerator.

Exit codes: 0 success, 1 usage or input format error, 2 infeasible
threshold, 3 resource cap hit (partial results are still printed).

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=too-many-arguments,too-many-locals

# --- Imports

# Standard library
from fractions import Fraction
import logging
import sys

# External packages
import click

# GradSAT
from ..dataset import load_csv
from ..encoder import OrderEncoding, SymmetryMode, parse_threshold
from ..encoder import threshold_to_k
from ..encoder.EncodingOptions import DEFAULT_MIN_LEN
from ..errors import (DimacsFormatError, InfeasibleThresholdError,
                      ResourceLimitError)
from ..miner import GradualMiner, report
from ..miner.report import REPORT_FORMATS
from ..solver import SolverConfig, enumerate_models, format_model
from ..solver import read_dimacs
from .RunConfig import RunConfig


# --- Constants

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_RESOURCE_LIMIT = 3

LOG_FORMAT = '[%(asctime)s] [%(levelname)s] %(message)s'

_LOGGER = logging.getLogger(__name__)


# --- Helper functions

def configure_logging(verbosity):
    """
    Log to stderr: WARNING by default, INFO with -v, DEBUG with -vv.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _threshold(ctx, param, value):
    # pylint: disable=unused-argument
    try:
        threshold = parse_threshold(value)
    except ValueError as error:
        raise click.BadParameter(str(error))

    if isinstance(threshold, Fraction) and not 0 < threshold <= 1:
        raise click.BadParameter(
            "fractional threshold {} is not in (0, 1]".format(value))
    if isinstance(threshold, int) and threshold < 1:
        raise click.BadParameter(
            "absolute threshold {} is not positive".format(value))

    return threshold


# --- Functions

def stats(instance):
    """
    Instance statistics line: variable count, clause count and encoding
    time in seconds.
    """
    return 'vars={} clauses={} time={:.4f}'.format(
        instance.variable_count, instance.num_clauses,
        instance.encoding_time)


def run(config, out=None, err=None):
    """
    Mine the dataset of 'config' and print the report.

    The options header and the instance statistics go to 'err'; the report
    goes to 'out'.

    Return values
    -------------
    int: exit code
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    try:
        dataset = load_csv(config.input_path, has_id_column=config.id_column)
        k = threshold_to_k(config.min_supp, dataset.num_transactions)
        miner = GradualMiner(dataset, config.mining_options())
        instance = miner.encode(k)
    except InfeasibleThresholdError as error:
        click.echo('error: {}'.format(error), file=err)
        return EXIT_INFEASIBLE
    except (OSError, ValueError) as error:
        click.echo('error: {}'.format(error), file=err)
        return EXIT_USAGE

    click.echo('{} k={}'.format(config.header(), k), file=err)
    click.echo(stats(instance), file=err)

    if config.export_dimacs is not None:
        try:
            with open(config.export_dimacs, 'w', encoding='utf-8') as file_:
                file_.write(instance.to_dimacs())
        except OSError as error:
            click.echo('error: {}'.format(error), file=err)
            return EXIT_USAGE
        _LOGGER.info('wrote %s', config.export_dimacs)

    if config.encode_only:
        return EXIT_OK

    try:
        results = miner.enumerate_patterns()
    except ResourceLimitError as error:
        click.echo(report(error.partial_results, dataset,
                          config.output_format), file=out, nl=False)
        click.echo('error: {}; {} partial results'.format(
            error, len(error.partial_results)), file=err)
        return EXIT_RESOURCE_LIMIT

    click.echo(report(results, dataset, config.output_format), file=out,
               nl=False)

    return EXIT_OK


def enumerate_file(cnf_path, config=None, out=None, err=None):
    """
    Print every model of a DIMACS file, one per line.

    Return values
    -------------
    int: exit code
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    try:
        with open(cnf_path, encoding='utf-8') as file_:
            num_vars, clauses, _ = read_dimacs(file_)
    except (OSError, DimacsFormatError) as error:
        click.echo('error: {}'.format(error), file=err)
        return EXIT_USAGE

    def print_model(model):
        click.echo(format_model(model), file=out)

    try:
        _, count = enumerate_models(num_vars, clauses, print_model, config)
    except ResourceLimitError as error:
        click.echo('error: {}'.format(error), file=err)
        return EXIT_RESOURCE_LIMIT

    click.echo('models={}'.format(count), file=err)

    return EXIT_OK


# --- Commands

@click.command(name='gradsat')
@click.option('--input', 'input_path', required=True,
              type=click.Path(exists=True, dir_okay=False),
              help='CSV dataset with a header row of attribute names.')
@click.option('--min-supp', required=True, callback=_threshold,
              help='Support threshold: a fraction ("0.625", "5/8") or an '
                   'absolute transaction count ("5").')
@click.option('--min-len', default=DEFAULT_MIN_LEN, show_default=True,
              type=click.IntRange(min=1),
              help='Minimum number of items per pattern.')
@click.option('--encoding', 'order_encoding', default='successor',
              show_default=True,
              type=click.Choice([mode.value for mode in OrderEncoding]),
              help='Clause form of the order constraint.')
@click.option('--symmetry', default='blocking', show_default=True,
              type=click.Choice([mode.value for mode in SymmetryMode]),
              help='Complement symmetry handling.')
@click.option('--closed/--no-closed', default=False, show_default=True,
              help='Keep only closed patterns.')
@click.option('--temporal/--no-temporal', default=False, show_default=True,
              help='Chains must follow the row order.')
@click.option('--simplify/--no-simplify', default=True, show_default=True,
              help='Replace infeasible placements by binary clauses.')
@click.option('--export-dimacs', type=click.Path(dir_okay=False),
              help='Write the CNF instance to this file.')
@click.option('--encode-only', is_flag=True,
              help='Stop after encoding (requires --export-dimacs).')
@click.option('--verify/--no-verify', default=True, show_default=True,
              help='Recompute exact supports with the chain oracle.')
@click.option('--max-models', type=click.IntRange(min=1),
              help='Stop after this many models.')
@click.option('--max-conflicts', type=click.IntRange(min=1),
              help='Stop after this many solver conflicts.')
@click.option('--seed', default=0, show_default=True, type=int,
              help='Seed of the solver random generator.')
@click.option('--format', 'output_format', default='json',
              show_default=True, type=click.Choice(REPORT_FORMATS),
              help='Report format.')
@click.option('--id-column/--no-id-column', default=False,
              show_default=True,
              help='First CSV column holds transaction ids.')
@click.option('-v', '--verbose', count=True,
              help='Log INFO (-v) or DEBUG (-vv) messages to stderr.')
def mine_command(input_path, min_supp, min_len, order_encoding, symmetry,
                 closed, temporal, simplify, export_dimacs, encode_only,
                 verify, max_models, max_conflicts, seed, output_format,
                 id_column, verbose):
    """
    Mine the frequent gradual patterns of a numerical dataset.
    """
    configure_logging(verbose)

    try:
        config = RunConfig(input_path=input_path, min_supp=min_supp,
                           min_len=min_len,
                           order_encoding=OrderEncoding(order_encoding),
                           symmetry=SymmetryMode(symmetry),
                           closed=closed, temporal=temporal,
                           simplify=simplify, export_dimacs=export_dimacs,
                           encode_only=encode_only, verify=verify,
                           max_models=max_models,
                           max_conflicts=max_conflicts, seed=seed,
                           output_format=output_format, id_column=id_column)
    except ValueError as error:
        raise click.UsageError(str(error))

    return run(config)


@click.command(name='gradsat-allsat')
@click.argument('cnf_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--max-models', type=click.IntRange(min=1),
              help='Stop after this many models.')
@click.option('--max-conflicts', type=click.IntRange(min=1),
              help='Stop after this many solver conflicts.')
@click.option('--seed', default=0, show_default=True, type=int,
              help='Seed of the solver random generator.')
@click.option('-v', '--verbose', count=True,
              help='Log INFO (-v) or DEBUG (-vv) messages to stderr.')
def allsat_command(cnf_path, max_models, max_conflicts, seed, verbose):
    """
    Print every model of a DIMACS CNF file, one per line.
    """
    configure_logging(verbose)
    config = SolverConfig(seed=seed, max_models=max_models,
                          max_conflicts=max_conflicts)
    return enumerate_file(cnf_path, config)


# --- Entry points

def main(args=None, command=mine_command):
    """
    Run a command on 'args' (default: sys.argv[1:]) and return its exit
    code instead of exiting.
    """
    try:
        code = command.main(args=args, prog_name=command.name,
                            standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_USAGE

    return EXIT_OK if code is None else code


def run_main():
    """
    'gradsat' console script.
    """
    sys.exit(main())


def run_allsat_main():
    """
    'gradsat-allsat' console script.
    """
    sys.exit(main(command=allsat_command))

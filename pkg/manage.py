#!/usr/bin/env python3
"""
Management script for cliquehom.

Exposes the cliquehom command line plus maintenance commands that check the
gadget library and show the resolved configuration.
"""

import os
import sys

import click

# Add the package directory to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cliquehom.cli import cli
from cliquehom.complex.io import dumps
from cliquehom.exceptions import CliqueHomException
from cliquehom.gadgets import build_gadget, list_gadgets, verify_gadget


@cli.command('check-gadgets')
@click.option('--include-slow', is_flag=True, help='Also build the Pythagorean gadgets')
@click.pass_obj
def check_gadgets(toolkit, include_slow):
    """Build and verify every gadget in the library."""
    failures = 0
    for name in list_gadgets():
        if name.startswith('pyth') and not include_slow:
            click.echo(f"⏭️  {name}: skipped (use --include-slow)")
            continue
        try:
            verdict = verify_gadget(build_gadget(name))
        except CliqueHomException as e:
            click.echo(f"❌ {name}: {e.message}")
            failures += 1
            continue
        if verdict.passes:
            click.echo(f"✅ {name}: f={tuple(verdict.f_vector)} lifted={verdict.lifted_subspace_dim}")
        else:
            click.echo(f"❌ {name}: {'; '.join(verdict.reasons)}")
            failures += 1
    toolkit.logger.info(f"Gadget check finished with {failures} failure(s)")
    if failures:
        sys.exit(1)


@cli.command('show-config')
@click.pass_obj
def show_config(toolkit):
    """Show the resolved configuration."""
    click.echo(f"⚙️  Configuration: {toolkit.config_name}")
    click.echo(dumps(toolkit.config.to_dict()), nl=False)


if __name__ == '__main__':
    if len(sys.argv) == 1:
        click.echo("cliquehom management CLI")
        click.echo("Available commands:")
        click.echo("  python manage.py betti --graph G --dim L   - Decide reduced homology")
        click.echo("  python manage.py reduce --circuit FILE     - Reduce a circuit to a graph")
        click.echo("  python manage.py gadget list               - List library gadgets")
        click.echo("  python manage.py check-gadgets             - Verify the gadget library")
        click.echo("  python manage.py show-config               - Show resolved configuration")
        click.echo("")
        click.echo("Use 'python manage.py COMMAND --help' for more info on a command.")
    else:
        cli(prog_name='manage.py')

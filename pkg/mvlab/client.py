#!/usr/bin/env python
"""
client.py
"""
import click

from mvlab.commands.algebra import phase_system_cmd, traces_cmd
from mvlab.commands.config import config_cmd
from mvlab.commands.counterexample import counterexample_cmd
from mvlab.commands.domains import domain_cells_cmd
from mvlab.commands.meanvalue import mv_padic_cmd, mv_real_cmd, transfer_check_cmd
from mvlab.commands.padic import hensel_cmd
from mvlab.commands.restriction import (
    corollary_ratio_cmd,
    nbya_report_cmd,
    restriction_estimate_cmd,
)
from mvlab.commands.version import version_cmd
from mvlab.commands.vinogradov import vinogradov_cmd, vinogradov_fit_cmd

COMMANDS = (
    traces_cmd,
    phase_system_cmd,
    domain_cells_cmd,
    mv_padic_cmd,
    mv_real_cmd,
    transfer_check_cmd,
    restriction_estimate_cmd,
    corollary_ratio_cmd,
    nbya_report_cmd,
    vinogradov_cmd,
    vinogradov_fit_cmd,
    counterexample_cmd,
    hensel_cmd,
    config_cmd,
    version_cmd,
)


@click.group()
def entry_point():
    """
    Mean values of exponential sums over real and p-adic sparse domains,
    Vinogradov solution counts with algebraic indeterminates, and the
    p-adic paraboloid counterexample
    """


for command in COMMANDS:
    entry_point.add_command(command)


def run():
    """
    Main function for command-line interface.
    """
    entry_point()


if __name__ == "__main__":
    run()

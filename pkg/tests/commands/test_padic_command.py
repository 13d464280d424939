"""
tests/commands/test_padic_command.py
"""
from click.testing import CliRunner

from tests.fixtures import set_test_config


def test_hensel_command(set_test_config, tmp_path):
    from mvlab.commands.padic import hensel_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    result = runner.invoke(hensel_cmd, ["--p", "5", "--K", "2"])
    assert result.exit_code == 0
    assert result.output == "7\n"
    assert not list(tmp_path.glob("*.csv"))

    output = str(tmp_path / "hensel.csv")
    result = runner.invoke(hensel_cmd, ["--p", "13", "--K", "1", "--output", output])
    assert result.exit_code == 0
    assert result.output == "5\n"
    assert read_csv(output) == [{"p": "13", "K": "1", "xi": "5", "digits": "5"}]


def test_hensel_unsupported_prime(set_test_config):
    from mvlab.commands.padic import hensel_cmd

    runner = CliRunner()
    result = runner.invoke(hensel_cmd, ["--p", "7", "--K", "2"])
    assert result.exit_code == 1
    assert "Error:" in result.output

"""
tests/commands/test_meanvalue_commands.py
"""
import os

import pytest
from click.testing import CliRunner

from tests.fixtures import coefficients_path, set_test_config

EXPERIMENT_CONFIG = os.path.abspath(os.path.join(".", "tests", "testdata", "experiment.cfg"))
UNKNOWN_KEY_CONFIG = os.path.abspath(
    os.path.join(".", "tests", "testdata", "experiment-unknown-key.cfg")
)


def test_mv_padic_command(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import mv_padic_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    result = runner.invoke(mv_padic_cmd, ["--p", "3", "--K", "1", "--r", "4"])
    assert result.exit_code == 0
    assert result.output.startswith("p-adic mean value ")
    assert result.output.endswith(" over 27 cells\n")
    path = str(tmp_path / "mv-padic.csv")
    with open(path) as csvfile:
        comment = csvfile.readline()
    assert comment.startswith("# command=mv-padic; system=parabola; p=3; K=1; sigma=0; r=4.0;")
    (row,) = read_csv(path)
    assert row["sigma"] == "0,0"
    assert row["sampler"] == "all-ones"
    assert float(row["value"]) == pytest.approx(15)
    assert float(row["denominator"]) == 3
    assert float(row["ratio"]) == pytest.approx(5)
    assert float(row["error_bound"]) == 0


def test_mv_padic_coefficients_file(set_test_config, coefficients_path, tmp_path):
    from mvlab.commands.meanvalue import mv_padic_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    result = runner.invoke(
        mv_padic_cmd,
        ["--p", "3", "--K", "1", "--r", "2", "--coefficients", coefficients_path],
    )
    assert result.exit_code == 0
    (row,) = read_csv(str(tmp_path / "mv-padic.csv"))
    assert row["sampler"] == "file"
    assert float(row["value"]) == pytest.approx(7)
    assert float(row["ratio"]) == pytest.approx(1)


def test_mv_padic_threads_give_identical_files(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import mv_padic_cmd

    runner = CliRunner()
    contents = []
    for threads in ("1", "4"):
        output = str(tmp_path / ("threads-%s.csv" % threads))
        result = runner.invoke(
            mv_padic_cmd,
            [
                "--system", "paraboloid", "--p", "3", "--K", "2", "--r", "4",
                "--sampler", "random-phases", "--seed", "3", "--threads", threads,
                "--output", output,
            ],
        )
        assert result.exit_code == 0
        with open(output, "rb") as csvfile:
            contents.append(csvfile.read())
    assert contents[0] == contents[1]


def test_mv_padic_errors(set_test_config):
    from mvlab.commands.meanvalue import mv_padic_cmd

    runner = CliRunner()
    result = runner.invoke(
        mv_padic_cmd, ["--p", "3", "--K", "1", "--r", "4", "--sigma", "0,1/2"]
    )
    assert result.exit_code == 1
    assert "is not an integer" in result.output

    result = runner.invoke(mv_padic_cmd, ["--p", "4", "--K", "1", "--r", "4"])
    assert result.exit_code == 1

    result = runner.invoke(
        mv_padic_cmd, ["--system", "moment:3", "--p", "3", "--K", "3", "--r", "4"]
    )
    assert result.exit_code == 3
    assert "budget" in result.output


def test_config_file(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import mv_padic_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    output = str(tmp_path / "from-file.csv")
    result = runner.invoke(mv_padic_cmd, ["--config", EXPERIMENT_CONFIG, "--output", output])
    assert result.exit_code == 0
    assert result.output.endswith(" over 729 cells\n")
    (row,) = read_csv(output)
    assert row["K"] == "2"

    # Flags override the file:
    result = runner.invoke(
        mv_padic_cmd, ["--K", "1", "--config", EXPERIMENT_CONFIG, "--output", output]
    )
    assert result.exit_code == 0
    (row,) = read_csv(output)
    assert row["K"] == "1"
    assert float(row["value"]) == pytest.approx(15)

    result = runner.invoke(mv_padic_cmd, ["--config", UNKNOWN_KEY_CONFIG])
    assert result.exit_code == 1
    assert "Unknown key 'kappa_max'" in result.output


def test_mv_real_command(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import mv_real_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    result = runner.invoke(mv_real_cmd, ["--p", "3", "--K", "1", "--r", "4"])
    assert result.exit_code == 0
    assert result.output.startswith("Real mean value ")
    assert result.output.endswith(", exact on a torus grid of 81 points\n")
    (row,) = read_csv(str(tmp_path / "mv-real.csv"))
    assert float(row["value"]) == pytest.approx(15, rel=1e-9)
    assert float(row["error_bound"]) == 0

    result = runner.invoke(
        mv_real_cmd, ["--p", "3", "--K", "1", "--r", "2", "--depth", "1", "--nodes", "2"]
    )
    assert result.exit_code == 0
    assert "from 16 nodes per cell" in result.output


def test_transfer_check_command(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import transfer_check_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    result = runner.invoke(
        transfer_check_cmd, ["--p", "3", "--K", "1", "--r", "4", "--samples", "2"]
    )
    assert result.exit_code == 0
    path = str(tmp_path / "transfer-check.csv")
    assert result.output == "Wrote 2 checks to %s\n" % path
    rows = read_csv(path)
    assert [row["index"] for row in rows] == ["0", "1"]
    assert all(row["passed"] == "true" for row in rows)
    assert all(row["sampler"] == "random-phases" for row in rows)


def test_mv_padic_precision(set_test_config, tmp_path):
    from mvlab.commands.meanvalue import mv_padic_cmd
    from mvlab.utils.csvfiles import read_csv

    runner = CliRunner()
    values = {}
    for precision in ("64", "200"):
        output = str(tmp_path / ("precision-%s.csv" % precision))
        result = runner.invoke(
            mv_padic_cmd,
            [
                "--system", "moment:3", "--p", "5", "--K", "1", "--r", "3",
                "--sampler", "random-phases", "--seed", "2",
                "--precision", precision, "--output", output,
            ],
        )
        assert result.exit_code == 0
        (row,) = read_csv(output)
        values[precision] = row["value"]
    assert len(values["200"]) > 30
    assert len(values["200"]) > len(values["64"])
    assert float(values["200"]) == pytest.approx(float(values["64"]), rel=1e-12)

"""
Tests for resolved experiment configs and key=value config files
"""
from collections import OrderedDict

import pytest


def test_comment_items_omit_run_options():
    from mvlab.models.config import ExperimentConfig

    config = ExperimentConfig(
        command="hensel",
        params=OrderedDict([("p", 5), ("big_k", 2), ("timing", False)]),
        seed=3, precision=80, threads=8, output="out.csv", progress=True,
        labels={"big_k": "K"},
    )
    assert config["p"] == 5
    assert config.get("missing", "default") == "default"
    assert list(config.comment_items().items()) == [
        ("command", "hensel"), ("p", 5), ("K", 2), ("timing", False),
        ("seed", 3), ("precision", 80),
    ]


def test_read_config_file(tmp_path):
    from mvlab.models.config import read_config_file
    from mvlab.utils.exceptions import InvalidSettings

    path = tmp_path / "experiment.cfg"
    path.write_text("# comment\nK = 2\nkappa-max=4\nsigma = 0,1/2\n", encoding="utf-8")
    assert read_config_file(str(path)) == OrderedDict(
        [("K", "2"), ("kappa_max", "4"), ("sigma", "0,1/2")]
    )

    path.write_text("this is not a key value line\n", encoding="utf-8")
    with pytest.raises(InvalidSettings):
        read_config_file(str(path))

    with pytest.raises(InvalidSettings):
        read_config_file(str(tmp_path / "missing.cfg"))

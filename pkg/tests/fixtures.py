"""
tests/fixtures.py
"""
import os
import shutil

import pytest

from .utils import unload_modules

TEST_CONFIG = os.path.abspath(os.path.join(".", "tests", "testdata", "mvlab-test.cfg"))


@pytest.fixture
def set_test_config(request, tmp_path):
    os.environ["MVLAB_CONFIG_PATH"] = TEST_CONFIG
    os.environ["MVLAB_OUTPUT_DIR"] = str(tmp_path)
    unload_modules()

    def teardown():
        del os.environ["MVLAB_OUTPUT_DIR"]
        unload_modules()

    request.addfinalizer(teardown)


@pytest.fixture
def set_writable_config(request, tmp_path):
    """
    A copy of mvlab-test.cfg which tests may update
    """
    config_path = str(tmp_path / "mvlab.cfg")
    shutil.copyfile(TEST_CONFIG, config_path)
    os.environ["MVLAB_CONFIG_PATH"] = config_path
    unload_modules()

    def teardown():
        os.environ["MVLAB_CONFIG_PATH"] = TEST_CONFIG
        unload_modules()

    request.addfinalizer(teardown)


@pytest.fixture
def coefficients_path():
    return os.path.abspath(
        os.path.join(".", "tests", "testdata", "coefficients-parabola-n3.csv")
    )

# -*- coding: utf-8 -*-
"""
Miscellaneous utility functions.
"""
import os

import appdirs

from ..constants import APPNAME, APPAUTHOR


def create_config_path_if_necessary():
    """
    Create path for saving mvlab.cfg if it doesn't already exist.
    """
    appdir_path = appdirs.user_data_dir(APPNAME, APPAUTHOR)
    if not os.path.exists(appdir_path):
        os.makedirs(appdir_path)
    return appdir_path


def resolve_output_directory(configured=""):
    """
    Directory for CSV output: $MVLAB_OUTPUT_DIR if set, otherwise the
    configured output_directory setting, otherwise the current directory.
    """
    output_directory = os.environ.get("MVLAB_OUTPUT_DIR") or configured or os.getcwd()
    if not os.path.exists(output_directory):
        os.makedirs(output_directory)
    return output_directory

"""
Model class for the settings saved to disk in mvlab.cfg
"""
import os

from ...constants import APPNAME
from ...utils import create_config_path_if_necessary
from .general import GeneralSettings
from .budgets import BudgetSettings
from .quadrature import QuadratureSettings

SECTIONS = ("general", "budgets", "quadrature")


class Settings:
    """
    Model class for the settings saved to disk in mvlab.cfg
    """

    def __init__(self, config_path):
        super().__init__()

        # The location on disk of mvlab.cfg
        # e.g. "/home/jsmith/.local/share/mvlab/mvlab.cfg":
        self._config_path = config_path

        self.models = dict(
            general=GeneralSettings(),
            budgets=BudgetSettings(),
            quadrature=QuadratureSettings(),
        )

        self.set_default_config()

    @property
    def general(self):
        """
        General settings (precision, threads, seed, output directory)
        """
        return self.models["general"]

    @property
    def budgets(self):
        """
        Enumeration budgets
        """
        return self.models["budgets"]

    @property
    def quadrature(self):
        """
        Quadrature settings for real mean values
        """
        return self.models["quadrature"]

    def section_for_field(self, key):
        """
        Return the settings section which owns a field name
        """
        for section in SECTIONS:
            if key in self.models[section].fields:
                return self.models[section]
        raise KeyError(key)

    @property
    def fields(self):
        """
        All field names, across sections
        """
        return [field for section in SECTIONS for field in self.models[section].fields]

    def __setitem__(self, key, item):
        """
        Set a config item by field name.
        """
        self.section_for_field(key).mvlab_config[key] = item

    def __getitem__(self, key):
        """
        Get a config item by field name.
        """
        return self.section_for_field(key).mvlab_config[key]

    def __getattr__(self, name):
        """
        Get a config item by field name as an instance attribute

        A shortcut, allowing you to access settings as:

          settings.precision
          settings.cell_budget

        instead of:

          settings.general.precision
          settings.budgets.cell_budget
        """
        if name in ("models", "_config_path") + SECTIONS:
            return self.__getattribute__(name)
        for section in SECTIONS:
            model = self.models[section]
            if name in model.fields:
                return getattr(model, name)
        return self.__getattribute__(name)

    def set_default_config(self):
        """
        Set default values for configuration parameters
        that will appear in mvlab.cfg
        """
        for section in SECTIONS:
            self.models[section].set_defaults()

    @property
    def config_path(self):
        """
        The location on disk of mvlab.cfg
        e.g. "/home/jsmith/.local/share/mvlab/mvlab.cfg"
        """
        if not self._config_path:
            appdir_path = create_config_path_if_necessary()
            self._config_path = os.path.join(appdir_path, APPNAME + ".cfg")
        return self._config_path

    @config_path.setter
    def config_path(self, config_path):
        """
        The location on disk of mvlab.cfg
        """
        self._config_path = config_path

"""
Model class for the general settings saved to disk in mvlab.cfg
"""
import psutil

from .base import BaseSettings


class GeneralSettings(BaseSettings):
    """
    Model class for the general settings saved to disk in mvlab.cfg
    """

    def __init__(self):
        super().__init__()

        self.fields = [
            "precision",
            "threads",
            "seed",
            "output_directory",
        ]

        self.default = dict(
            precision=64,
            threads=psutil.cpu_count(logical=False) or 1,
            seed=0,
            output_directory="",
        )

        self.converters = dict(precision=int, threads=int, seed=int)

    @property
    def precision(self):
        """
        Working precision (mantissa bits) for unit roots
        """
        return int(self.mvlab_config["precision"])

    @precision.setter
    def precision(self, precision):
        """
        Set working precision (mantissa bits) for unit roots
        """
        self.mvlab_config["precision"] = precision

    @property
    def threads(self):
        """
        Maximum number of worker threads
        """
        return int(self.mvlab_config["threads"])

    @threads.setter
    def threads(self, threads):
        """
        Set maximum number of worker threads
        """
        self.mvlab_config["threads"] = threads

    @property
    def seed(self):
        """
        Default seed for the pseudo-random coefficient samplers
        """
        return int(self.mvlab_config["seed"])

    @seed.setter
    def seed(self, seed):
        """
        Set default seed for the pseudo-random coefficient samplers
        """
        self.mvlab_config["seed"] = seed

    @property
    def output_directory(self):
        """
        Directory for CSV output ("" means $MVLAB_OUTPUT_DIR or the cwd)
        """
        return self.mvlab_config["output_directory"]

    @output_directory.setter
    def output_directory(self, output_directory):
        """
        Set directory for CSV output
        """
        self.mvlab_config["output_directory"] = output_directory

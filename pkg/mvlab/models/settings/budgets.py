"""
Model class for the enumeration budgets saved to disk in mvlab.cfg
"""
from .base import BaseSettings


class BudgetSettings(BaseSettings):
    """
    Model class for the enumeration budgets saved to disk in mvlab.cfg

    Each budget bounds the size of one kind of enumeration, guarding
    against accidental exponential blowup for large K or N.
    """

    def __init__(self):
        super().__init__()

        self.fields = [
            "cell_budget",
            "key_budget",
            "pair_budget",
            "spill_threshold",
            "residue_budget",
        ]

        self.default = dict(
            cell_budget=10 ** 8,
            key_budget=10 ** 8,
            pair_budget=10 ** 8,
            spill_threshold=10 ** 7,
            residue_budget=10 ** 9,
        )

        self.converters = {field: int for field in self.fields}

    @property
    def cell_budget(self):
        """
        Maximum number of cells of a sparse domain to enumerate
        """
        return int(self.mvlab_config["cell_budget"])

    @cell_budget.setter
    def cell_budget(self, cell_budget):
        self.mvlab_config["cell_budget"] = cell_budget

    @property
    def key_budget(self):
        """
        Maximum number of s-tuples (moment keys) to enumerate
        """
        return int(self.mvlab_config["key_budget"])

    @key_budget.setter
    def key_budget(self, key_budget):
        self.mvlab_config["key_budget"] = key_budget

    @property
    def pair_budget(self):
        """
        Maximum number of pairs of s-tuples compared by brute force
        """
        return int(self.mvlab_config["pair_budget"])

    @pair_budget.setter
    def pair_budget(self, pair_budget):
        self.mvlab_config["pair_budget"] = pair_budget

    @property
    def spill_threshold(self):
        """
        Number of distinct keys above which merging switches
        from a hash map to sorting
        """
        return int(self.mvlab_config["spill_threshold"])

    @spill_threshold.setter
    def spill_threshold(self, spill_threshold):
        self.mvlab_config["spill_threshold"] = spill_threshold

    @property
    def residue_budget(self):
        """
        Maximum number of terms in the counterexample residue sums
        """
        return int(self.mvlab_config["residue_budget"])

    @residue_budget.setter
    def residue_budget(self, residue_budget):
        self.mvlab_config["residue_budget"] = residue_budget

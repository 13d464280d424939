"""mvlab/__version__.py"""

__title__ = "mvlab-python"
__description__ = (
    "A Python library for exponential-sum mean values over real and p-adic "
    "domains, trace phase systems and Vinogradov solution counts."
)
__url__ = "https://github.com/mvlab/mvlab-python"
__version__ = "0.1.0"
__author__ = "mvlab developers"
__author_email__ = "mvlab-dev@example.org"
__license__ = "GNU General Public License v3 (GPLv3)"

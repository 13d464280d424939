"""
The global Settings instance.

If the MVLAB_CONFIG_PATH environment variable is not set,
mvlab will determine an appropriate location for settings
using the Python appdirs library.  A .env file in the current
directory is read first, so MVLAB_* variables can be kept there.
"""
# pylint: disable=invalid-name
import os

from dotenv import load_dotenv

from mvlab.models.settings import Settings
from mvlab.models.settings.serialize import load_settings

load_dotenv()

settings = Settings(config_path=os.environ.get("MVLAB_CONFIG_PATH"))
load_settings()

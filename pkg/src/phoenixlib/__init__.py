"""
phoenixlib: political event data from news stories. Scrapes RSS feeds, codes
who-did-what-to-whom events from parse trees with CAMEO dictionaries and
writes daily event files.
"""

from phoenixlib import coder, dictionaries, enrich, ingest, pipeline, treebank
from phoenixlib._src.defaults.defaults_classes import default_settings as defaults
from phoenixlib._src.defaults.defaults_utility import SUPPORTED_PLOTTING_BACKENDS

from ._version import version as __version__

__all__ = [
    "SUPPORTED_PLOTTING_BACKENDS",
    "__version__",
    "coder",
    "defaults",
    "dictionaries",
    "enrich",
    "ingest",
    "pipeline",
    "treebank",
]

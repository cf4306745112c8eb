"""Normalized Laplacian spectral gap toolkit."""

from ._specgap import *  # noqa: F401,F403
from ._specgap import __doc__  # noqa: F401

__version__ = "0.1.0"

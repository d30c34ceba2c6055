"""Thermodynamics of a harmonic oscillator with zero-point energy."""

from ._zpe import *  # noqa: F401,F403
from ._zpe import __version__, run_cli

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

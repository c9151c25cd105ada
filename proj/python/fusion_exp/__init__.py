"""Fusion exponentiation over G_q^n with exponents in F_{q^n}."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

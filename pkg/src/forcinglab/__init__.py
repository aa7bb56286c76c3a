"""Exact tools for deciding which small tournaments are quasirandom-forcing.

Tournaments, induced copy counts, step tournamentons, symbolic densities and
verifiable disqualification certificates.
"""

__version__ = "0.1.0"

from .catalog import catalog
from .kernels import BACKEND
from .tournament import Tournament, format_code, parse_code

__all__ = ["BACKEND", "Tournament", "catalog", "format_code", "parse_code", "__version__"]

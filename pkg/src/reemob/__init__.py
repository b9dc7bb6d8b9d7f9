"""reemob: exact Moebius-function arithmetic for the simple small Ree groups.

The catalog module tabulates the subgroup classes of R(3^n) with their
Moebius values; inversion turns those into exact epimorphism counts and
generation probabilities; the oracle package independently verifies the
machinery on small permutation groups by brute force.
"""

from . import catalog, inversion, numtheory, oracle

__version__ = "0.1.0"

__all__ = ["catalog", "inversion", "numtheory", "oracle", "__version__"]

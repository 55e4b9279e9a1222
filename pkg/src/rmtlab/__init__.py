"""Random-matrix ensembles, last-passage percolation, RSK and Brownian path
functionals, with Monte Carlo checks of their distributional identities."""

from rmtlab.errors import CapacityError, ConvergenceError, ValidationError
from rmtlab.rng import RngStream

__all__ = ["CapacityError", "ConvergenceError", "RngStream", "ValidationError"]
__version__ = "0.1.0"

class SimulationError(ValueError):
    """
    Indicate that a Monte-Carlo estimate could not be computed.
    """


class SolveFailed(SimulationError):
    """
    Will be raised if the ridge regression system cannot be solved, e.g. for a degenerate feature matrix.
    """


class InvalidSimConfig(SimulationError):
    """
    Will be raised if a simulation configuration leaves its domain, e.g. less than one feature or sample.
    """

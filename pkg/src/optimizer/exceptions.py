class OptimizerError(ValueError):
    """
    Indicate that the optimal activation function of a regime cannot be determined.
    """


class DegenerateLeadingCoefficient(OptimizerError):
    """
    Will be raised if every coefficient of a polynomial vanishes, so it has no isolated roots.
    """


class TieBreakAmbiguous(OptimizerError):
    """
    Will be raised if alpha or psi1 sits on a threshold of the ridgeless case distinction.
    The optimum may not be unique there.
    """


class RootNotFound(OptimizerError):
    """
    Will be raised if the stationarity polynomial has no root in the admissible interval.
    """

class SynthesisError(ValueError):
    """
    Indicate that no activation function of the requested family realizes the target moments.
    """


class InvalidMoments(SynthesisError):
    """
    Will be raised if the target moments are inconsistent, e.g. mu2 < mu0^2 + mu1^2.
    """


class SolverDiverged(SynthesisError):
    """
    Will be raised if the saturation point cannot be found because the target ratio mu1^2 / mu_star^2 lies below
    the range attained by symmetric saturated linear functions.
    """

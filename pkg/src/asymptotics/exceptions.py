class AsymptoticsError(ValueError):
    """
    Indicate that an asymptotic formula cannot be evaluated for the given problem constants.
    """


class InterpolationThreshold(AsymptoticsError):
    """
    Will be raised if the ridgeless objective is requested at psi1 = psi2, where it is not defined.
    """


class InvalidParameters(AsymptoticsError):
    """
    Will be raised if the problem constants leave their domain, e.g. alpha outside [0, 1) or a non-positive F1.
    """

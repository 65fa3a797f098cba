class MomentError(ValueError):
    """
    Indicate that the Gaussian moments of an activation function could not be computed.
    """


class NonFiniteValue(MomentError):
    """
    Will be raised if the activation function or its weak derivative evaluates to NaN or infinity at a quadrature node.
    """


class NegativeMuStar(MomentError):
    """
    Will be raised if the nonlinear part mu_star^2 = mu2 - mu0^2 - mu1^2 comes out clearly negative.
    Cauchy-Schwarz forbids this, so the quadrature did not converge.
    """


class UnknownActivation(MomentError):
    """
    Will be raised if an activation function kind cannot be resolved by name.
    """


class InvalidActivationParameters(MomentError):
    """
    Will be raised if the parameters do not fit the requested kind, e.g. wrong count or a negative saturation level.
    """


class QuadratureError(MomentError):
    """
    Will be raised if a quadrature rule is requested with fewer nodes than needed for the documented accuracy.
    """

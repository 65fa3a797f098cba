from src.activation.ActivationSpec import ActivationKind, BaseActivation, LinearActivation, QuadraticActivation, \
    ReluActivation, SaturatedLinearActivation, ShiftedReluActivation, TanhActivation
from src.activation.exceptions import InvalidActivationParameters, UnknownActivation

# Number of parameters per builtin kind
PARAMETER_COUNT = {
    ActivationKind.LINEAR: (1, 2),
    ActivationKind.RELU: (0, 0),
    ActivationKind.SHIFTED_RELU: (1, 1),
    ActivationKind.TANH: (0, 0),
    ActivationKind.QUADRATIC: (3, 3),
    ActivationKind.SATURATED_LINEAR: (3, 3),
}

KIND_SEPARATOR = ':'
PARAMETER_SEPARATOR = ','


class ActivationFactory:
    """ Build builtin activation functions from a kind and its parameters.
    """

    @staticmethod
    def new(kind: ActivationKind, *params: float) -> BaseActivation:
        """
        Creates a new activation function object.
        :param kind: Builtin family, tabulated and affine functions are constructed directly
        :param params: Positional parameters in the order of the command line notation
        :return: Activation function implementing BaseActivation
        """
        try:
            low, high = PARAMETER_COUNT[kind]
        except KeyError as e:
            raise UnknownActivation(f"Kind {kind} cannot be built from parameters only.") from e
        if not low <= len(params) <= high:
            raise InvalidActivationParameters(f"{kind.value} takes {low}..{high} parameters, got {len(params)}.")

        if kind == ActivationKind.LINEAR:
            return LinearActivation(*params)
        if kind == ActivationKind.RELU:
            return ReluActivation()
        if kind == ActivationKind.SHIFTED_RELU:
            return ShiftedReluActivation(*params)
        if kind == ActivationKind.TANH:
            return TanhActivation()
        if kind == ActivationKind.QUADRATIC:
            return QuadraticActivation(*params)
        return SaturatedLinearActivation(*params)

    @classmethod
    def parse(cls, notation: str) -> BaseActivation:
        """
        Read the command line notation, e.g. "relu", "linear:1,0" or "satlin:0,1.2,0.8".
        :param notation: Kind name, optionally followed by a colon and comma separated parameters
        :return: Activation function implementing BaseActivation
        """
        name, _, raw_params = notation.strip().partition(KIND_SEPARATOR)
        try:
            kind = ActivationKind(name.strip().lower())
        except ValueError as e:
            raise UnknownActivation(f"Unknown activation function '{name}'.") from e

        params = []
        if raw_params.strip():
            try:
                params = [float(p) for p in raw_params.split(PARAMETER_SEPARATOR)]
            except ValueError as e:
                raise InvalidActivationParameters(f"Parameters of '{notation}' need to be numbers.") from e
        return cls.new(kind, *params)

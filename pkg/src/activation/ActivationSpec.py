import abc
from enum import Enum, unique
from math import isfinite
from typing import Callable, Dict, Tuple

import numpy as np

from src.activation.exceptions import InvalidActivationParameters


@unique
class ActivationKind(Enum):
    """ Define enums for each available activation function family.
    """

    LINEAR = 'linear'
    RELU = 'relu'
    SHIFTED_RELU = 'shifted-relu'
    TANH = 'tanh'
    QUADRATIC = 'quadratic'
    SATURATED_LINEAR = 'satlin'
    TABULATED = 'tabulated'
    AFFINE = 'affine'


class BaseActivation(metaclass=abc.ABCMeta):
    """ Scalar activation function sigma with a weak derivative, evaluated element-wise on arrays.
    """

    @abc.abstractmethod
    def value(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate sigma.
        :param x: Points of evaluation
        :return: sigma(x) with the shape of x
        """

    @abc.abstractmethod
    def weak_derivative(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate a representative of the weak derivative of sigma.
        :param x: Points of evaluation
        :return: sigma'(x) with the shape of x
        """

    @property
    @abc.abstractmethod
    def kind(self) -> ActivationKind:
        """
        Give the family of the activation function.
        :return: Activation kind enumeration value
        """

    @property
    def parameters(self) -> Dict[str, float]:
        return {}

    @property
    def kinks(self) -> Tuple[float, ...]:
        """
        Points where sigma or its weak derivative is not smooth. Quadrature panels are split there.
        """
        return ()

    @property
    def notation(self) -> str:
        """
        Command line notation, e.g. "linear:1,0".
        """
        params = self.parameters
        if not params:
            return self.kind.value
        return f"{self.kind.value}:" + ",".join(repr(float(v)) for v in params.values())

    def __call__(self, x):
        return self.value(np.asarray(x, dtype=np.float64))

    def __repr__(self):
        return f"{type(self).__name__}({self.notation})"


class LinearActivation(BaseActivation):
    def __init__(self, slope: float, intercept: float = 0.0):
        self.slope = float(slope)
        self.intercept = float(intercept)

    def value(self, x):
        return self.slope * x + self.intercept

    def weak_derivative(self, x):
        return np.full_like(x, self.slope, dtype=np.float64)

    @property
    def kind(self):
        return ActivationKind.LINEAR

    @property
    def parameters(self):
        return {'slope': self.slope, 'intercept': self.intercept}


class ReluActivation(BaseActivation):
    # The weak derivative at the kink is taken as 0
    def value(self, x):
        return np.maximum(x, 0.0)

    def weak_derivative(self, x):
        return np.where(x > 0, 1.0, 0.0)

    @property
    def kind(self):
        return ActivationKind.RELU

    @property
    def kinks(self):
        return (0.0,)


class ShiftedReluActivation(BaseActivation):
    """ sigma(x) = max(x - shift, 0)
    """

    def __init__(self, shift: float):
        self.shift = float(shift)

    def value(self, x):
        return np.maximum(x - self.shift, 0.0)

    def weak_derivative(self, x):
        return np.where(x > self.shift, 1.0, 0.0)

    @property
    def kind(self):
        return ActivationKind.SHIFTED_RELU

    @property
    def parameters(self):
        return {'shift': self.shift}

    @property
    def kinks(self):
        return (self.shift,)


class TanhActivation(BaseActivation):
    def value(self, x):
        return np.tanh(x)

    def weak_derivative(self, x):
        return 1.0 - np.tanh(x) ** 2

    @property
    def kind(self):
        return ActivationKind.TANH


class QuadraticActivation(BaseActivation):
    """ sigma(x) = a x^2 + b x + c
    """

    def __init__(self, a: float, b: float, c: float):
        self.a = float(a)
        self.b = float(b)
        self.c = float(c)

    def value(self, x):
        return (self.a * x + self.b) * x + self.c

    def weak_derivative(self, x):
        return 2 * self.a * x + self.b

    @property
    def kind(self):
        return ActivationKind.QUADRATIC

    @property
    def parameters(self):
        return {'a': self.a, 'b': self.b, 'c': self.c}


class SaturatedLinearActivation(BaseActivation):
    """ sigma(x) = mu0_offset + b * clamp(x, -s, s)
    The slope is b on (-s, s) and the function is flat outside. s = inf degenerates to a line.
    """

    def __init__(self, mu0_offset: float, b: float, s: float):
        if not s >= 0:
            raise InvalidActivationParameters(f"Saturation level needs to be non-negative, got s={s}.")
        self.mu0_offset = float(mu0_offset)
        self.b = float(b)
        self.s = float(s)

    def value(self, x):
        return self.mu0_offset + self.b * np.clip(x, -self.s, self.s)

    def weak_derivative(self, x):
        return np.where(np.abs(x) < self.s, self.b, 0.0)

    @property
    def kind(self):
        return ActivationKind.SATURATED_LINEAR

    @property
    def parameters(self):
        return {'mu0': self.mu0_offset, 'b': self.b, 's': self.s}

    @property
    def kinks(self):
        if not isfinite(self.s):
            return ()
        if self.s == 0:
            return (0.0,)
        return -self.s, self.s


class TabulatedActivation(BaseActivation):
    """ User supplied function and derivative. No numerical differentiation is performed.
    """

    def __init__(self, func: Callable, derivative: Callable, kinks: Tuple[float, ...] = (), name: str = 'tabulated'):
        if func is None or derivative is None:
            raise InvalidActivationParameters("Tabulated activation functions need both the function and its "
                                              "derivative.")
        self.func = func
        self.derivative = derivative
        self._kinks = tuple(sorted(float(k) for k in kinks))
        self.name = name

    def value(self, x):
        return np.asarray(self.func(x), dtype=np.float64)

    def weak_derivative(self, x):
        return np.asarray(self.derivative(x), dtype=np.float64)

    @property
    def kind(self):
        return ActivationKind.TABULATED

    @property
    def kinks(self):
        return self._kinks

    @property
    def notation(self):
        return self.name


class AffineActivation(BaseActivation):
    """ scale * base(x) + offset, e.g. to recenter a builtin function onto prescribed moments.
    """

    def __init__(self, base: BaseActivation, scale: float, offset: float):
        self.base = base
        self.scale = float(scale)
        self.offset = float(offset)

    def value(self, x):
        return self.scale * self.base.value(x) + self.offset

    def weak_derivative(self, x):
        return self.scale * self.base.weak_derivative(x)

    @property
    def kind(self):
        return ActivationKind.AFFINE

    @property
    def kinks(self):
        return self.base.kinks

    @property
    def notation(self):
        return f"{self.scale!r}*({self.base.notation})+{self.offset!r}"

from enum import Enum, unique
from math import inf
from typing import Any, Dict, NamedTuple

from src.activation.ActivationSpec import BaseActivation
from src.activation.dataclasses import Moments


@unique
class NormKind(Enum):
    """ Functional norm of sigma' that is minimized.
    """

    # E |sigma'(Z)|
    ONE = '1'
    # sqrt(E sigma'(Z)^2)
    TWO = '2'


class SynthesizedAF(NamedTuple):
    """
    af: Activation function with the target moments
    target: Moments to be realized
    norm_kind: Minimized norm
    norm_value: Minimal value of that norm
    s_param: Saturation point of saturated linear functions, infinite for linear ones
    """
    af: BaseActivation
    target: Moments
    norm_kind: NormKind
    norm_value: float
    s_param: float = inf

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.af.kind.value,
            'notation': self.af.notation,
            'parameters': self.af.parameters,
            'target': {'mu0': self.target.mu0, 'mu1': self.target.mu1, 'mu2': self.target.mu2},
            'norm': self.norm_kind.value,
            'norm_value': self.norm_value,
            's': self.s_param,
        }

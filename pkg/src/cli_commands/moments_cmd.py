from typing import Any, Dict, Optional

from src.ApplicationExceptions import BadInput
from src.activation.ActivationSpec import BaseActivation
from src.activation.activation_factories import ActivationFactory
from src.activation.exceptions import InvalidActivationParameters, UnknownActivation
from src.activation.moments import compute_moments, functional_norms
from src.cli_commands.io_util import Settings, write_json


def parse_af(notation: str) -> BaseActivation:
    try:
        return ActivationFactory.parse(notation)
    except (UnknownActivation, InvalidActivationParameters) as e:
        raise BadInput('--af', notation, str(e)) from e


def moments_report(af: BaseActivation, settings: Settings) -> Dict[str, Any]:
    m = compute_moments(af, settings.nodes, settings.window)
    norm1, norm2 = functional_norms(af, settings.nodes, settings.window)
    return {
        'af': af.notation,
        'mu0': m.mu0,
        'mu1': m.mu1,
        'mu2': m.mu2,
        'mu_star_sq': m.mu_star_sq,
        'zeta_sq': m.zeta_sq,
        'norm1': norm1,
        'norm2': norm2,
    }


def print_moments(notation: str, settings: Settings, out_f: Optional[str] = None):
    """
    Write the Gaussian moments and derivative norms of an activation function as JSON.
    :param notation: Command line notation of the activation function, e.g. "relu"
    :param settings: Quadrature settings
    :param out_f: File path or None for stdout
    """
    write_json(out_f, moments_report(parse_af(notation), settings))

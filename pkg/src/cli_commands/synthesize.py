from typing import Any, Dict, Optional

from src.activation.dataclasses import Moments
from src.activation.moments import compute_moments, functional_norms
from src.cli_commands.io_util import Settings, write_json
from src.synthesis.dataclasses import NormKind
from src.synthesis.synthesis import synthesize_l1, synthesize_l2


def synthesis_report(target: Moments, norm: NormKind, sign: int, settings: Settings) -> Dict[str, Any]:
    """
    Synthesize a minimal norm activation function and verify its moments by quadrature.
    :param target: Moments to be realized
    :param norm: Minimized norm
    :param sign: Sign of the quadratic coefficient for the L2 norm
    :param settings: Quadrature settings
    :return: JSON compatible dictionary
    """
    result = synthesize_l2(target, sign) if norm is NormKind.TWO else synthesize_l1(target)
    achieved = compute_moments(result.af, settings.nodes, settings.window)
    norm1, norm2 = functional_norms(result.af, settings.nodes, settings.window)

    report = result.to_json_dict()
    report['achieved'] = {'mu0': achieved.mu0, 'mu1': achieved.mu1, 'mu2': achieved.mu2}
    report['norm1'] = norm1
    report['norm2'] = norm2
    return report


def synthesize(mu0: float, mu1: float, mu2: float, norm: NormKind, sign: int, settings: Settings,
               out_f: Optional[str] = None):
    target = Moments.from_components(mu0, mu1, mu2 - mu0 * mu0 - mu1 * mu1)
    write_json(out_f, synthesis_report(target, norm, sign, settings))

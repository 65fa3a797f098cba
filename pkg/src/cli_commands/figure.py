"""
Data behind the four panels of the summary figure. Every panel is a list of labelled curves written into one CSV.
"""
from math import inf, sqrt
from typing import Dict, List, NamedTuple, Optional, Tuple

from src.asymptotics.dataclasses import Regime, RegimeParams
from src.cli_commands.curve import CurveRequest, OPTIMAL, curve_rows
from src.cli_commands.io_util import Settings, write_csv


class Panel(NamedTuple):
    description: str
    curves: List[Tuple[str, CurveRequest]]


def _psi1_sweep(af: str, tau: float) -> CurveRequest:
    return CurveRequest(regime=Regime.R1, sweep='psi1', lo=0.03, hi=9.0, points=300, scale='linear', af=af,
                        params=RegimeParams(psi1=1.0, psi2=3.0, alpha=0.0, f1=1.0, f_star=0.0, tau=tau))


def _lambda_sweep(af: str, f1: float, tau_sq: float) -> CurveRequest:
    return CurveRequest(regime=Regime.R2, sweep='lambda', lo=1e-3, hi=1e2, points=200, scale='log', af=af,
                        params=RegimeParams(psi1=inf, psi2=10.0, alpha=0.0, f1=f1, f_star=0.0, tau=sqrt(tau_sq)))


PANELS: Dict[str, Panel] = {
    'A': Panel('Ridgeless, noiseless: optimal activation function against ReLU over psi1', [
        ('optimal', _psi1_sweep(OPTIMAL, 0.0)),
        ('relu', _psi1_sweep('relu', 0.0)),
    ]),
    'B': Panel('Ridgeless with label noise tau = 1: optimal against linear activation function over psi1', [
        ('optimal', _psi1_sweep(OPTIMAL, 1.0)),
        ('linear', _psi1_sweep('linear:1', 1.0)),
    ]),
    'C': Panel('Highly overparameterized, F1 = 1: ReLU against optimal activation function over lambda', [
        ('relu, tau^2=10', _lambda_sweep('relu', 1.0, 10.0)),
        ('optimal, tau^2=10', _lambda_sweep(OPTIMAL, 1.0, 10.0)),
        ('relu, tau^2=5', _lambda_sweep('relu', 1.0, 5.0)),
        ('optimal, tau^2=5', _lambda_sweep(OPTIMAL, 1.0, 5.0)),
    ]),
    'D': Panel('Highly overparameterized, F1 = 10: ReLU against optimal activation function over lambda', [
        ('relu, tau^2=5', _lambda_sweep('relu', 10.0, 5.0)),
        ('optimal, tau^2=5', _lambda_sweep(OPTIMAL, 10.0, 5.0)),
    ]),
}


def figure(panel: str, settings: Settings, out_f: Optional[str] = None):
    """
    Write all curves of a figure panel into one CSV with a leading series column.
    :param panel: A, B, C or D
    :param settings: Quadrature and optimizer settings
    :param out_f: File path or None for stdout
    """
    preset = PANELS[panel]
    rows = []
    for label, request in preset.curves:
        rows.extend([label] + row for row in curve_rows(request, settings))
    sweep = preset.curves[0][1].sweep
    params = {'panel': panel, 'description': preset.description,
              'curves': {label: request.as_dict() for label, request in preset.curves}}
    write_csv(out_f, ('series', sweep, 'error', 'sensitivity', 'objective', 'flag'), rows, params=params,
              digits=settings.digits)

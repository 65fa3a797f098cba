import logging
from typing import Any, Dict, List, NamedTuple, Optional

import numpy as np

from src.ApplicationExceptions import BadInput
from src.activation.moments import compute_moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.exceptions import AsymptoticsError
from src.asymptotics.regimes import objective
from src.cli_commands.io_util import Settings, write_csv
from src.cli_commands.moments_cmd import parse_af
from src.cli_commands.optimize import solve
from src.optimizer.exceptions import OptimizerError

OPTIMAL = 'optimal'
# Command line name of a swept constant and its field in RegimeParams
SWEEPS = {
    'psi1': 'psi1',
    'psi2': 'psi2',
    'lambda': 'lam',
    'alpha': 'alpha',
}
SCALES = ('linear', 'log')
COLUMNS = ('error', 'sensitivity', 'objective', 'flag')


class CurveRequest(NamedTuple):
    """
    regime: Regime whose objective is evaluated
    sweep: Name of the swept constant, one of SWEEPS
    lo, hi, points, scale: Grid of the swept constant
    af: Notation of the activation function or "optimal" for the optimum at every grid point
    params: Constants that are not swept
    """
    regime: Regime
    sweep: str
    lo: float
    hi: float
    points: int
    scale: str
    af: str
    params: RegimeParams

    def validate(self) -> 'CurveRequest':
        if self.sweep not in SWEEPS:
            raise BadInput('--sweep', self.sweep, f"expected one of {', '.join(SWEEPS)}")
        if self.scale not in SCALES:
            raise BadInput('--scale', self.scale, "expected linear or log")
        if self.points < 2:
            raise BadInput('--points', str(self.points), "at least two points are needed")
        if not self.lo < self.hi:
            raise BadInput('--lo', str(self.lo), f"needs to be below --hi={self.hi}")
        if self.scale == 'log' and self.lo <= 0:
            raise BadInput('--lo', str(self.lo), "a log scale needs a positive lower end")
        return self

    def grid(self) -> np.ndarray:
        if self.scale == 'log':
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)

    def as_dict(self) -> Dict[str, Any]:
        return {'regime': self.regime.value, 'sweep': self.sweep, 'lo': self.lo, 'hi': self.hi,
                'points': self.points, 'scale': self.scale, 'af': self.af, 'params': self.params.as_dict()}


def curve_rows(request: CurveRequest, settings: Settings) -> List[List[Any]]:
    """
    Evaluate error, sensitivity and objective along the sweep. Points where the objective is not defined keep empty
    values and name the reason in the flag column.
    :param request: Validated CurveRequest
    :param settings: Quadrature and optimizer settings
    :return: Rows (sweep value, error, sensitivity, objective, flag)
    """
    moments = None
    if request.af != OPTIMAL:
        moments = compute_moments(parse_af(request.af), settings.nodes, settings.window)

    rows = []
    field = SWEEPS[request.sweep]
    for value in request.grid():
        params = request.params._replace(**{field: float(value)})
        try:
            if moments is None:
                optimum = solve(request.regime, params, settings)
                evaluation = objective(request.regime, optimum.canonical_moments, params)
                rows.append([float(value), evaluation.error, evaluation.sensitivity, optimum.objective, ''])
            else:
                evaluation = objective(request.regime, moments, params.validate())
                rows.append([float(value), evaluation.error, evaluation.sensitivity, evaluation.objective, ''])
        except (AsymptoticsError, OptimizerError) as e:
            logging.debug(f"No objective at {request.sweep}={value}: {e}")
            rows.append([float(value), None, None, None, type(e).__name__])
    return rows


def curve(request: CurveRequest, settings: Settings, out_f: Optional[str] = None):
    request.validate()
    rows = curve_rows(request, settings)
    write_csv(out_f, (request.sweep,) + COLUMNS, rows, params=request.as_dict(), digits=settings.digits)
